#include "polydig/digraph_io.hpp"

#include <fstream>
#include <sstream>

#include "polydig/error.hpp"

namespace polydig {

namespace {

constexpr char kHeader = '&';
constexpr int kOffset = 63;

std::string_view strip_eol(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_digraph6(const Digraph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(kHeader);
  out.push_back(static_cast<char>(n + kOffset));
  const int bits = n * n;
  int acc = 0, filled = 0;
  for (int b = 0; b < bits; ++b) {
    const int i = b / n, j = b % n;
    acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(acc + kOffset));
      acc = filled = 0;
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Digraph from_digraph6(std::string_view line) {
  line = strip_eol(line);
  if (line.size() < 2 || line[0] != kHeader)
    throw InputError("digraph6: record must start with '&' followed by an order byte");
  for (std::size_t i = 1; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < kOffset || c > 126) throw InputError("digraph6: byte outside the printable range 63..126");
  }
  const int n = static_cast<unsigned char>(line[1]) - kOffset;
  if (n > Digraph::kMaxOrder)
    throw InputError("digraph6: orders above " + std::to_string(Digraph::kMaxOrder) + " are not supported");
  const int bits = n * n;
  const std::size_t expected = 2 + static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != expected)
    throw InputError("digraph6: expected " + std::to_string(expected) + " bytes for order " +
                     std::to_string(n) + ", got " + std::to_string(line.size()));
  Digraph g(n);
  for (std::size_t k = 2; k < line.size(); ++k) {
    const int v = static_cast<unsigned char>(line[k]) - kOffset;
    for (int s = 0; s < 6; ++s) {
      const int b = static_cast<int>(k - 2) * 6 + s;
      const bool bit = (v >> (5 - s)) & 1;
      if (b >= bits) {
        if (bit) throw InputError("digraph6: non-zero padding bits");
        continue;
      }
      if (!bit) continue;
      const int i = b / n, j = b % n;
      if (i == j) throw InputError("digraph6: loops are not allowed");
      g.add_edge(i, j);
    }
  }
  return g;
}

void read_digraph6_stream(std::istream& in, const std::function<void(Digraph, std::size_t)>& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = strip_eol(line);
    if (body.empty()) continue;
    Digraph g;
    try {
      g = from_digraph6(body);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    fn(std::move(g), lineno);
  }
}

std::vector<Digraph> read_digraph6_all(std::istream& in) {
  std::vector<Digraph> out;
  read_digraph6_stream(in, [&](Digraph g, std::size_t) { out.push_back(std::move(g)); });
  return out;
}

std::string to_edge_list(const Digraph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Digraph from_edge_list(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  int n = -1;
  Digraph g;
  auto fail = [&](const std::string& msg) {
    throw InputError("edge list line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::istringstream is(line);
    if (n < 0) {
      if (!(is >> n) || n < 0 || n > Digraph::kMaxOrder) fail("expected an order in [0, 62]");
      std::string extra;
      if (is >> extra) fail("unexpected token after the order");
      g = Digraph(n);
      continue;
    }
    long long u, v;
    if (!(is >> u >> v)) fail("expected a 'u v' pair");
    std::string extra;
    if (is >> extra) fail("unexpected token after the edge");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex index out of range");
    if (u == v) fail("loops are not allowed");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw InputError("edge list: missing order line");
  return g;
}

GraphFormat sniff_format(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  char c;
  while (in.get(c)) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == kHeader ? GraphFormat::digraph6 : GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

std::vector<Digraph> read_digraph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  if (format == GraphFormat::digraph6) return read_digraph6_all(in);
  std::vector<Digraph> out;
  out.push_back(from_edge_list(in));
  return out;
}

}  // namespace polydig

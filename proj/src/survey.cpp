#include "polydig/survey.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "polydig/digraph_io.hpp"
#include "polydig/error.hpp"

namespace polydig {

namespace {

// ---- off-diagonal codes ------------------------------------------------------
//
// For canonicalisation only the n(n-1) off-diagonal entries matter. They are
// packed in row-major order with (0,1) as the most significant bit, so that
// ordering these codes numerically agrees with ordering full codes.

int offdiag_bits(int n) { return n * (n - 1); }

int offdiag_bit(int n, int i, int j) {
  const int p = i * (n - 1) + (j < i ? j : j - 1);
  return offdiag_bits(n) - 1 - p;
}

std::uint64_t offdiag_code(const Digraph& g) {
  const int n = g.order();
  std::uint64_t c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) c |= 1ULL << offdiag_bit(n, i, j);
  return c;
}

Digraph from_offdiag(int n, std::uint64_t c) {
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && ((c >> offdiag_bit(n, i, j)) & 1U)) g.add_edge(i, j);
  return g;
}

// Per-permutation byte lookup tables: the image of a code under a vertex
// permutation is the OR of one table entry per code byte.
class Canonicalizer {
 public:
  explicit Canonicalizer(int n) : n_(n), nbytes_((offdiag_bits(n) + 7) / 8) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    // (bit index -> (i, j)) for the source positions.
    std::vector<std::pair<int, int>> at(static_cast<std::size_t>(offdiag_bits(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) at[static_cast<std::size_t>(offdiag_bit(n, i, j))] = {i, j};
    do {
      const std::size_t base = table_.size();
      table_.resize(base + static_cast<std::size_t>(nbytes_) * 256, 0);
      for (int b = 0; b < nbytes_; ++b)
        for (int v = 0; v < 256; ++v) {
          std::uint64_t img = 0;
          for (int s = 0; s < 8; ++s) {
            const int bit = b * 8 + s;
            if (bit >= offdiag_bits(n) || !((v >> s) & 1)) continue;
            const auto [i, j] = at[static_cast<std::size_t>(bit)];
            img |= 1ULL << offdiag_bit(n, perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
          }
          table_[base + static_cast<std::size_t>(b) * 256 + static_cast<std::size_t>(v)] = img;
        }
      ++perms_;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t perm_count() const { return perms_; }

  std::uint64_t image(std::size_t perm, std::uint64_t code) const {
    const std::uint64_t* t = table_.data() + perm * static_cast<std::size_t>(nbytes_) * 256;
    std::uint64_t img = 0;
    for (int b = 0; b < nbytes_; ++b, t += 256) img |= t[(code >> (8 * b)) & 0xFF];
    return img;
  }

  std::uint64_t canonical(std::uint64_t code) const {
    std::uint64_t best = code;
    for (std::size_t p = 0; p < perms_; ++p) best = std::min(best, image(p, code));
    return best;
  }

  int order() const { return n_; }

 private:
  int n_;
  int nbytes_;
  std::size_t perms_ = 0;
  std::vector<std::uint64_t> table_;
};

const Canonicalizer& canonicalizer(int n) {
  static std::array<std::once_flag, kMaxGeneratedOrder + 1> once;
  static std::array<std::unique_ptr<Canonicalizer>, kMaxGeneratedOrder + 1> cache;
  const auto k = static_cast<std::size_t>(n);
  std::call_once(once[k], [&] { cache[k] = std::make_unique<Canonicalizer>(n); });
  return *cache[k];
}

std::uint64_t canonical_offdiag_bruteforce(const Digraph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = g.edges();
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t c = 0;
    for (auto [u, v] : edges)
      c |= 1ULL << offdiag_bit(n, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::uint64_t canonical_offdiag(const Digraph& g) {
  if (g.order() <= 1) return 0;
  if (g.order() <= kMaxGeneratedOrder) return canonicalizer(g.order()).canonical(offdiag_code(g));
  return canonical_offdiag_bruteforce(g);
}

// ---- census ------------------------------------------------------------------

constexpr std::size_t kChunkSize = 1024;
constexpr std::size_t kStreamBatch = 1 << 16;

struct Tally {
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t total = 0;
  std::vector<PseudoNormalWitness> witnesses;
  std::vector<std::string> quarantined;

  void merge(Tally&& o) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    total += o.total;
    witnesses.insert(witnesses.end(), std::make_move_iterator(o.witnesses.begin()),
                     std::make_move_iterator(o.witnesses.end()));
    quarantined.insert(quarantined.end(), std::make_move_iterator(o.quarantined.begin()),
                       std::make_move_iterator(o.quarantined.end()));
  }
};

PseudoNormalWitness make_witness(const Digraph& g, double eps) {
  bool sensitive;
  try {
    sensitive = !is_polygonal_numeric(g, eps / 2);
  } catch (const NumericalError&) {
    sensitive = true;
  }
  return {to_digraph6(g), sensitive};
}

void classify_into(const Digraph& g, double eps, bool pairing, Tally& t) {
  ++t.total;
  std::uint64_t weight = 1;
  if (pairing) {
    const auto c = canonical_offdiag(g);
    const auto cbar = canonical_offdiag(complement(g));
    if (c > cbar) return;
    weight = c < cbar ? 2 : 1;
  }
  ClassLabel label;
  try {
    label = classify(g, eps);
  } catch (const NumericalError&) {
    t.quarantined.push_back(to_digraph6(g));
    return;
  }
  t.counts[static_cast<std::size_t>(label)] += weight;
  if (label == ClassLabel::pseudo_normal) {
    t.witnesses.push_back(make_witness(g, eps));
    if (weight == 2) t.witnesses.push_back(make_witness(complement(g), eps));
  }
}

// Chunked map over [0, count) with per-worker tallies merged in worker order.
Tally run_chunks(const std::vector<Digraph>& graphs, double eps, bool pairing, int jobs) {
  const std::size_t count = graphs.size();
  const std::size_t chunks = (count + kChunkSize - 1) / kChunkSize;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), chunks));
  std::vector<Tally> local(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](std::size_t w) {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      const std::size_t end = std::min(count, (c + 1) * kChunkSize);
      for (std::size_t i = c * kChunkSize; i < end; ++i) classify_into(graphs[i], eps, pairing, local[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  Tally out;
  for (auto& l : local) out.merge(std::move(l));
  return out;
}

void finish(SurveyReport& r, Tally& t) {
  r.normal = t.counts[static_cast<std::size_t>(ClassLabel::normal)];
  r.restricted_normal = t.counts[static_cast<std::size_t>(ClassLabel::restricted_normal)];
  r.pseudo_normal = t.counts[static_cast<std::size_t>(ClassLabel::pseudo_normal)];
  r.non_polygonal = t.counts[static_cast<std::size_t>(ClassLabel::non_polygonal)];
  r.polygonal_total = r.normal + r.restricted_normal + r.pseudo_normal;
  r.digraphs_total = t.total;
  std::sort(t.witnesses.begin(), t.witnesses.end(),
            [](const auto& a, const auto& b) { return a.digraph6 < b.digraph6; });
  std::sort(t.quarantined.begin(), t.quarantined.end());
  r.pseudo_normal_witnesses = std::move(t.witnesses);
  r.quarantined = std::move(t.quarantined);
}

void check_pairing_order(int n, bool pairing) {
  if (pairing && n > kMaxCanonicalOrder)
    throw std::invalid_argument("complement pairing needs canonical forms, available up to order " +
                                std::to_string(kMaxCanonicalOrder));
}

double effective_eps(const CensusOptions& o, int n) { return o.eps > 0 ? o.eps : default_eps(n); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct StopReading {};

}  // namespace

// ---- canonical forms ---------------------------------------------------------

CanonicalCode labeled_code(const Digraph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw std::invalid_argument("labeled_code: order above 8");
  CanonicalCode c{n, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.has_edge(i, j)) c.bits |= 1ULL << (n * n - 1 - (i * n + j));
  return c;
}

Digraph from_code(const CanonicalCode& c) {
  const int n = c.order;
  if (n < 0 || n > kMaxCanonicalOrder) throw std::invalid_argument("from_code: order out of range");
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((c.bits >> (n * n - 1 - (i * n + j))) & 1U) {
        if (i == j) throw std::invalid_argument("from_code: loop bit set");
        g.add_edge(i, j);
      }
  return g;
}

CanonicalCode canonical_form(const Digraph& g) {
  if (g.order() > kMaxCanonicalOrder) throw std::invalid_argument("canonical_form: order above 8");
  return labeled_code(from_offdiag(g.order(), canonical_offdiag(g)));
}

// ---- generation --------------------------------------------------------------

void generate_digraphs(int n, const std::function<void(const Digraph&)>& fn) {
  if (n < 0 || n > kMaxGeneratedOrder)
    throw std::invalid_argument("generate_digraphs: supported orders are 0.." + std::to_string(kMaxGeneratedOrder));
  if (n <= 1) {
    fn(Digraph(n));
    return;
  }
  // Sweep codes upward; the first unvisited code of an orbit is its minimum,
  // i.e. the canonical representative.
  const auto& canon = canonicalizer(n);
  const std::uint64_t codes = 1ULL << offdiag_bits(n);
  std::vector<std::uint64_t> visited((codes + 63) / 64, 0);
  for (std::uint64_t c = 0; c < codes; ++c) {
    if ((visited[c >> 6] >> (c & 63)) & 1U) continue;
    fn(from_offdiag(n, c));
    for (std::size_t p = 0; p < canon.perm_count(); ++p) {
      const std::uint64_t img = canon.image(p, c);
      visited[img >> 6] |= 1ULL << (img & 63);
    }
  }
}

std::vector<Digraph> enumerate_digraphs(int n) {
  if (n < 0 || n > kMaxBuiltinOrder)
    throw std::invalid_argument("enumerate_digraphs: builtin enumeration supports orders 0..5; use a digraph6 stream");
  std::vector<Digraph> out;
  generate_digraphs(n, [&](const Digraph& g) { out.push_back(g); });
  return out;
}

// ---- census ------------------------------------------------------------------

SurveyReport census_builtin(int n, const CensusOptions& opts) {
  if (n < 2 || n > kMaxBuiltinOrder)
    throw std::invalid_argument("census_builtin: supported orders are 2..5");
  const auto t0 = Clock::now();
  const auto graphs = enumerate_digraphs(n);
  auto tally = run_chunks(graphs, effective_eps(opts, n), opts.complement_pairing, opts.jobs);
  SurveyReport r;
  r.order = n;
  r.source = "builtin";
  finish(r, tally);
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

SurveyReport census_digraphs(const std::vector<Digraph>& graphs, const CensusOptions& opts,
                             const std::string& source) {
  const auto t0 = Clock::now();
  SurveyReport r;
  r.source = source;
  if (graphs.empty()) return r;
  const int n = graphs.front().order();
  for (const auto& g : graphs)
    if (g.order() != n) throw std::invalid_argument("census_digraphs: mixed orders");
  if (n < 2) throw std::invalid_argument("census_digraphs: order must be at least 2");
  check_pairing_order(n, opts.complement_pairing);
  r.order = n;
  auto tally = run_chunks(graphs, effective_eps(opts, n), opts.complement_pairing, opts.jobs);
  finish(r, tally);
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

SurveyReport census_stream(std::istream& in, const CensusOptions& opts) {
  const auto t0 = Clock::now();
  SurveyReport r;
  r.source = "stream";
  int n = -1;
  Tally total;
  std::vector<Digraph> batch;
  batch.reserve(kStreamBatch);

  auto flush = [&] {
    if (batch.empty()) return;
    total.merge(run_chunks(batch, effective_eps(opts, n), opts.complement_pairing, opts.jobs));
    batch.clear();
    if (!total.quarantined.empty()) throw StopReading{};
  };
  try {
    read_digraph6_stream(in, [&](Digraph g, std::size_t line) {
      if (n < 0) {
        n = g.order();
        if (n < 2) throw InputError("line " + std::to_string(line) + ": census needs order at least 2");
        check_pairing_order(n, opts.complement_pairing);
      } else if (g.order() != n) {
        throw InputError("line " + std::to_string(line) + ": order " + std::to_string(g.order()) +
                         " differs from the stream's order " + std::to_string(n));
      }
      batch.push_back(std::move(g));
      if (batch.size() == kStreamBatch) flush();
    });
    flush();
  } catch (const StopReading&) {
  }
  r.order = std::max(n, 0);
  finish(r, total);
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

std::string to_json(const SurveyReport& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["normal"] = r.normal;
  j["restricted_normal"] = r.restricted_normal;
  j["pseudo_normal"] = r.pseudo_normal;
  j["polygonal_total"] = r.polygonal_total;
  j["digraphs_total"] = r.digraphs_total;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["source"] = r.source;
  j["non_polygonal"] = r.non_polygonal;
  auto& w = j["pseudo_normal_witnesses"] = nlohmann::ordered_json::array();
  for (const auto& x : r.pseudo_normal_witnesses)
    w.push_back({{"digraph6", x.digraph6}, {"tolerance_sensitive", x.tolerance_sensitive}});
  j["quarantined"] = r.quarantined;
  j["complete"] = r.complete();
  return j.dump();
}

std::string to_table(const std::vector<SurveyReport>& rows) {
  std::ostringstream os;
  const char* head[] = {"n", "normal", "restricted-normal", "pseudo-normal", "polygonal", "digraphs"};
  const int width[] = {3, 8, 19, 15, 11, 10};
  for (int c = 0; c < 6; ++c) os << std::setw(width[c]) << head[c];
  os << '\n';
  for (const auto& r : rows) {
    os << std::setw(width[0]) << r.order << std::setw(width[1]) << r.normal << std::setw(width[2])
       << r.restricted_normal << std::setw(width[3]) << r.pseudo_normal << std::setw(width[4])
       << r.polygonal_total << std::setw(width[5]) << r.digraphs_total << '\n';
  }
  return os.str();
}

}  // namespace polydig

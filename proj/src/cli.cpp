#include "polydig/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polydig/construct_spec.hpp"
#include "polydig/digraph_io.hpp"
#include "polydig/error.hpp"
#include "polydig/exact.hpp"
#include "polydig/rnr.hpp"
#include "polydig/search.hpp"
#include "polydig/survey.hpp"

namespace polydig {

namespace {

struct InputConfig {
  std::string input;
  std::string format;  // "", "d6" or "edges"
  std::string construct;
};

void add_input_options(CLI::App* cmd, InputConfig& in) {
  auto* i = cmd->add_option("--input", in.input, "digraph file; '-' reads standard input");
  auto* c = cmd->add_option("--construct", in.construct, "constructor expression, e.g. \"djoin(dicycle:3,dicycle:3)\"");
  i->excludes(c);
  cmd->add_option("--format", in.format, "input format (default: sniffed)")->check(CLI::IsMember({"d6", "edges"}));
}

std::vector<Digraph> load_inputs(const InputConfig& in) {
  if (!in.construct.empty()) return {parse_construct_spec(in.construct)};
  if (in.input.empty()) throw InputError("one of --input or --construct is required");
  if (in.input == "-") {
    if (in.format == "edges") return {from_edge_list(std::cin)};
    return read_digraph6_all(std::cin);
  }
  GraphFormat f;
  if (in.format == "d6")
    f = GraphFormat::digraph6;
  else if (in.format == "edges")
    f = GraphFormat::edge_list;
  else
    f = sniff_format(in.input);
  auto gs = read_digraph_file(in.input, f);
  if (gs.empty()) throw InputError(in.input + ": no digraphs found");
  return gs;
}

Digraph load_single(const InputConfig& in) {
  auto gs = load_inputs(in);
  if (gs.size() != 1) throw InputError("expected exactly one digraph, got " + std::to_string(gs.size()));
  return gs.front();
}

// Opens path for writing, or hands back the fallback stream for "" / "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw InputError("cannot write " + path);
    os_ = file_.get();
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_order_two(const Digraph& g) {
  if (g.order() < 2) throw InputError("this command needs a digraph of order at least 2");
}

// ---- classify ----------------------------------------------------------------

nlohmann::ordered_json classify_json(const Digraph& g, double eps) {
  require_order_two(g);
  nlohmann::ordered_json j;
  j["order"] = g.order();
  j["class"] = std::string(to_string(classify(g, eps)));
  j["balanced"] = is_balanced(g);
  const auto ab = alpha_beta(g);
  j["alpha"] = ab.alpha;
  j["beta"] = ab.beta;
  j["imbalances"] = degree_profile(g).imbalance;
  j["terminal_scc_count"] = scc_decomposition(g).terminal_count();
  if (auto d = decompose_directed_join(g))
    j["directed_join"] = {{"head_size", d->head.order()}, {"tail_size", d->tail.order()}};
  else
    j["directed_join"] = nullptr;
  return j;
}

// ---- boundary SVG ------------------------------------------------------------

std::string star_path(double cx, double cy, double r) {
  std::ostringstream os;
  for (int k = 0; k < 10; ++k) {
    const double rr = (k % 2 == 0) ? r : 0.4 * r;
    const double a = -std::numbers::pi / 2 + k * std::numbers::pi / 5;
    os << (k == 0 ? "M" : "L") << fmt_double(cx + rr * std::cos(a)) << ' ' << fmt_double(cy + rr * std::sin(a)) << ' ';
  }
  os << 'Z';
  return os.str();
}

void write_svg(std::ostream& os, const RnrResult& r) {
  const double x0 = r.alpha - 1.0, x1 = r.beta + 1.0;
  double ymax = 0.0;
  for (auto z : r.boundary_points) ymax = std::max(ymax, std::abs(z.imag()));
  for (auto z : r.restricted_spectrum) ymax = std::max(ymax, std::abs(z.imag()));
  ymax += 1.0;
  const double width = 640.0;
  const double scale = width / (x1 - x0);
  const double height = 2.0 * ymax * scale;
  auto px = [&](Complex z) { return fmt_double((z.real() - x0) * scale) + "," + fmt_double((ymax - z.imag()) * scale); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_double(width) << "\" height=\""
     << fmt_double(height) << "\" viewBox=\"0 0 " << fmt_double(width) << ' ' << fmt_double(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes through 0 when visible.
  os << "<line x1=\"0\" y1=\"" << fmt_double(ymax * scale) << "\" x2=\"" << fmt_double(width) << "\" y2=\""
     << fmt_double(ymax * scale) << "\" stroke=\"#bbb\"/>\n";
  if (x0 <= 0 && 0 <= x1)
    os << "<line x1=\"" << fmt_double(-x0 * scale) << "\" y1=\"0\" x2=\"" << fmt_double(-x0 * scale) << "\" y2=\""
       << fmt_double(height) << "\" stroke=\"#bbb\"/>\n";
  os << "<polygon fill=\"#dde8f6\" stroke=\"#1f4e99\" stroke-width=\"1.5\" points=\"";
  for (auto z : r.boundary_points) os << px(z) << ' ';
  os << "\"/>\n";
  if (r.hull.size() >= 2) {
    os << "<polygon fill=\"none\" stroke=\"#c03020\" stroke-dasharray=\"4 3\" points=\"";
    for (auto z : r.hull.vertices) os << px(z) << ' ';
    os << "\"/>\n";
  }
  for (auto z : r.restricted_spectrum)
    os << "<path fill=\"#c03020\" d=\""
       << star_path((z.real() - x0) * scale, (ymax - z.imag()) * scale, 7.0) << "\"/>\n";
  os << "</svg>\n";
}

// ---- subcommands -------------------------------------------------------------

struct Options {
  InputConfig in;
  double eps = 0.0;
  int samples = 256;
  std::string out;
  std::string svg;
  std::string stream;
  std::vector<int> orders;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 200000;
  bool no_complement = false;
  bool complement = false;
  bool table = false;
  std::string witnesses;
};

int cmd_classify(const Options& o, std::ostream& out) {
  const auto gs = load_inputs(o.in);
  Sink sink(o.out, out);
  for (const auto& g : gs) {
    const double eps = o.eps > 0 ? o.eps : default_eps(g.order());
    *sink << classify_json(g, eps).dump() << '\n';
  }
  return kExitOk;
}

int cmd_boundary(const Options& o, std::ostream& out) {
  const Digraph g = load_single(o.in);
  require_order_two(g);
  const RnrResult r = boundary_sample(g, o.samples);
  {
    Sink sink(o.out, out);
    *sink << "theta,support,point_re,point_im\n";
    for (std::size_t k = 0; k < r.thetas.size(); ++k)
      *sink << fmt_double(r.thetas[k]) << ',' << fmt_double(r.support_values[k]) << ','
            << fmt_double(r.boundary_points[k].real()) << ',' << fmt_double(r.boundary_points[k].imag()) << '\n';
  }
  if (!o.svg.empty()) {
    Sink sink(o.svg, out);
    write_svg(*sink, r);
  }
  return kExitOk;
}

int cmd_survey(const Options& o, std::ostream& out) {
  if (o.orders.empty() == o.stream.empty()) throw InputError("survey needs exactly one of --order or --stream");
  CensusOptions opts;
  opts.eps = o.eps;
  opts.jobs = o.jobs;

  std::vector<SurveyReport> reports;
  if (!o.stream.empty()) {
    opts.complement_pairing = o.complement;
    if (o.stream == "-") {
      reports.push_back(census_stream(std::cin, opts));
    } else {
      std::ifstream in(o.stream, std::ios::binary);
      if (!in) throw InputError("cannot open " + o.stream);
      reports.push_back(census_stream(in, opts));
    }
  } else {
    opts.complement_pairing = !o.no_complement;
    for (int n : o.orders) {
      if (n < 2 || n > kMaxBuiltinOrder)
        throw InputError("builtin survey supports orders 2.." + std::to_string(kMaxBuiltinOrder) +
                         "; pass a digraph6 --stream for larger orders");
      reports.push_back(census_builtin(n, opts));
    }
  }

  {
    Sink sink(o.out, out);
    if (o.table)
      *sink << to_table(reports);
    else
      for (const auto& r : reports) *sink << to_json(r) << '\n';
  }
  if (!o.witnesses.empty()) {
    Sink sink(o.witnesses, out);
    for (const auto& r : reports)
      for (const auto& w : r.pseudo_normal_witnesses) *sink << w.digraph6 << '\n';
  }
  for (const auto& r : reports)
    if (!r.complete()) return kExitQuarantine;
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  if (o.in.construct.empty()) throw InputError("construct needs --construct SPEC");
  const Digraph g = parse_construct_spec(o.in.construct);
  Sink sink(o.out, out);
  if (o.in.format == "edges")
    *sink << to_edge_list(g);
  else
    *sink << to_digraph6(g) << '\n';
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.orders.size() != 1) throw InputError("search needs a single --order");
  const int n = o.orders.front();
  if (n < 2 || n > Digraph::kMaxOrder) throw InputError("search order out of range");
  const auto res = search_restricted_normal_nonjoin(n, o.budget, o.seed);
  Sink sink(o.out, out);
  if (!res.witness) {
    *sink << "none found in budget (" << res.iterations << " iterations, " << res.restarts << " restarts)\n";
    return kExitOk;
  }
  const Digraph& g = *res.witness;
  *sink << to_digraph6(g) << '\n';
  *sink << "iterations: " << res.iterations << "\nrestarts: " << res.restarts << '\n';
  *sink << "balanced: " << (is_balanced(g) ? "yes" : "no") << '\n';
  *sink << "imbalances:";
  for (int x : degree_profile(g).imbalance) *sink << ' ' << x;
  *sink << "\nrestricted-normal identity holds: " << (is_restricted_normal_exact(g) ? "yes" : "no") << '\n';
  *sink << "directed join of balanced parts: " << (decompose_directed_join(g) ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.orders.size() != 1) throw InputError("generate needs a single --order");
  const int n = o.orders.front();
  if (n < 0 || n > kMaxGeneratedOrder)
    throw InputError("generate supports orders 0.." + std::to_string(kMaxGeneratedOrder));
  Sink sink(o.out, out);
  generate_digraphs(n, [&](const Digraph& g) { *sink << to_digraph6(g) << '\n'; });
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted numerical range and polygonality of digraphs", "polydig"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "classify digraphs and print one JSON object each");
  add_input_options(classify_cmd, o.in);
  classify_cmd->add_option("--eps", o.eps, "polygonality tolerance (default 1e-7*max(1,n))")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--out", o.out, "output path");

  auto* boundary_cmd = app.add_subcommand("boundary", "sample the boundary of the restricted numerical range");
  add_input_options(boundary_cmd, o.in);
  boundary_cmd->add_option("--samples", o.samples, "number of angles")->check(CLI::Range(3, 1 << 22));
  boundary_cmd->add_option("--out", o.out, "CSV output path");
  boundary_cmd->add_option("--svg", o.svg, "SVG output path");

  auto* survey_cmd = app.add_subcommand("survey", "count polygonal digraphs by class");
  survey_cmd->add_option("--order", o.orders, "builtin census order(s), 2..5");
  survey_cmd->add_option("--stream", o.stream, "digraph6 stream of one isomorph-free order; '-' for stdin");
  survey_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 1024));
  survey_cmd->add_option("--eps", o.eps, "polygonality tolerance")->check(CLI::PositiveNumber);
  survey_cmd->add_option("--out", o.out, "report output path");
  survey_cmd->add_option("--witnesses", o.witnesses, "write pseudo-normal witnesses (digraph6) here");
  survey_cmd->add_flag("--no-complement", o.no_complement, "builtin: classify every digraph, not half");
  survey_cmd->add_flag("--complement", o.complement, "stream: classify half and infer complements");
  survey_cmd->add_flag("--table", o.table, "print an aligned table instead of JSON");

  auto* construct_cmd = app.add_subcommand("construct", "build a digraph from a constructor expression");
  construct_cmd->add_option("--construct", o.in.construct, "constructor expression")->required();
  construct_cmd->add_option("--format", o.in.format, "output format")->check(CLI::IsMember({"d6", "edges"}));
  construct_cmd->add_option("--out", o.out, "output path");

  auto* search_cmd = app.add_subcommand("search", "look for restricted-normal digraphs that are not joins");
  search_cmd->add_option("--order", o.orders, "digraph order")->required()->expected(1);
  search_cmd->add_option("--budget", o.budget, "edge-flip budget");
  search_cmd->add_option("--seed", o.seed, "random seed");
  search_cmd->add_option("--out", o.out, "output path");

  auto* generate_cmd = app.add_subcommand("generate", "write one digraph6 line per isomorphism class");
  generate_cmd->add_option("--order", o.orders, "digraph order, 0..6")->required()->expected(1);
  generate_cmd->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (boundary_cmd->parsed()) return cmd_boundary(o, out);
    if (survey_cmd->parsed()) return cmd_survey(o, out);
    if (construct_cmd->parsed()) return cmd_construct(o, out);
    if (search_cmd->parsed()) return cmd_search(o, out);
    if (generate_cmd->parsed()) return cmd_generate(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace polydig

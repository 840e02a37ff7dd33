#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "polydig/digraph.hpp"
#include "polydig/rnr.hpp"

namespace polydig {

// Row-major n*n adjacency bitstring, entry (0,0) in the most significant of
// the n*n low bits, minimised over all vertex relabelings. Orders up to 8.
struct CanonicalCode {
  int order = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

constexpr int kMaxCanonicalOrder = 8;

CanonicalCode canonical_form(const Digraph& g);
// The row-major code of g as labeled (no minimisation).
CanonicalCode labeled_code(const Digraph& g);
Digraph from_code(const CanonicalCode& c);

constexpr int kMaxBuiltinOrder = 5;
constexpr int kMaxGeneratedOrder = 6;

// One digraph per isomorphism class, each in canonical labeling, in
// ascending code order. Calls fn for each; n <= kMaxGeneratedOrder.
void generate_digraphs(int n, const std::function<void(const Digraph&)>& fn);

// Materialised generate_digraphs for n <= kMaxBuiltinOrder.
std::vector<Digraph> enumerate_digraphs(int n);

struct CensusOptions {
  double eps = 0.0;  // <= 0 selects default_eps(n)
  int jobs = 1;
  // Classify only one digraph of each complementary pair and credit its
  // complement with the same label. Requires that the input holds every
  // complement, which the builtin source does.
  bool complement_pairing = true;
};

struct PseudoNormalWitness {
  std::string digraph6;
  // The polygonality test rejects it at eps / 2.
  bool tolerance_sensitive = false;
};

struct SurveyReport {
  int order = 0;
  std::uint64_t normal = 0;
  std::uint64_t restricted_normal = 0;
  std::uint64_t pseudo_normal = 0;
  std::uint64_t non_polygonal = 0;
  std::uint64_t polygonal_total = 0;
  std::uint64_t digraphs_total = 0;
  double elapsed_seconds = 0.0;
  std::string source;  // "builtin" or "stream"
  // Witnesses found directly or credited by complement, sorted.
  std::vector<PseudoNormalWitness> pseudo_normal_witnesses;
  // digraph6 of every digraph whose classification failed numerically.
  std::vector<std::string> quarantined;

  bool complete() const { return quarantined.empty(); }
};

// n <= kMaxBuiltinOrder.
SurveyReport census_builtin(int n, const CensusOptions& opts = {});

// Classifies an isomorph-free collection of digraphs of one order.
SurveyReport census_digraphs(const std::vector<Digraph>& graphs, const CensusOptions& opts,
                             const std::string& source = "stream");

// Reads digraph6 lines in batches. Every record must have the same order.
// Malformed lines raise InputError carrying the line number. Reading stops
// after the first batch that produced a quarantined digraph.
SurveyReport census_stream(std::istream& in, const CensusOptions& opts);

std::string to_json(const SurveyReport& r);
// Aligned text table with the columns n, normal, restricted-normal,
// pseudo-normal, polygonal, digraphs.
std::string to_table(const std::vector<SurveyReport>& rows);

}  // namespace polydig

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "polydig/eigen.hpp"
#include "polydig/error.hpp"
#include "polydig/exact.hpp"
#include "polydig/rnr.hpp"
#include "polydig/survey.hpp"

using namespace polydig;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

Digraph single_edge() { return Digraph::from_edges(2, std::vector<std::pair<int, int>>{{0, 1}}); }

const std::vector<Digraph>& small_digraphs() {
  static const std::vector<Digraph> all = [] {
    std::vector<Digraph> v;
    for (int n = 2; n <= 4; ++n)
      for (auto& g : enumerate_digraphs(n)) v.push_back(g);
    return v;
  }();
  return all;
}

std::vector<Complex> dicycle_restricted_spectrum(int n) {
  std::vector<Complex> v;
  for (int j = 1; j < n; ++j) v.push_back(1.0 - std::polar(1.0, 2 * kPi * j / n));
  return v;
}

Spectrum with_zero(Spectrum s) {
  s.insert(0.0);
  return s;
}

std::vector<Digraph> normal_pool() {
  std::vector<Digraph> pool = {dicycle(3), dicycle(4), dicycle(5), complete_digraph(2), complete_digraph(3),
                               empty_digraph(1), empty_digraph(2), regular_tournament(5),
                               split_cycle_family(4).normal_restored};
  std::mt19937_64 rng(99);
  for (int t = 0; t < 6; ++t) pool.push_back(oracle::random_bidirectional(rng, 2 + t % 4, 0.5));
  return pool;
}

}  // namespace

TEST_CASE("restricted matrix") {
  const RealMatrix b = restricted_matrix(complete_digraph(2));
  REQUIRE(b.rows() == 1);
  CHECK(b(0, 0) == Approx(2).epsilon(1e-14));
  CHECK(restricted_matrix(Digraph(1)).rows() == 0);
  CHECK(restricted_matrix(dicycle(6)).rows() == 5);
  CHECK_THROWS_AS(restricted_matrix(Digraph(0)), std::invalid_argument);
}

TEST_CASE("restricted spectrum") {
  for (int n = 3; n <= 12; ++n)
    CHECK(restricted_spectrum(dicycle(n)).matches(Spectrum(dicycle_restricted_spectrum(n)), 1e-9));
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const Spectrum s = restricted_spectrum(imploding_star(n, k));
      CHECK(s.matches(Spectrum(std::vector<Complex>(s.size(), double(k))), 1e-9));
    }
  CHECK(restricted_spectrum(empty_digraph(3)).matches(Spectrum({0, 0}), 1e-12));
  CHECK(restricted_spectrum(Digraph(1)).empty());
}

TEST_CASE("restricted spectrum completes to the laplacian spectrum") {
  for (const auto& g : small_digraphs()) {
    const Spectrum ls = laplacian_spectrum(g);
    REQUIRE(with_zero(restricted_spectrum(g)).matches(ls, 1e-7));
    REQUIRE(with_zero(eig_general_real(restricted_matrix(g))).matches(ls, 1e-7));
  }
}

TEST_CASE("alpha and beta") {
  auto ab = alpha_beta(regular_tournament(5));
  CHECK(ab.alpha == Approx(2.5).epsilon(1e-12));
  CHECK(ab.beta == Approx(2.5).epsilon(1e-12));
  ab = alpha_beta(complete_digraph(4));
  CHECK(ab.alpha == Approx(4).epsilon(1e-12));
  CHECK(ab.beta == Approx(4).epsilon(1e-12));
  ab = alpha_beta(disjoint_union(dicycle(3), dicycle(3)));
  CHECK(std::abs(ab.alpha) <= 1e-12);
  ab = alpha_beta(dicycle(7));
  CHECK(ab.alpha == Approx(1 - std::cos(2 * kPi / 7)).epsilon(1e-12));
  CHECK_THROWS_AS(alpha_beta(Digraph(1)), std::invalid_argument);
}

TEST_CASE("boundary of an imploding star is a single point") {
  const RnrResult r = boundary_sample(imploding_star(5, 2), 64);
  REQUIRE(r.boundary_points.size() == 64);
  for (auto z : r.boundary_points) CHECK(std::abs(z - 2.0) <= 1e-7);
}

TEST_CASE("boundary of dicycle(4) is its eigenvalue triangle") {
  const RnrResult r = boundary_sample(dicycle(4), 256);
  const HullPolygon tri = convex_hull({Complex(1, 1), Complex(1, -1), 2});
  for (auto z : r.boundary_points) CHECK(distance_to_polygon(z, tri) <= 1e-6);
  CHECK(hausdorff_distance(convex_hull(r.boundary_points), tri) <= 1e-6);
  CHECK(hausdorff_distance(r.hull, tri) <= 1e-9);
}

TEST_CASE("complement reflects the range through n/2") {
  const int n = 5, m = 256;
  const Digraph g = dicycle(n);
  const RnrResult a = boundary_sample(g, m);
  const RnrResult b = boundary_sample(complement(g), m);
  // h_comp(theta) = n cos(theta) + h(theta + pi)
  for (int k = 0; k < m; ++k)
    CHECK(b.support_values[k] ==
          Approx(n * std::cos(a.thetas[k]) + a.support_values[(k + m / 2) % m]).epsilon(1e-9));
  std::vector<Complex> reflected;
  for (auto z : a.boundary_points) reflected.push_back(double(n) - z);
  CHECK(hausdorff_distance(convex_hull(reflected), convex_hull(b.boundary_points)) <= 1e-6);
  for (auto z : b.boundary_points) CHECK(distance_to_polygon(z, convex_hull(reflected)) <= 1e-6);
}

TEST_CASE("boundary sample invariants") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const Digraph g = oracle::random_digraph(rng, 2 + t % 6, 0.4);
    const RnrResult r = boundary_sample(g, 48);
    CHECK(r.alpha <= r.beta + 1e-12);
    for (auto v : r.hull.vertices) {
      CHECK(v.real() >= r.alpha - 1e-7);
      CHECK(v.real() <= r.beta + 1e-7);
    }
    // Each boundary point respects every sampled supporting half-plane.
    for (auto z : r.boundary_points)
      for (std::size_t k = 0; k < r.thetas.size(); ++k)
        CHECK((std::polar(1.0, r.thetas[k]) * z).real() <= r.support_values[k] + 1e-9);
    // And attains its own.
    for (std::size_t k = 0; k < r.thetas.size(); ++k)
      CHECK((std::polar(1.0, r.thetas[k]) * r.boundary_points[k]).real() == Approx(r.support_values[k]).epsilon(1e-9));
    CHECK(r.support_values[0] == Approx(r.beta).epsilon(1e-9));
  }
  CHECK_THROWS_AS(boundary_sample(dicycle(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(boundary_sample(Digraph(1), 8), std::invalid_argument);
}

TEST_CASE("polygonality examples") {
  CHECK(is_polygonal_numeric(dicycle(6)));
  CHECK(is_polygonal_numeric(imploding_star(4, 2)));
  CHECK_FALSE(is_polygonal_numeric(split_cycle_family(4).balanced_split));
  CHECK_THROWS_AS(is_polygonal_numeric(Digraph(1)), std::invalid_argument);
  CHECK(default_eps(1) == 1e-7);
  CHECK(default_eps(6) == Approx(6e-7));
}

TEST_CASE("non-polygonal split cycle: area oracle") {
  // The sampled range is visibly larger than the eigenvalue hull.
  const Digraph g = split_cycle_family(4).balanced_split;
  const RnrResult r = boundary_sample(g, 512);
  const double sampled = polygon_area(convex_hull(r.boundary_points));
  const double eigen = polygon_area(r.hull);
  CHECK(sampled > eigen + 1e-3);
  CHECK(classify(g) == ClassLabel::non_polygonal);
}

TEST_CASE("exact normality") {
  for (int n = 3; n <= 10; ++n) CHECK(is_normal_exact(dicycle(n)));
  CHECK(is_normal_exact(split_cycle_family(6).normal_restored));
  CHECK_FALSE(is_normal_exact(single_edge()));
  CHECK(is_normal_exact(complete_digraph(3)));
  CHECK(is_normal_exact(Digraph(0)));
}

TEST_CASE("exact restricted normality") {
  CHECK(is_restricted_normal_exact(single_edge()));
  CHECK(is_restricted_normal_exact(directed_join(dicycle(3), dicycle(4))));
  CHECK(is_restricted_normal_exact(square_order_nonjoin(3)));
  CHECK_FALSE(is_restricted_normal_exact(dicycle(4)));
  CHECK_FALSE(is_restricted_normal_exact(Digraph(1)));
  CHECK_THROWS_AS(is_restricted_normal_exact(dicycle(4), 4), std::invalid_argument);
}

TEST_CASE("restricted normality does not depend on the pivot") {
  std::mt19937_64 rng(22);
  std::vector<Digraph> cases;
  for (int t = 0; t < 200; ++t) cases.push_back(oracle::random_digraph(rng, 2 + t % 7, 0.5));
  for (const auto& g : normal_pool())
    for (const auto& h : normal_pool())
      if (g.order() + h.order() <= 12) cases.push_back(directed_join(g, h));
  for (const auto& g : cases) {
    const bool ref = is_restricted_normal_exact(g, 0);
    for (int k = 1; k < g.order(); ++k) REQUIRE(is_restricted_normal_exact(g, k) == ref);
  }
}

TEST_CASE("classification examples") {
  CHECK(classify(complete_digraph(3)) == ClassLabel::normal);
  CHECK(classify(directed_join(dicycle(3), dicycle(3))) == ClassLabel::restricted_normal);
  CHECK(classify(dicycle(7)) == ClassLabel::normal);
  CHECK(classify(empty_digraph(3)) == ClassLabel::normal);
  CHECK_THROWS_AS(classify(Digraph(1)), std::invalid_argument);
  CHECK_THROWS_AS(classify(dicycle(3), 0.0), std::invalid_argument);
  CHECK(to_string(ClassLabel::pseudo_normal) == "pseudo_normal");
  CHECK(parse_class_label("restricted_normal") == ClassLabel::restricted_normal);
  CHECK_FALSE(parse_class_label("bogus"));
}

TEST_CASE("normal and restricted normal exact tests match the floating commutators") {
  for (const auto& g : small_digraphs()) {
    const bool normal = is_normal_exact(g);
    REQUIRE(normal == (frobenius_norm(laplacian_commutator(g)) == 0));
    const RealMatrix b = restricted_matrix(g);
    const bool b_normal = frobenius_norm(b * b.transpose() - b.transpose() * b) <= 1e-7;
    REQUIRE((is_restricted_normal_exact(g) || normal) == b_normal);
    // Balanced plus a normal B is exactly normality.
    REQUIRE(normal == (is_balanced(g) && b_normal));
    REQUIRE(projected_normality_agrees(g));
  }
}

TEST_CASE("balanced iff e^T L Q vanishes") {
  std::mt19937_64 rng(23);
  std::vector<Digraph> cases = small_digraphs();
  for (int t = 0; t < 100; ++t) cases.push_back(oracle::random_balanced(rng, 2 + t % 9));
  for (const auto& g : cases) {
    const int n = g.order();
    const RealMatrix elq = RealMatrix(1, static_cast<std::size_t>(n), 1.0) * laplacian(g) * restrictor_matrix(n);
    REQUIRE(is_balanced(g) == (max_abs(elq) <= 1e-10));
  }
}

TEST_CASE("order-4 and smaller: class structure") {
  for (const auto& g : small_digraphs()) {
    const ClassLabel c = classify(g);
    // No pseudo-normal digraphs below order 6.
    REQUIRE(c != ClassLabel::pseudo_normal);
    REQUIRE(classify(complement(g)) == c);
    if (!is_polygonal(c)) continue;
    REQUIRE(alpha_matches_terminal_components(g));
    REQUIRE(std::abs(alpha_beta(g).alpha - restricted_spectrum(g).min_real()) <= 1e-7);
    if (c == ClassLabel::restricted_normal) {
      const auto d = decompose_directed_join(g);
      REQUIRE(d);
      REQUIRE(is_normal_exact(d->head));
      REQUIRE(is_normal_exact(d->tail));
    }
  }
}

TEST_CASE("single-point hull branch agrees with a diameter oracle") {
  std::size_t single_point_cases = 0;
  for (const auto& g : small_digraphs()) {
    const RealMatrix b = restricted_matrix(g);
    const auto merged = merge_close(eig_general_real(b).values(), 1e-7 * (1 + frobenius_norm(b)));
    if (convex_hull(merged).size() != 1) continue;
    ++single_point_cases;
    auto support = [&](double th) {
      const Complex rot = std::polar(1.0, th);
      ComplexMatrix h(b.rows(), b.rows());
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) h(i, j) = 0.5 * (rot * b(i, j) + std::conj(rot) * b(j, i));
      return oracle::complex_jacobi_eigenvalues(h).back();
    };
    const bool point = oracle::sampled_diameter(support, 64) <= 1e-6;
    REQUIRE(is_polygonal_numeric(g) == point);
  }
  CHECK(single_point_cases > 0);
}

TEST_CASE("restrictor choice does not matter") {
  std::mt19937_64 rng(24);
  std::vector<Digraph> cases = small_digraphs();
  for (int t = 0; t < 60; ++t) cases.push_back(oracle::random_digraph(rng, 5 + t % 4, 0.5));
  for (const auto& g : cases) {
    const auto a = alpha_beta(g, RestrictorKind::householder);
    const auto b = alpha_beta(g, RestrictorKind::gram_schmidt);
    REQUIRE(std::abs(a.alpha - b.alpha) <= 1e-7);
    REQUIRE(std::abs(a.beta - b.beta) <= 1e-7);
    const double eps = default_eps(g.order());
    REQUIRE(is_polygonal_numeric(g, eps, RestrictorKind::householder) ==
            is_polygonal_numeric(g, eps, RestrictorKind::gram_schmidt));
  }
}

TEST_CASE("relabeling invariance") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 60; ++t) {
    const Digraph g = oracle::random_digraph(rng, 2 + t % 6, 0.45);
    const Digraph h = permute(g, oracle::random_permutation(rng, g.order()));
    CHECK(classify(h) == classify(g));
    const RnrResult a = boundary_sample(g, 64), b = boundary_sample(h, 64);
    for (std::size_t k = 0; k < a.support_values.size(); ++k)
      CHECK(std::abs(a.support_values[k] - b.support_values[k]) <= 1e-6);
    CHECK(hausdorff_distance(convex_hull(a.boundary_points), convex_hull(b.boundary_points)) <= 1e-6);
  }
}

TEST_CASE("directed joins of normal digraphs are restricted-normal") {
  const auto pool = normal_pool();
  for (const auto& g : pool) REQUIRE(is_normal_exact(g));
  for (const auto& a : pool)
    for (const auto& b : pool) REQUIRE(classify(directed_join(a, b)) == ClassLabel::restricted_normal);
  const Digraph bad = split_cycle_family(4).balanced_split;
  for (const auto& b : pool) {
    CHECK(classify(directed_join(bad, b)) != ClassLabel::restricted_normal);
    CHECK(classify(directed_join(b, bad)) != ClassLabel::restricted_normal);
  }
}

TEST_CASE("constructions classify as expected") {
  CHECK(classify(square_order_nonjoin(3)) == ClassLabel::restricted_normal);
  CHECK_FALSE(decompose_directed_join(square_order_nonjoin(3)));
  const Digraph inflated = kronecker_inflate(square_order_nonjoin(3), 2);
  CHECK(classify(inflated) == ClassLabel::restricted_normal);
  CHECK_FALSE(decompose_directed_join(inflated));
}

TEST_CASE("support identities for unions and joins") {
  const std::vector<std::pair<Digraph, Digraph>> pairs = {
      {dicycle(3), dicycle(4)}, {complete_digraph(2), dicycle(5)}, {Digraph(1), dicycle(3)},
      {split_cycle_family(4).balanced_split, regular_tournament(3)}, {Digraph(1), Digraph(1)}};
  for (const auto& [a, b] : pairs)
    for (auto op : {CombineOp::disjoint_union, CombineOp::directed_join, CombineOp::bidirectional_join})
      CHECK(support_combination_discrepancy(a, b, op, 64) <= 1e-6);
  // Operands must be balanced.
  CHECK_THROWS_AS(support_combination_discrepancy(single_edge(), dicycle(3), CombineOp::directed_join, 8),
                  std::invalid_argument);
}

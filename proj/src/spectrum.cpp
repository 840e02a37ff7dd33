#include "polydig/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polydig {

namespace {

// Kuhn's augmenting-path bipartite matching on the threshold graph.
bool perfect_matching(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  const std::size_t n = a.size();
  std::vector<int> match_b(n, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || std::abs(a[i] - b[j]) > tol) continue;
      seen[j] = 1;
      if (match_b[j] < 0 || self(self, static_cast<std::size_t>(match_b[j]))) {
        match_b[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, 0);
    if (!augment(augment, i)) return false;
  }
  return true;
}

}  // namespace

std::size_t Spectrum::nearest(Complex z) const {
  if (values_.empty()) throw std::logic_error("nearest() on an empty spectrum");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (std::abs(values_[i] - z) < std::abs(values_[best] - z)) best = i;
  return best;
}

Complex Spectrum::remove_nearest(Complex z) {
  const auto i = nearest(z);
  const Complex v = values_[i];
  values_.erase(values_.begin() + static_cast<std::ptrdiff_t>(i));
  return v;
}

bool Spectrum::matches(const Spectrum& other, double tol) const {
  if (size() != other.size()) return false;
  return perfect_matching(values_, other.values_, tol);
}

double Spectrum::matching_distance(const Spectrum& other) const {
  if (size() != other.size()) return std::numeric_limits<double>::infinity();
  if (empty()) return 0.0;
  // The bottleneck value is one of the pairwise distances.
  std::vector<double> cand;
  cand.reserve(size() * size());
  for (auto a : values_)
    for (auto b : other.values_) cand.push_back(std::abs(a - b));
  std::sort(cand.begin(), cand.end());
  std::size_t lo = 0, hi = cand.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(values_, other.values_, cand[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cand[lo];
}

std::vector<Complex> Spectrum::sorted() const {
  auto v = values_;
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

double Spectrum::min_real() const {
  double m = std::numeric_limits<double>::infinity();
  for (auto z : values_) m = std::min(m, z.real());
  return m;
}

double Spectrum::max_real() const {
  double m = -std::numeric_limits<double>::infinity();
  for (auto z : values_) m = std::max(m, z.real());
  return m;
}

double Spectrum::max_abs_imag() const {
  double m = 0.0;
  for (auto z : values_) m = std::max(m, std::abs(z.imag()));
  return m;
}

}  // namespace polydig

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace polydig {

using Complex = std::complex<double>;

// Multiset of complex eigenvalues.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Complex> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<Complex>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  void insert(Complex z) { values_.push_back(z); }

  // Index of the value closest to z; the lowest index wins ties.
  std::size_t nearest(Complex z) const;
  // Removes one copy of the value closest to z and returns it.
  Complex remove_nearest(Complex z);

  // True iff a perfect matching pairs every value here with a distinct value
  // of other at distance <= tol. Independent of element order.
  bool matches(const Spectrum& other, double tol) const;

  // Smallest t such that matches(other, t) holds; infinity on size mismatch.
  double matching_distance(const Spectrum& other) const;

  // Sorted by real part, then imaginary part.
  std::vector<Complex> sorted() const;

  double min_real() const;
  double max_real() const;
  double max_abs_imag() const;

 private:
  std::vector<Complex> values_;
};

}  // namespace polydig

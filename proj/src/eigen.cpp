#include "polydig/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "polydig/error.hpp"

namespace polydig {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr int kMaxQrIterationsPerEigenvalue = 200;
constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

void require_square(std::size_t r, std::size_t c, const char* who) {
  if (r != c) throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

// Jacobi on a dense symmetric work matrix; returns unsorted diagonal.
std::vector<double> jacobi_in_place(RealMatrix& a, RealMatrix* v) {
  const std::size_t n = a.rows();
  const double scale = frobenius_norm(a);
  if (n <= 1 || scale == 0.0) {
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    return d;
  }
  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off == 0.0 || std::sqrt(off) <= 1e-17 * scale) break;
    if (sweep >= kMaxJacobiSweeps) throw NumericalError("Jacobi eigensolver did not converge");

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        // Negligible against both diagonal entries: drop it outright.
        if (sweep > 3 && std::abs(app) + 100.0 * std::abs(apq) == std::abs(app) &&
            std::abs(aqq) + 100.0 * std::abs(apq) == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        if (v) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = (*v)(k, p), vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * vkq;
            (*v)(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return d;
}

std::vector<std::size_t> ascending_order(const std::vector<double>& d) {
  std::vector<std::size_t> idx(d.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  return idx;
}

RealMatrix real_embedding(const ComplexMatrix& h) {
  const std::size_t m = h.rows();
  RealMatrix e(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double x = h(i, j).real(), y = h(i, j).imag();
      e(i, j) = x;
      e(i, j + m) = -y;
      e(i + m, j) = y;
      e(i + m, j + m) = x;
    }
  return e;
}

// ---- Hessenberg + Francis QR -------------------------------------------------

void reduce_to_hessenberg(RealMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<double> ort(n, 0.0);
  const std::size_t high = n - 1;
  for (std::size_t m = 1; m + 1 <= high; ++m) {
    double scale = 0.0;
    for (std::size_t i = m; i <= high; ++i) scale += std::abs(h(i, m - 1));
    if (scale == 0.0) continue;
    double hh = 0.0;
    for (std::size_t i = high + 1; i-- > m;) {
      ort[i] = h(i, m - 1) / scale;
      hh += ort[i] * ort[i];
    }
    double g = std::sqrt(hh);
    if (ort[m] > 0) g = -g;
    hh -= ort[m] * g;
    ort[m] -= g;
    for (std::size_t j = m; j < n; ++j) {
      double f = 0.0;
      for (std::size_t i = high + 1; i-- > m;) f += ort[i] * h(i, j);
      f /= hh;
      for (std::size_t i = m; i <= high; ++i) h(i, j) -= f * ort[i];
    }
    for (std::size_t i = 0; i <= high; ++i) {
      double f = 0.0;
      for (std::size_t j = high + 1; j-- > m;) f += ort[j] * h(i, j);
      f /= hh;
      for (std::size_t j = m; j <= high; ++j) h(i, j) -= f * ort[j];
    }
    h(m, m - 1) = scale * g;
  }
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) h(i, j) = 0.0;
}

// Eigenvalues-only double-shift QR (after EISPACK hqr).
std::vector<Complex> hessenberg_qr(RealMatrix& hm) {
  const int nn = static_cast<int>(hm.rows());
  std::vector<double> wr(nn, 0.0), wi(nn, 0.0);
  auto H = [&](int i, int j) -> double& { return hm(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };

  double norm = 0.0;
  for (int i = 0; i < nn; ++i)
    for (int j = std::max(i - 1, 0); j < nn; ++j) norm += std::abs(H(i, j));

  const int low = 0;
  int n = nn - 1;
  double exshift = 0.0;
  double p = 0, q = 0, r = 0, s = 0, z = 0, w, x, y;
  int iter = 0;

  while (n >= low) {
    int l = n;
    while (l > low) {
      s = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
      if (s == 0.0) s = norm;
      if (H(l, l - 1) == 0.0 || std::abs(H(l, l - 1)) < kMachineEps * s) break;
      --l;
    }

    if (l == n) {
      wr[n] = H(n, n) + exshift;
      wi[n] = 0.0;
      --n;
      iter = 0;
    } else if (l == n - 1) {
      w = H(n, n - 1) * H(n - 1, n);
      p = (H(n - 1, n - 1) - H(n, n)) / 2.0;
      q = p * p + w;
      z = std::sqrt(std::abs(q));
      x = H(n, n) + exshift;
      if (q >= 0) {
        z = (p >= 0) ? p + z : p - z;
        wr[n - 1] = x + z;
        wr[n] = wr[n - 1];
        if (z != 0.0) wr[n] = x - w / z;
        wi[n - 1] = wi[n] = 0.0;
      } else {
        wr[n - 1] = wr[n] = x + p;
        wi[n - 1] = z;
        wi[n] = -z;
      }
      n -= 2;
      iter = 0;
    } else {
      x = H(n, n);
      y = H(n - 1, n - 1);
      w = H(n, n - 1) * H(n - 1, n);

      // Exceptional shifts every ten iterations, alternating between the
      // two classic choices, break the cycles that defective eigenvalues
      // can otherwise settle into.
      const bool exceptional = iter > 0 && iter % 10 == 0;
      if (exceptional && (iter / 10) % 2 == 1) {
        exshift += x;
        for (int i = low; i <= n; ++i) H(i, i) -= x;
        s = std::abs(H(n, n - 1)) + std::abs(H(n - 1, n - 2));
        x = y = 0.75 * s;
        w = -0.4375 * s * s;
      }
      if (exceptional && (iter / 10) % 2 == 0) {
        s = (y - x) / 2.0;
        s = s * s + w;
        if (s > 0) {
          s = std::sqrt(s);
          if (y < x) s = -s;
          s = x - w / ((y - x) / 2.0 + s);
          for (int i = low; i <= n; ++i) H(i, i) -= s;
          exshift += s;
          x = y = w = 0.964;
        }
      }
      if (++iter > kMaxQrIterationsPerEigenvalue)
        throw NumericalError("Hessenberg QR iteration did not converge");

      int m = n - 2;
      while (m >= l) {
        z = H(m, m);
        r = x - z;
        s = y - z;
        p = (r * s - w) / H(m + 1, m) + H(m, m + 1);
        q = H(m + 1, m + 1) - z - r - s;
        r = H(m + 2, m + 1);
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        if (std::abs(H(m, m - 1)) * (std::abs(q) + std::abs(r)) <
            kMachineEps * (std::abs(p) * (std::abs(H(m - 1, m - 1)) + std::abs(z) + std::abs(H(m + 1, m + 1)))))
          break;
        --m;
      }
      for (int i = m + 2; i <= n; ++i) {
        H(i, i - 2) = 0.0;
        if (i > m + 2) H(i, i - 3) = 0.0;
      }

      for (int k = m; k <= n - 1; ++k) {
        const bool notlast = (k != n - 1);
        if (k != m) {
          p = H(k, k - 1);
          q = H(k + 1, k - 1);
          r = notlast ? H(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x == 0.0) continue;
          p /= x;
          q /= x;
          r /= x;
        }
        s = std::sqrt(p * p + q * q + r * r);
        if (p < 0) s = -s;
        if (s == 0.0) continue;
        if (k != m)
          H(k, k - 1) = -s * x;
        else if (l != m)
          H(k, k - 1) = -H(k, k - 1);
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= n; ++j) {
          p = H(k, j) + q * H(k + 1, j);
          if (notlast) {
            p += r * H(k + 2, j);
            H(k + 2, j) -= p * z;
          }
          H(k, j) -= p * x;
          H(k + 1, j) -= p * y;
        }
        for (int i = l; i <= std::min(n, k + 3); ++i) {
          p = x * H(i, k) + y * H(i, k + 1);
          if (notlast) {
            p += z * H(i, k + 2);
            H(i, k + 2) -= p * r;
          }
          H(i, k) -= p;
          H(i, k + 1) -= p * q;
        }
      }
    }
  }

  std::vector<Complex> out(nn);
  for (int i = 0; i < nn; ++i) out[i] = {wr[i], wi[i]};
  return out;
}

// ---- cluster refinement ------------------------------------------------------

// Radius within which k computed eigenvalues are treated as one perturbed
// defective eigenvalue of multiplicity k.
double cluster_radius(std::size_t k, double scale) {
  return 2.0 * std::pow(1e-13 * scale, 1.0 / static_cast<double>(k));
}

std::vector<std::vector<Complex>> single_linkage(const std::vector<Complex>& pts, double link) {
  const std::size_t n = pts.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] < 0 && std::abs(pts[u] - pts[v]) <= link) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  std::vector<std::vector<Complex>> out(static_cast<std::size_t>(c));
  for (std::size_t i = 0; i < n; ++i) out[static_cast<std::size_t>(comp[i])].push_back(pts[i]);
  return out;
}

void refine_cluster(const std::vector<Complex>& pts, double scale, std::vector<Complex>& out) {
  const std::size_t k = pts.size();
  if (k == 1) {
    out.push_back(pts[0]);
    return;
  }
  Complex mean = std::accumulate(pts.begin(), pts.end(), Complex{}) / static_cast<double>(k);
  double spread = 0.0;
  for (auto z : pts) spread = std::max(spread, std::abs(z - mean));
  const double radius = cluster_radius(k, scale);
  if (spread <= radius) {
    if (std::abs(mean.imag()) <= radius) mean.imag(0.0);
    out.insert(out.end(), k, mean);
    return;
  }
  for (std::size_t kk = k - 1; kk >= 1; --kk) {
    const double link = kk == 1 ? 0.0 : 2.0 * cluster_radius(kk, scale);
    auto comps = single_linkage(pts, link);
    if (comps.size() > 1) {
      for (const auto& c : comps) refine_cluster(c, scale, out);
      return;
    }
  }
  // Only reachable if every point coincides, which the spread test covers.
  out.insert(out.end(), pts.begin(), pts.end());
}

}  // namespace

SymmetricEigen eig_symmetric(const RealMatrix& a, bool want_vectors) {
  require_square(a.rows(), a.cols(), "eig_symmetric");
  const std::size_t n = a.rows();
  RealMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) w(i, j) = w(j, i) = a(i, j);
  RealMatrix v = want_vectors ? RealMatrix::identity(n) : RealMatrix{};
  const auto d = jacobi_in_place(w, want_vectors ? &v : nullptr);
  const auto idx = ascending_order(d);

  SymmetricEigen out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = d[idx[k]];
  if (want_vectors) {
    out.vectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, idx[k]);
  }
  return out;
}

HermitianEigen eig_hermitian(const ComplexMatrix& h, bool want_vectors) {
  require_square(h.rows(), h.cols(), "eig_hermitian");
  const std::size_t m = h.rows();
  HermitianEigen out;
  if (m == 0) return out;

  const auto emb = eig_symmetric(real_embedding(h), want_vectors);
  const auto& w = emb.values;

  if (!want_vectors) {
    out.values.resize(m);
    for (std::size_t k = 0; k < m; ++k) out.values[k] = 0.5 * (w[2 * k] + w[2 * k + 1]);
    return out;
  }

  const double tol = 1e-12 * std::max(1.0, std::abs(w.front()) + std::abs(w.back()));
  struct Pair {
    double value;
    std::vector<Complex> vec;
  };
  std::vector<Pair> picked;
  picked.reserve(m);

  std::size_t begin = 0;
  while (begin < 2 * m) {
    std::size_t end = begin + 1;
    while (end < 2 * m && w[end] - w[end - 1] <= tol) ++end;
    const std::size_t size = end - begin;
    if (size % 2 != 0) throw NumericalError("eig_hermitian: embedded eigenvalues failed to pair up");

    std::vector<std::vector<Complex>> cand(size, std::vector<Complex>(m));
    for (std::size_t c = 0; c < size; ++c)
      for (std::size_t i = 0; i < m; ++i)
        cand[c][i] = {emb.vectors(i, begin + c), emb.vectors(i + m, begin + c)};

    // Pivoted Gram-Schmidt: size/2 orthonormal vectors span the cluster.
    std::vector<std::vector<Complex>> basis;
    std::vector<bool> used(size, false);
    for (std::size_t round = 0; round < size / 2; ++round) {
      std::size_t best = size;
      double best_norm = -1.0;
      for (std::size_t c = 0; c < size; ++c) {
        if (used[c]) continue;
        double nrm = 0.0;
        for (auto z : cand[c]) nrm += std::norm(z);
        if (nrm > best_norm) {
          best_norm = nrm;
          best = c;
        }
      }
      if (best_norm <= 1e-6) throw NumericalError("eig_hermitian: degenerate eigenvector reassembly");
      used[best] = true;
      std::vector<Complex> b = cand[best];
      const double inv = 1.0 / std::sqrt(best_norm);
      for (auto& z : b) z *= inv;
      // Re-orthogonalise once against the basis so far for stability.
      for (const auto& e : basis) {
        Complex dot{};
        for (std::size_t i = 0; i < m; ++i) dot += std::conj(e[i]) * b[i];
        for (std::size_t i = 0; i < m; ++i) b[i] -= dot * e[i];
      }
      double bn = 0.0;
      for (auto z : b) bn += std::norm(z);
      bn = std::sqrt(bn);
      for (auto& z : b) z /= bn;
      for (std::size_t c = 0; c < size; ++c) {
        if (used[c]) continue;
        Complex dot{};
        for (std::size_t i = 0; i < m; ++i) dot += std::conj(b[i]) * cand[c][i];
        for (std::size_t i = 0; i < m; ++i) cand[c][i] -= dot * b[i];
      }
      basis.push_back(std::move(b));
    }
    for (auto& b : basis) {
      Complex rq{};
      for (std::size_t i = 0; i < m; ++i) {
        Complex hb{};
        for (std::size_t j = 0; j < m; ++j) hb += h(i, j) * b[j];
        rq += std::conj(b[i]) * hb;
      }
      picked.push_back({rq.real(), std::move(b)});
    }
    begin = end;
  }

  std::stable_sort(picked.begin(), picked.end(), [](const Pair& a, const Pair& b) { return a.value < b.value; });
  out.values.resize(m);
  out.vectors = ComplexMatrix(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    out.values[k] = picked[k].value;
    for (std::size_t i = 0; i < m; ++i) out.vectors(i, k) = picked[k].vec[i];
  }
  return out;
}

double max_eigenvalue_hermitian(const ComplexMatrix& h) {
  const auto e = eig_hermitian(h, false);
  if (e.values.empty()) throw std::invalid_argument("max_eigenvalue_hermitian: empty matrix");
  return e.values.back();
}

ComplexMatrix hermitian_part(const ComplexMatrix& b) {
  require_square(b.rows(), b.cols(), "hermitian_part");
  const std::size_t n = b.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = b(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (b(i, j) + std::conj(b(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

RealMatrix symmetric_part(const RealMatrix& b) {
  require_square(b.rows(), b.cols(), "symmetric_part");
  const std::size_t n = b.rows();
  RealMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = b(i, i);
    for (std::size_t j = i + 1; j < n; ++j) s(i, j) = s(j, i) = 0.5 * (b(i, j) + b(j, i));
  }
  return s;
}

Spectrum eig_general_real_unrefined(const RealMatrix& m) {
  require_square(m.rows(), m.cols(), "eig_general_real");
  if (m.rows() == 0) return {};
  RealMatrix h = m;
  reduce_to_hessenberg(h);
  return Spectrum(hessenberg_qr(h));
}

Spectrum eig_general_real(const RealMatrix& m) {
  const auto raw = eig_general_real_unrefined(m);
  if (raw.size() <= 1) return raw;
  const double scale = std::max(1.0, frobenius_norm(m));
  std::vector<Complex> out;
  out.reserve(raw.size());
  refine_cluster(raw.values(), scale, out);
  return Spectrum(std::move(out));
}

}  // namespace polydig

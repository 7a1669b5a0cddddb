// Dense Hermitian eigensolver: complex Householder reduction to a Hermitian
// tridiagonal matrix, a diagonal phase similarity that makes the tridiagonal
// real, then the implicit QL iteration (tql2 from EISPACK).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tensorbound/errors.hpp"
#include "tensorbound/linalg.hpp"

namespace tensorbound {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> sub;  // sub[i] couples i and i-1; sub[0] = 0
  std::vector<Complex> basis;  // n x n unitary, row-major; empty when vectors were not requested
};

Tridiagonal tridiagonalize(const OperatorMatrix& input, bool want_vectors) {
  const std::size_t n = input.dim();
  // Work on the exactly Hermitian part.
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (input(i, j) + std::conj(input(j, i)));

  std::vector<Complex> q;
  if (want_vectors) {
    q.assign(n * n, Complex{});
    for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  }

  std::vector<Complex> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double tail = 0.0;
    for (std::size_t i = k + 2; i < n; ++i) tail += std::norm(a[i * n + k]);
    if (tail == 0.0) continue;  // column already tridiagonal

    const Complex x0 = a[(k + 1) * n + k];
    const double norm_x = std::sqrt(tail + std::norm(x0));
    const double abs_x0 = std::abs(x0);
    const Complex phase = abs_x0 == 0.0 ? Complex{1.0} : x0 / abs_x0;
    const Complex alpha = -phase * norm_x;

    std::fill(v.begin(), v.end(), Complex{});
    v[k + 1] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a[i * n + k];
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
    vnorm = std::sqrt(vnorm);
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // H A H with H = I - 2 v v*:  A - 2 v p* - 2 p v* + 4 K v v*,  p = A v, K = v* p.
    double kappa = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      Complex s{};
      for (std::size_t j = k + 1; j < n; ++j) s += a[i * n + j] * v[j];
      p[i] = s;
    }
    for (std::size_t i = k + 1; i < n; ++i) kappa += (std::conj(v[i]) * p[i]).real();
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        a[i * n + j] -= 2.0 * (v[i] * std::conj(p[j]) + p[i] * std::conj(v[j])) -
                        4.0 * kappa * v[i] * std::conj(v[j]);
      }
    }
    // Exact zeros below the subdiagonal of column k (and their mirror images).
    a[(k + 1) * n + k] = alpha;
    a[k * n + (k + 1)] = std::conj(alpha);
    for (std::size_t i = k + 2; i < n; ++i) {
      a[i * n + k] = Complex{};
      a[k * n + i] = Complex{};
    }

    if (want_vectors) {
      // Q <- Q H
      for (std::size_t r = 0; r < n; ++r) {
        Complex qv{};
        for (std::size_t j = k + 1; j < n; ++j) qv += q[r * n + j] * v[j];
        for (std::size_t j = k + 1; j < n; ++j) q[r * n + j] -= 2.0 * qv * std::conj(v[j]);
      }
    }
  }

  Tridiagonal t;
  t.diag.resize(n);
  t.sub.assign(n, 0.0);
  std::vector<Complex> phase(n, Complex{1.0});
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a[i * n + i].real();
  for (std::size_t i = 1; i < n; ++i) {
    const Complex off = a[i * n + (i - 1)];
    const double mag = std::abs(off);
    t.sub[i] = mag;
    phase[i] = mag == 0.0 ? phase[i - 1] : phase[i - 1] * (off / mag);
  }
  if (want_vectors) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) q[r * n + c] *= phase[c];
    t.basis = std::move(q);
  }
  return t;
}

// Implicit QL on a real symmetric tridiagonal matrix. On return d holds the
// eigenvalues in ascending order and, when z is non-empty, z (n x n, row-major)
// the matching eigenvectors as columns.
void tql2(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  const bool vectors = !z.empty();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 30 * n + 60) throw ConvergenceError("implicit QL failed to converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (vectors) {
            for (int k = 0; k < n; ++k) {
              double& zi = z[static_cast<std::size_t>(k * n + i)];
              double& zi1 = z[static_cast<std::size_t>(k * n + i + 1)];
              h = zi1;
              zi1 = s * zi + c * h;
              zi = c * zi - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

void require_hermitian(const OperatorMatrix& a) {
  const double defect = a.hermiticity_defect();
  if (defect > hermitian_tolerance(a)) {
    throw ValidationError("matrix is not Hermitian: |a - a*|_F = " + std::to_string(defect));
  }
}

}  // namespace

SpectralSummary summarize_spectrum(std::vector<double> ascending) {
  SpectralSummary s;
  s.eigenvalues = std::move(ascending);
  s.lambda_min = s.eigenvalues.front();
  s.lambda_max = s.eigenvalues.back();
  s.spectral_norm = std::max(std::abs(s.lambda_min), std::abs(s.lambda_max));
  return s;
}

SpectralSummary hermitian_eig(const OperatorMatrix& a) {
  require_hermitian(a);
  Tridiagonal t = tridiagonalize(a, false);
  std::vector<double> none;
  tql2(t.diag, t.sub, none);
  std::sort(t.diag.begin(), t.diag.end());
  return summarize_spectrum(std::move(t.diag));
}

EigenDecomposition hermitian_eigensystem(const OperatorMatrix& a) {
  require_hermitian(a);
  const std::size_t n = a.dim();
  Tridiagonal t = tridiagonalize(a, true);
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  tql2(t.diag, t.sub, z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return t.diag[l] < t.diag[r]; });

  EigenDecomposition out{std::vector<double>(n), OperatorMatrix(n)};
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.eigenvalues[c] = t.diag[src];
    for (std::size_t r = 0; r < n; ++r) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) sum += t.basis[r * n + k] * z[k * n + src];
      out.vectors(r, c) = sum;
    }
  }
  return out;
}

double spectral_norm(const OperatorMatrix& a) {
  if (a.hermiticity_defect() <= hermitian_tolerance(a)) return hermitian_eig(a).spectral_norm;
  const OperatorMatrix gram = a.adjoint() * a;
  return std::sqrt(std::max(0.0, hermitian_eig(gram).lambda_max));
}

}  // namespace tensorbound

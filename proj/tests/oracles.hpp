// Independent reference computations for the unit and acceptance tests.
// Nothing here calls the library code it is used to check.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "helios/poly.hpp"

namespace oracle {

using helios::Complex;
using helios::CVector;

// Term-by-term evaluation with std::pow.
inline Complex evaluate(const helios::Polynomial& p, const CVector& x) {
  Complex sum = 0.0;
  for (const auto& term : p.terms()) {
    Complex v = term.coefficient;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (term.exponents[i] != 0) v *= std::pow(x[i], term.exponents[i]);
    sum += v;
  }
  return sum;
}

// Central differences along real directions; the polynomials are holomorphic,
// so this approximates the complex derivative.
inline std::vector<CVector> fd_jacobian(const helios::PolySystem& s, CVector x, double h = 1e-7) {
  std::vector<CVector> J(s.equation_count(), CVector(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Complex saved = x[j];
    x[j] = saved + h;
    CVector plus;
    for (const auto& p : s.polys()) plus.push_back(evaluate(p, x));
    x[j] = saved - h;
    CVector minus;
    for (const auto& p : s.polys()) minus.push_back(evaluate(p, x));
    x[j] = saved;
    for (std::size_t i = 0; i < J.size(); ++i) J[i][j] = (plus[i] - minus[i]) / (2.0 * h);
  }
  return J;
}

// Gaussian elimination with full pivoting, for Newton sequences in tests.
inline CVector gauss_solve(std::vector<CVector> a, CVector b) {
  const std::size_t n = b.size();
  std::vector<std::size_t> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (std::abs(a[i][j]) > std::abs(a[pr][pc])) pr = i, pc = j;
    std::swap(a[k], a[pr]);
    std::swap(b[k], b[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    std::swap(col[k], col[pc]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  CVector y(n);
  for (std::size_t k = n; k-- > 0;) {
    Complex v = b[k];
    for (std::size_t j = k + 1; j < n; ++j) v -= a[k][j] * y[j];
    y[k] = v / a[k][k];
  }
  CVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[col[k]] = y[k];
  return x;
}

inline double max_abs(const CVector& v) {
  double m = 0.0;
  for (auto z : v) m = std::max(m, std::abs(z));
  return m;
}

inline double distance(const CVector& a, const CVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Every point of `a` has a partner in `b` within tol and vice versa, counts equal.
inline bool same_set(const std::vector<CVector>& a, const std::vector<CVector>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && distance(p, b[j]) <= tol) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

// Random canonical-ish polynomial: unit-circle coefficients, bounded degree.
inline helios::Polynomial random_polynomial(std::mt19937_64& gen, const std::vector<std::string>& vars, int max_degree,
                                            int terms) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_int_distribution<int> exponent(0, max_degree);
  std::vector<helios::Term> out;
  for (int k = 0; k < terms; ++k) {
    helios::Exponents e(vars.size());
    int budget = max_degree;
    for (auto& a : e) {
      a = std::min(exponent(gen), budget);
      budget -= a;
    }
    out.push_back({std::polar(1.0, angle(gen)), e});
  }
  return helios::Polynomial(vars, out);
}

inline CVector random_point(std::mt19937_64& gen, std::size_t n, double radius = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVector x(n);
  for (auto& z : x) {
    do z = {u(gen), u(gen)};
    while (std::abs(z) > 1.0);
    z *= radius;
  }
  return x;
}

// Half-spaces of a 3D hull found by brute force over point triples:
// a plane through three points bounds the hull iff all points lie on one side.
struct Plane {
  std::array<double, 3> normal;
  double offset;  // normal . x <= offset inside
};

inline std::vector<Plane> hull_planes(const std::vector<std::array<double, 3>>& pts) {
  std::vector<Plane> planes;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::array<double, 3> u{}, v{};
        for (int k = 0; k < 3; ++k) u[k] = pts[b][k] - pts[a][k], v[k] = pts[c][k] - pts[a][k];
        std::array<double, 3> nrm{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        if (std::abs(nrm[0]) + std::abs(nrm[1]) + std::abs(nrm[2]) == 0.0) continue;
        const double off = nrm[0] * pts[a][0] + nrm[1] * pts[a][1] + nrm[2] * pts[a][2];
        bool below = true, above = true;
        for (const auto& p : pts) {
          const double s = nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2] - off;
          if (s > 1e-9) below = false;
          if (s < -1e-9) above = false;
        }
        if (below) planes.push_back({nrm, off});
        if (above) planes.push_back({{-nrm[0], -nrm[1], -nrm[2]}, -off});
      }
  return planes;
}

// Monte-Carlo volume of the hull of lattice points in R^3.
inline double monte_carlo_volume(const std::vector<helios::Exponents>& points, int samples, std::uint64_t seed) {
  std::vector<std::array<double, 3>> pts;
  std::array<double, 3> lo{1e9, 1e9, 1e9}, hi{-1e9, -1e9, -1e9};
  for (const auto& p : points) {
    std::array<double, 3> q{double(p[0]), double(p[1]), double(p[2])};
    for (int k = 0; k < 3; ++k) lo[k] = std::min(lo[k], q[k]), hi[k] = std::max(hi[k], q[k]);
    pts.push_back(q);
  }
  const auto planes = hull_planes(pts);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int inside = 0;
  for (int s = 0; s < samples; ++s) {
    std::array<double, 3> x;
    for (int k = 0; k < 3; ++k) x[k] = lo[k] + (hi[k] - lo[k]) * u(gen);
    bool in = true;
    for (const auto& pl : planes)
      if (pl.normal[0] * x[0] + pl.normal[1] * x[1] + pl.normal[2] * x[2] > pl.offset + 1e-12) {
        in = false;
        break;
      }
    inside += in;
  }
  return (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]) * inside / samples;
}

// Newton update norms from x0 using the FD-free exact Jacobian `jac`.
inline std::vector<double> newton_updates(const std::function<CVector(const CVector&)>& f,
                                          const std::function<std::vector<CVector>(const CVector&)>& jac, CVector x,
                                          int iterations) {
  std::vector<double> updates;
  for (int k = 0; k < iterations; ++k) {
    CVector r = f(x);
    for (auto& v : r) v = -v;
    const CVector dx = gauss_solve(jac(x), r);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
    updates.push_back(max_abs(dx));
  }
  return updates;
}

}  // namespace oracle

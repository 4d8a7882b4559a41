#include "helios/binmaps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "helios/error.hpp"
#include "helios/parse.hpp"

namespace helios {

namespace {

constexpr double kCoefficientTolerance = 1e-10;
constexpr double kRelationTolerance = 1e-8;
constexpr std::size_t kMaxVariables = 20;

using IntVector = std::vector<std::int64_t>;

// a*x + b*y = g with g >= 0.
std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// Column echelon form M * W = [L | 0] with W unimodular; pivot entries positive.
struct ColumnEchelon {
  IntMatrix L;                     // q x m
  IntMatrix W;                     // m x m
  std::vector<std::size_t> pivot;  // pivot row of column k, k < rank
  std::size_t rank = 0;
};

ColumnEchelon column_echelon(const IntMatrix& M, std::size_t m) {
  ColumnEchelon e;
  e.L = M;
  e.W.assign(m, IntVector(m, 0));
  for (std::size_t i = 0; i < m; ++i) e.W[i][i] = 1;

  // Columns a, b of (L, W) become u*a + v*b and -(B/g)*a + (A/g)*b.
  auto combine = [&](std::size_t a, std::size_t b, std::int64_t u, std::int64_t v, std::int64_t p, std::int64_t q) {
    for (auto& row : e.L) std::tie(row[a], row[b]) = std::make_pair(u * row[a] + v * row[b], p * row[a] + q * row[b]);
    for (auto& row : e.W) std::tie(row[a], row[b]) = std::make_pair(u * row[a] + v * row[b], p * row[a] + q * row[b]);
  };

  std::size_t col = 0;
  for (std::size_t r = 0; r < e.L.size() && col < m; ++r) {
    for (std::size_t j = col + 1; j < m; ++j) {
      const std::int64_t a = e.L[r][col], b = e.L[r][j];
      if (b == 0) continue;
      std::int64_t u = 0, v = 0;
      const std::int64_t g = extended_gcd(a, b, u, v);
      combine(col, j, u, v, -b / g, a / g);
    }
    if (e.L[r][col] == 0) continue;
    if (e.L[r][col] < 0) {
      for (auto& row : e.L) row[col] = -row[col];
      for (auto& row : e.W) row[col] = -row[col];
    }
    e.pivot.push_back(r);
    ++col;
  }
  e.rank = col;
  return e;
}

// Row Hermite normal form of the k x m matrix A by unimodular row operations.
IntMatrix row_hermite(IntMatrix A) {
  const std::size_t k = A.size();
  if (k == 0) return A;
  const std::size_t m = A[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < m && row < k; ++c) {
    for (std::size_t i = row + 1; i < k; ++i) {
      if (A[i][c] == 0) continue;
      std::int64_t u = 0, v = 0;
      const std::int64_t a = A[row][c], b = A[i][c];
      const std::int64_t g = extended_gcd(a, b, u, v);
      for (std::size_t j = 0; j < m; ++j)
        std::tie(A[row][j], A[i][j]) = std::make_pair(u * A[row][j] + v * A[i][j], (-b / g) * A[row][j] + (a / g) * A[i][j]);
    }
    if (A[row][c] == 0) continue;
    if (A[row][c] < 0)
      for (auto& x : A[row]) x = -x;
    for (std::size_t i = 0; i < row; ++i) {
      const std::int64_t p = A[row][c];
      std::int64_t q = A[i][c] / p;
      if (A[i][c] - q * p < 0) --q;
      for (std::size_t j = 0; j < m; ++j) A[i][j] -= q * A[row][j];
    }
    ++row;
  }
  return A;
}

// Integer basis of {w : A w = 0} as columns of an m x (m - rank) matrix.
IntMatrix integer_kernel(const IntMatrix& A, std::size_t m) {
  const ColumnEchelon e = column_echelon(A, m);
  IntMatrix K(m, IntVector(m - e.rank));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = e.rank; j < m; ++j) K[i][j - e.rank] = e.W[i][j];
  return K;
}

Complex power(Complex z, std::int64_t e) {
  if (e >= 0) return ipow(z, static_cast<int>(e));
  return 1.0 / ipow(z, static_cast<int>(-e));
}

bool close(Complex a, Complex b) { return std::abs(a - b) <= kRelationTolerance * std::max({1.0, std::abs(a), std::abs(b)}); }

// Strict homogeneous system G v > 0 feasible? Fourier-Motzkin elimination.
bool strictly_feasible(IntMatrix G) {
  for (const auto& row : G)
    if (std::all_of(row.begin(), row.end(), [](std::int64_t x) { return x == 0; })) return false;
  if (G.empty()) return true;
  const std::size_t vars = G[0].size();
  for (std::size_t j = 0; j < vars; ++j) {
    IntMatrix positive, negative, next;
    for (auto& row : G) {
      if (row[j] > 0) positive.push_back(row);
      else if (row[j] < 0) negative.push_back(row);
      else next.push_back(row);
    }
    for (const auto& p : positive)
      for (const auto& q : negative) {
        IntVector row(vars);
        std::int64_t g = 0;
        for (std::size_t c = 0; c < vars; ++c) {
          row[c] = -q[j] * p[c] + p[j] * q[c];
          g = std::gcd(g, row[c]);
        }
        if (g > 1)
          for (auto& x : row) x /= g;
        if (std::all_of(row.begin(), row.end(), [](std::int64_t x) { return x == 0; })) return false;
        next.push_back(std::move(row));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    G = std::move(next);
    if (G.empty()) return true;
  }
  return G.empty();
}

// One map per branch: y_k^{L[p_k][k]} = gamma_{p_k} / prod_{j<k} y_j^{L[p_k][j]}.
void branches(const ColumnEchelon& e, const CVector& gamma, std::size_t k, CVector& y, std::vector<CVector>& out) {
  if (k == e.rank) {
    for (std::size_t r = 0; r < e.L.size(); ++r) {
      if (std::find(e.pivot.begin(), e.pivot.end(), r) != e.pivot.end()) continue;
      Complex lhs = 1.0;
      for (std::size_t j = 0; j < e.rank; ++j) lhs *= power(y[j], e.L[r][j]);
      if (!close(lhs, gamma[r])) return;
    }
    out.push_back(y);
    return;
  }
  const std::size_t r = e.pivot[k];
  Complex rhs = gamma[r];
  for (std::size_t j = 0; j < k; ++j) rhs /= power(y[j], e.L[r][j]);
  const std::int64_t d = e.L[r][k];
  const double modulus = std::pow(std::abs(rhs), 1.0 / static_cast<double>(d));
  const double angle = std::arg(rhs);
  for (std::int64_t b = 0; b < d; ++b) {
    y[k] = std::polar(modulus, (angle + 2.0 * std::numbers::pi * static_cast<double>(b)) / static_cast<double>(d));
    branches(e, gamma, k + 1, y, out);
  }
}

std::vector<MonomialMap> maps_for_zero_set(const PolySystem& s, const std::vector<bool>& zero) {
  const std::size_t n = s.variable_count();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!zero[i]) free.push_back(i);
  const std::size_t m = free.size();

  IntMatrix M;
  CVector gamma;
  for (const auto& p : s.polys()) {
    const auto& a = p.terms()[0];
    const auto& b = p.terms()[1];
    auto touches = [&](const Exponents& e) {
      for (std::size_t i = 0; i < n; ++i)
        if (zero[i] && e[i] > 0) return true;
      return false;
    };
    const bool in_a = touches(a.exponents), in_b = touches(b.exponents);
    if (in_a && in_b) continue;
    if (in_a != in_b) return {};
    IntVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = a.exponents[free[j]] - b.exponents[free[j]];
    M.push_back(std::move(row));
    gamma.push_back(-b.coefficient / a.coefficient);
  }

  const ColumnEchelon e = column_echelon(M, m);
  for (std::size_t r = 0; r < M.size(); ++r) {
    const bool is_zero_row = std::all_of(e.L[r].begin(), e.L[r].end(), [](std::int64_t x) { return x == 0; });
    // x^0 = gamma forces gamma = 1; rows without pivots are checked per branch.
    if (is_zero_row && !close(gamma[r], 1.0)) return {};
  }

  std::vector<CVector> ys;
  CVector y(e.rank);
  branches(e, gamma, 0, y, ys);

  const std::size_t k = m - e.rank;
  IntMatrix Kt(k, IntVector(m));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m; ++i) Kt[j][i] = e.W[i][e.rank + j];
  Kt = row_hermite(std::move(Kt));

  std::vector<MonomialMap> out;
  for (const auto& branch : ys) {
    MonomialMap map;
    map.variables = s.variables();
    map.zero = zero;
    map.parameters = k;
    map.coefficients.assign(n, 0.0);
    map.exponents.assign(n, IntVector(k, 0));
    for (std::size_t i = 0; i < m; ++i) {
      Complex c = 1.0;
      for (std::size_t j = 0; j < e.rank; ++j) c *= power(branch[j], e.W[i][j]);
      map.coefficients[free[i]] = c;
      for (std::size_t j = 0; j < k; ++j) map.exponents[free[i]][j] = Kt[j][i];
    }
    out.push_back(std::move(map));
  }
  return out;
}

CVector generic_parameters(std::size_t k) {
  CVector lambda(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double jj = static_cast<double>(j);
    lambda[j] = std::polar(0.83 + 0.211 * jj, 0.7071 + 1.3183 * jj);
  }
  return lambda;
}

}  // namespace

CVector MonomialMap::point(std::span<const Complex> lambda) const {
  if (lambda.size() != parameters) throw DimensionError("monomial map expects " + std::to_string(parameters) + " parameters");
  CVector x(variables.size(), 0.0);
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (zero[i]) continue;
    Complex v = coefficients[i];
    for (std::size_t j = 0; j < parameters; ++j) v *= power(lambda[j], exponents[i][j]);
    x[i] = v;
  }
  return x;
}

bool is_binomial(const PolySystem& s) {
  return std::all_of(s.polys().begin(), s.polys().end(), [](const Polynomial& p) { return p.terms().size() == 2; });
}

bool contained_in(const MonomialMap& inner, const MonomialMap& outer) {
  const std::size_t n = outer.variables.size();
  if (inner.variables != outer.variables) return false;
  if (inner.parameters > outer.parameters) return false;
  const CVector p = inner.point(generic_parameters(inner.parameters));
  const double scale = std::max(1.0, max_norm(p));

  // S: free coordinates of `outer` that are nonzero at p; T: those that vanish.
  std::vector<std::size_t> S, T;
  for (std::size_t i = 0; i < n; ++i) {
    const bool vanishes = std::abs(p[i]) <= kRelationTolerance * scale;
    if (outer.zero[i]) {
      if (!vanishes) return false;
    } else {
      (vanishes ? T : S).push_back(i);
    }
  }
  const std::size_t k = outer.parameters;

  // Limits along lambda = t^w mu: need K_S w = 0 and K_T w > 0.
  IntMatrix KS;
  for (auto i : S) KS.push_back(outer.exponents[i]);
  const IntMatrix N = integer_kernel(KS, k);
  const std::size_t free_dims = N.empty() ? 0 : N[0].size();
  IntMatrix G;
  for (auto i : T) {
    IntVector row(free_dims, 0);
    for (std::size_t c = 0; c < free_dims; ++c)
      for (std::size_t j = 0; j < k; ++j) row[c] += outer.exponents[i][j] * N[j][c];
    G.push_back(std::move(row));
  }
  if (!strictly_feasible(G)) return false;

  // p_S = c_S mu^{K_S}: every integer u with u^T K_S = 0 gives prod (p_i / c_i)^{u_i} = 1.
  IntMatrix KSt(k, IntVector(S.size()));
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t j = 0; j < k; ++j) KSt[j][a] = KS[a][j];
  const IntMatrix U = integer_kernel(KSt, S.size());
  const std::size_t relations = U.empty() ? 0 : U[0].size();
  for (std::size_t r = 0; r < relations; ++r) {
    Complex lhs = 1.0, rhs = 1.0;
    for (std::size_t a = 0; a < S.size(); ++a) {
      const Complex ratio = p[S[a]] / outer.coefficients[S[a]];
      const std::int64_t u = U[a][r];
      if (u > 0) lhs *= power(ratio, u);
      else if (u < 0) rhs *= power(ratio, -u);
    }
    if (!close(lhs, rhs)) return false;
  }
  return true;
}

std::vector<MonomialMap> monomial_maps(const PolySystem& s) {
  if (!is_binomial(s)) throw Error("monomial maps need a binomial system (exactly two terms per equation)");
  const std::size_t n = s.variable_count();
  if (n > kMaxVariables) throw Error("binomial system has too many variables for zero-set enumeration");

  std::vector<MonomialMap> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> zero(n);
    for (std::size_t i = 0; i < n; ++i) zero[i] = (mask >> i) & 1U;
    for (auto& map : maps_for_zero_set(s, zero)) all.push_back(std::move(map));
  }

  std::vector<MonomialMap> maximal;
  for (std::size_t a = 0; a < all.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < all.size() && !dominated; ++b) {
      if (a == b || !contained_in(all[a], all[b])) continue;
      // Equal images keep the first occurrence.
      dominated = !contained_in(all[b], all[a]) || b < a;
    }
    if (!dominated) maximal.push_back(all[a]);
  }
  return maximal;
}

bool verify_map(const PolySystem& s, const MonomialMap& m) {
  if (s.variables() != m.variables) return false;
  const std::size_t n = s.variable_count();
  for (const auto& p : s.polys()) {
    std::map<IntVector, Complex> laurent;
    double scale = 0.0;
    for (const auto& term : p.terms()) {
      bool vanishes = false;
      Complex c = term.coefficient;
      IntVector e(m.parameters, 0);
      for (std::size_t i = 0; i < n && !vanishes; ++i) {
        const int a = term.exponents[i];
        if (a == 0) continue;
        if (m.zero[i]) {
          vanishes = true;
          break;
        }
        c *= ipow(m.coefficients[i], a);
        for (std::size_t j = 0; j < m.parameters; ++j) e[j] += a * m.exponents[i][j];
      }
      if (vanishes) continue;
      scale = std::max(scale, std::abs(c));
      laurent[e] += c;
    }
    for (const auto& [e, c] : laurent)
      if (std::abs(c) > kCoefficientTolerance * std::max(1.0, scale)) return false;
  }
  return true;
}

std::string format_map(const MonomialMap& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.variables.size(); ++i) {
    if (i > 0) out += ", ";
    out += m.variables[i] + " = ";
    if (m.zero[i]) {
      out += "0";
      continue;
    }
    std::string factors;
    for (std::size_t j = 0; j < m.parameters; ++j) {
      const std::int64_t e = m.exponents[i][j];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "L" + std::to_string(j + 1);
      if (e < 0) factors += "**(" + std::to_string(e) + ")";
      else if (e > 1) factors += "**" + std::to_string(e);
    }
    const Complex c = m.coefficients[i];
    if (std::abs(c - 1.0) <= kCoefficientTolerance) {
      out += factors.empty() ? "1" : factors;
      continue;
    }
    std::string coefficient = format_polynomial(Polynomial({}, {{c, {}}}));
    coefficient.pop_back();  // ';'
    if (factors.empty()) {
      out += coefficient;
    } else {
      if (coefficient.front() != '(') coefficient = "(" + coefficient + ")";
      out += coefficient + "*" + factors;
    }
  }
  return out + ")";
}

}  // namespace helios

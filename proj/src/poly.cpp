#include "helios/poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "helios/error.hpp"

namespace helios {

namespace {

// powers[k][e] = x_k^e for e up to the largest exponent of variable k.
std::vector<CVector> power_table(std::span<const Complex> x, const std::vector<Term>& terms) {
  std::vector<int> top(x.size(), 0);
  for (const auto& t : terms)
    for (std::size_t k = 0; k < x.size(); ++k) top[k] = std::max(top[k], t.exponents[k]);
  std::vector<CVector> powers(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    powers[k].resize(static_cast<std::size_t>(top[k]) + 1);
    powers[k][0] = 1.0;
    for (int e = 1; e <= top[k]; ++e) powers[k][e] = powers[k][e - 1] * x[k];
  }
  return powers;
}

void check_length(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw DimensionError("expected a point with " + std::to_string(expected) + " coordinates, got " +
                         std::to_string(got));
}

}  // namespace

int Term::total_degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

Complex ipow(Complex x, int e) {
  Complex result = 1.0;
  while (e > 0) {
    if (e & 1) result *= x;
    x *= x;
    e >>= 1;
  }
  return result;
}

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial::Polynomial(std::vector<std::string> variables, std::vector<Term> terms)
    : variables_(std::move(variables)) {
  std::map<Exponents, Complex> combined;
  for (auto& t : terms) {
    if (t.exponents.size() != variables_.size())
      throw DimensionError("term has " + std::to_string(t.exponents.size()) + " exponents but polynomial has " +
                           std::to_string(variables_.size()) + " variables");
    if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag()))
      throw Error("non-finite coefficient");
    for (int e : t.exponents)
      if (e < 0) throw Error("negative exponent in polynomial term");
    combined[t.exponents] += t.coefficient;
  }
  terms_.reserve(combined.size());
  for (auto& [exps, c] : combined)
    if (std::abs(c) >= kZeroCoefficient) terms_.push_back({c, exps});
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exponents, b.exponents); });
}

Polynomial Polynomial::constant(std::vector<std::string> variables, Complex c) {
  Exponents zero(variables.size(), 0);
  return Polynomial(std::move(variables), {{c, std::move(zero)}});
}

Complex Polynomial::evaluate(std::span<const Complex> x) const {
  check_length(variables_.size(), x.size());
  const auto powers = power_table(x, terms_);
  Complex sum = 0.0;
  for (const auto& t : terms_) {
    Complex m = t.coefficient;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (t.exponents[k] != 0) m *= powers[k][t.exponents[k]];
    sum += m;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t j) const {
  if (j >= variables_.size()) throw DimensionError("derivative index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[j] == 0) continue;
    Term d = t;
    d.coefficient *= static_cast<double>(t.exponents[j]);
    d.exponents[j] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(variables_, std::move(out));
}

CVector Polynomial::gradient(std::span<const Complex> x) const {
  check_length(variables_.size(), x.size());
  const auto powers = power_table(x, terms_);
  const std::size_t n = x.size();
  CVector grad(n, 0.0);
  for (const auto& t : terms_) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.exponents[j] == 0) continue;
      Complex m = t.coefficient * static_cast<double>(t.exponents[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const int e = k == j ? t.exponents[k] - 1 : t.exponents[k];
        if (e != 0) m *= powers[k][e];
      }
      grad[j] += m;
    }
  }
  return grad;
}

std::vector<double> Polynomial::gradient_magnitude(std::span<const Complex> x) const {
  check_length(variables_.size(), x.size());
  const std::size_t n = x.size();
  std::vector<double> mag(n, 0.0);
  for (const auto& t : terms_) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.exponents[j] == 0) continue;
      double m = std::abs(t.coefficient) * t.exponents[j];
      for (std::size_t k = 0; k < n; ++k) {
        const int e = k == j ? t.exponents[k] - 1 : t.exponents[k];
        if (e != 0) m *= std::pow(std::abs(x[k]), e);
      }
      mag[j] += m;
    }
  }
  return mag;
}

int Polynomial::degree() const {
  if (terms_.empty()) throw Error("degree of the zero polynomial is undefined");
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.total_degree());
  return d;
}

std::vector<Exponents> Polynomial::support() const {
  std::vector<Exponents> pts;
  pts.reserve(terms_.size());
  for (const auto& t : terms_) pts.push_back(t.exponents);
  return pts;
}

Polynomial Polynomial::scaled(Complex factor) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient *= factor;
  return Polynomial(variables_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.variables_ != variables_) throw DimensionError("adding polynomials over different variables");
  std::vector<Term> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(variables_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other.scaled(-1.0); }

Polynomial Polynomial::extended(const std::vector<std::string>& variables) const {
  if (variables.size() < variables_.size() || !std::equal(variables_.begin(), variables_.end(), variables.begin()))
    throw DimensionError("extended variable list must start with the current variables");
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exponents.resize(variables.size(), 0);
  return Polynomial(variables, std::move(out));
}

PolySystem::PolySystem(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw DimensionError("a polynomial system needs at least one equation");
  variables_ = polys_.front().variables();
  for (const auto& p : polys_)
    if (p.variables() != variables_) throw DimensionError("polynomials of a system must share one variable list");
}

PolySystem::PolySystem(std::vector<std::string> variables, std::vector<Polynomial> polys)
    : variables_(std::move(variables)), polys_(std::move(polys)) {
  if (polys_.empty()) throw DimensionError("a polynomial system needs at least one equation");
  for (const auto& p : polys_)
    if (p.variables() != variables_) throw DimensionError("polynomials of a system must share one variable list");
}

CVector PolySystem::evaluate(std::span<const Complex> x) const {
  CVector v;
  v.reserve(polys_.size());
  for (const auto& p : polys_) v.push_back(p.evaluate(x));
  return v;
}

CMatrix PolySystem::jacobian(std::span<const Complex> x) const {
  CMatrix jac(polys_.size(), variables_.size());
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const CVector g = polys_[i].gradient(x);
    std::copy(g.begin(), g.end(), jac.row(i).begin());
  }
  return jac;
}

std::vector<std::vector<double>> PolySystem::jacobian_magnitude(std::span<const Complex> x) const {
  std::vector<std::vector<double>> mag;
  mag.reserve(polys_.size());
  for (const auto& p : polys_) mag.push_back(p.gradient_magnitude(x));
  return mag;
}

std::vector<int> PolySystem::degrees() const {
  std::vector<int> d;
  d.reserve(polys_.size());
  for (const auto& p : polys_) d.push_back(p.degree());
  return d;
}

double max_norm(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace helios

#include "helios/homotopy.hpp"

#include <algorithm>
#include <cmath>

#include "helios/error.hpp"

namespace helios {

Homotopy::Homotopy(PolySystem target, PolySystem start, Complex gamma)
    : target_(std::move(target)), start_(std::move(start)), gamma_(gamma) {
  if (!target_.is_square() || !start_.is_square()) throw DimensionError("homotopy systems must be square");
  if (target_.variables() != start_.variables())
    throw DimensionError("target and start systems must share their variables");
  if (std::abs(std::abs(gamma_) - 1.0) > 1e-12) throw Error("gamma must have modulus one");
}

HomotopyValue Homotopy::evaluate(std::span<const Complex> x, double t) const {
  const std::size_t n = dimension();
  if (x.size() != n) throw DimensionError("homotopy point has the wrong length");
  const CVector fv = target_.evaluate(x);
  const CVector gv = start_.evaluate(x);
  const CMatrix fj = target_.jacobian(x);
  const CMatrix gj = start_.jacobian(x);
  const Complex gs = gamma_ * (1.0 - t);
  HomotopyValue out{CVector(n), CMatrix(n, n), CVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.value[i] = gs * gv[i] + t * fv[i];
    out.dt[i] = fv[i] - gamma_ * gv[i];
    for (std::size_t j = 0; j < n; ++j) out.jx(i, j) = gs * gj(i, j) + t * fj(i, j);
  }
  return out;
}

CVector Homotopy::value(std::span<const Complex> x, double t) const {
  const CVector fv = target_.evaluate(x);
  const CVector gv = start_.evaluate(x);
  CVector out(fv.size());
  for (std::size_t i = 0; i < fv.size(); ++i) out[i] = gamma_ * (1.0 - t) * gv[i] + t * fv[i];
  return out;
}

Homotopy make_gamma_homotopy(const PolySystem& f, const PolySystem& g, Rng& rng) {
  return Homotopy(f, g, rng.unit_circle());
}

PolySystem substitute(const PolySystem& s, const std::vector<std::string>& names, std::span<const Complex> values) {
  if (names.size() != values.size()) throw DimensionError("one value is needed per substituted name");
  const auto& vars = s.variables();
  std::vector<std::size_t> fixed;
  for (const auto& name : names) {
    const auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw Error("unknown parameter '" + name + "'");
    fixed.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  std::vector<std::string> remaining;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (std::find(fixed.begin(), fixed.end(), k) != fixed.end()) continue;
    remaining.push_back(vars[k]);
    keep.push_back(k);
  }
  if (remaining.empty()) throw DimensionError("substitution leaves no variables");
  std::vector<Polynomial> polys;
  for (const auto& p : s.polys()) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Complex c = t.coefficient;
      for (std::size_t a = 0; a < fixed.size(); ++a) c *= ipow(values[a], t.exponents[fixed[a]]);
      Exponents e;
      for (auto k : keep) e.push_back(t.exponents[k]);
      terms.push_back({c, std::move(e)});
    }
    polys.emplace_back(remaining, std::move(terms));
  }
  return PolySystem(remaining, std::move(polys));
}

Homotopy make_parameter_homotopy(const PolySystem& family, const std::vector<std::string>& parameters,
                                 std::span<const Complex> lambda0, std::span<const Complex> lambda1) {
  PolySystem start = substitute(family, parameters, lambda0);
  PolySystem target = substitute(family, parameters, lambda1);
  if (!start.is_square()) throw DimensionError("parameter substitution does not give a square system");
  return Homotopy(std::move(target), std::move(start), 1.0);
}

}  // namespace helios

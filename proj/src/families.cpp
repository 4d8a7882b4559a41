#include "helios/families.hpp"

#include "helios/error.hpp"

namespace helios {

namespace {

void check_size(const char* name, int n) {
  if (n < 2) throw Error(std::string(name) + " needs n >= 2, got " + std::to_string(n));
}

}  // namespace

PolySystem cyclic(int n) {
  check_size("cyclic", n);
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<Polynomial> eqs;
  for (std::size_t k = 1; k < size; ++k) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < size; ++i) {
      Exponents e(size, 0);
      for (std::size_t j = i; j < i + k; ++j) e[j % size] += 1;
      terms.push_back({1.0, std::move(e)});
    }
    eqs.emplace_back(vars, std::move(terms));
  }
  eqs.emplace_back(vars, std::vector<Term>{{1.0, Exponents(size, 1)}, {-1.0, Exponents(size, 0)}});
  return PolySystem(vars, std::move(eqs));
}

PolySystem noon(int n) {
  check_size("noon", n);
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<Polynomial> eqs;
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < size; ++j) {
      if (j == i) continue;
      Exponents e(size, 0);
      e[i] = 1;
      e[j] = 2;
      terms.push_back({1.0, std::move(e)});
    }
    Exponents linear(size, 0);
    linear[i] = 1;
    terms.push_back({-1.1, std::move(linear)});
    terms.push_back({1.0, Exponents(size, 0)});
    eqs.emplace_back(vars, std::move(terms));
  }
  return PolySystem(vars, std::move(eqs));
}

PolySystem family(const std::string& name, int n) {
  if (name == "cyclic") return cyclic(n);
  if (name == "noon") return noon(n);
  throw Error("unknown family '" + name + "' (expected cyclic or noon)");
}

}  // namespace helios

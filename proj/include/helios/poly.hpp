#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace helios {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using Exponents = std::vector<int>;

/// Coefficients with magnitude below this after combining like terms are dropped.
inline constexpr double kZeroCoefficient = 1e-300;

struct Term {
  Complex coefficient;
  Exponents exponents;

  int total_degree() const;
  bool operator==(const Term&) const = default;
};

/// Graded-lex "greater than": higher total degree first, ties broken lexicographically.
bool grlex_greater(const Exponents& a, const Exponents& b);

/// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Sparse multivariate polynomial over the complex doubles.
///
/// Always canonical: like terms combined, near-zero coefficients removed,
/// terms sorted in descending graded-lex order. Immutable after construction.
class Polynomial {
 public:
  /// The zero polynomial in the given variables.
  explicit Polynomial(std::vector<std::string> variables = {});
  /// Canonicalizes `terms`; throws DimensionError if an exponent vector has the wrong length
  /// or a coefficient is not finite.
  Polynomial(std::vector<std::string> variables, std::vector<Term> terms);

  static Polynomial constant(std::vector<std::string> variables, Complex c);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Complex evaluate(std::span<const Complex> x) const;
  /// Partial derivative with respect to variable `j`, formed term by term.
  Polynomial derivative(std::size_t j) const;
  /// Gradient at x, one entry per variable.
  CVector gradient(std::span<const Complex> x) const;
  /// Per-variable sum over terms of |c| * |d/dx_j x^a|, an upper bound on |gradient|.
  std::vector<double> gradient_magnitude(std::span<const Complex> x) const;

  /// Maximum exponent sum over terms. Throws Error for the zero polynomial.
  int degree() const;
  /// Exponent vectors of all terms.
  std::vector<Exponents> support() const;

  Polynomial scaled(Complex factor) const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  /// Same polynomial over a larger variable list (new variables appended with exponent 0).
  Polynomial extended(const std::vector<std::string>& variables) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Term> terms_;
};

/// Complex power x^e for non-negative e by repeated squaring.
Complex ipow(Complex x, int e);

/// A list of polynomials over one shared variable list.
class PolySystem {
 public:
  PolySystem() = default;
  /// Throws DimensionError if the list is empty or variable lists disagree.
  explicit PolySystem(std::vector<Polynomial> polys);
  PolySystem(std::vector<std::string> variables, std::vector<Polynomial> polys);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Polynomial>& polys() const noexcept { return polys_; }
  const Polynomial& operator[](std::size_t i) const { return polys_[i]; }

  std::size_t equation_count() const noexcept { return polys_.size(); }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  bool is_square() const noexcept { return equation_count() == variable_count(); }

  CVector evaluate(std::span<const Complex> x) const;
  CMatrix jacobian(std::span<const Complex> x) const;
  /// Entry (i,j) bounds |J(i,j)| by summing term magnitudes.
  std::vector<std::vector<double>> jacobian_magnitude(std::span<const Complex> x) const;
  std::vector<int> degrees() const;

  bool operator==(const PolySystem&) const = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Polynomial> polys_;
};

double max_norm(std::span<const Complex> v);

}  // namespace helios

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "helios/poly.hpp"

namespace helios {

/// Parses one ';'-terminated polynomial.
///
/// Grammar: sums of products of real literals, the imaginary unit `i` (or `I`),
/// identifiers with optional `**k` / `^k` powers, and parenthesized constant
/// groups such as `(1.5 - 2*i)`. Implicit multiplication is rejected.
/// When `variables` is given every identifier must be one of them; otherwise
/// variables are collected in order of first appearance.
Polynomial parse_polynomial(std::string_view text,
                            const std::optional<std::vector<std::string>>& variables = std::nullopt);

/// Canonical text: descending graded-lex terms, `**` powers, `;` terminator.
/// Coefficients print in shortest round-trip form, so parsing the output
/// reproduces `p` exactly.
std::string format_polynomial(const Polynomial& p);

/// Parses a system given as text: header "N" or "N M", then N polynomials.
PolySystem parse_system(std::string_view text);
/// Header line, then one polynomial per line.
std::string format_system(const PolySystem& s);

/// Convenience for bindings: every string holds one ';'-terminated polynomial.
PolySystem parse_polynomials(const std::vector<std::string>& polys);

PolySystem read_system_file(const std::filesystem::path& path);
void write_system_file(const PolySystem& s, const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `v`.
std::string shortest_double(double v);

}  // namespace helios

#include "helios/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helios/error.hpp"

namespace helios {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// A term under construction; exponents are keyed by variable index and grow as
// new variables are discovered.
struct RawTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<int> exponents;
};

class Parser {
 public:
  Parser(std::string_view text, std::optional<std::vector<std::string>> fixed)
      : text_(text), fixed_(fixed.has_value()) {
    if (fixed) variables_ = std::move(*fixed);
  }

  const std::vector<std::string>& variables() const { return variables_; }

  // Reads one polynomial up to and including its ';'.
  std::vector<RawTerm> polynomial() {
    skip_space();
    auto terms = sum(/*inside_group=*/false);
    skip_space();
    if (at_end()) fail("missing ';' at end of polynomial");
    if (peek() != ';') fail(std::string("unexpected character '") + peek() + "'");
    ++pos_;
    return terms;
  }

  bool only_space_left() {
    skip_space();
    return at_end();
  }

  std::size_t read_count() {
    skip_blank_in_line();
    if (at_end() || !is_digit(peek())) fail("expected a count");
    std::size_t v = 0;
    while (!at_end() && is_digit(peek())) v = v * 10 + static_cast<std::size_t>(peek() - '0'), ++pos_;
    return v;
  }

  bool count_follows_on_line() {
    skip_blank_in_line();
    return !at_end() && is_digit(peek());
  }

  void expect_line_end() {
    skip_blank_in_line();
    if (!at_end() && peek() != '\n') fail("unexpected text in header");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_blank_in_line() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  std::vector<RawTerm> sum(bool inside_group) {
    std::vector<RawTerm> terms;
    skip_space();
    double sign = 1.0;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    terms.push_back(product(sign));
    for (;;) {
      skip_space();
      if (at_end()) return terms;
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        terms.push_back(product(c == '-' ? -1.0 : 1.0));
      } else if (c == ';' && !inside_group) {
        return terms;
      } else if (c == ')' && inside_group) {
        return terms;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
  }

  RawTerm product(double sign) {
    RawTerm t;
    t.coefficient = sign;
    t.exponents.assign(variables_.size(), 0);
    factor(t);
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') break;
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') fail("'**' without a base");
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(RawTerm& t) {
    skip_space();
    if (at_end()) fail("unexpected end of input, expected a factor");
    const char c = peek();
    if (is_digit(c) || c == '.') {
      t.coefficient *= number();
      forbid_implicit_product();
    } else if (c == '(') {
      ++pos_;
      auto inner = sum(/*inside_group=*/true);
      skip_space();
      if (at_end() || peek() != ')') fail("missing ')'");
      ++pos_;
      Complex value = 0.0;
      for (const auto& r : inner) {
        for (int e : r.exponents)
          if (e != 0) fail("parentheses may only group constants");
        value += r.coefficient;
      }
      t.coefficient *= value;
      forbid_implicit_product();
    } else if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_ident_char(peek())) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int power = exponent();
      if (name == "i" || name == "I") {
        t.coefficient *= ipow(Complex{0.0, 1.0}, power);
      } else {
        const std::size_t k = variable_index(name, start);
        if (t.exponents.size() < variables_.size()) t.exponents.resize(variables_.size(), 0);
        t.exponents[k] += power;
      }
      forbid_implicit_product();
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  int exponent() {
    skip_space();
    if (at_end()) return 1;
    if (peek() == '^') {
      ++pos_;
    } else if (peek() == '*' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
      pos_ += 2;
    } else {
      return 1;
    }
    skip_space();
    if (at_end() || !is_digit(peek())) fail("exponent must be a positive integer");
    long v = 0;
    while (!at_end() && is_digit(peek())) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E')) fail("exponent must be a positive integer");
    if (v == 0) fail("exponent must be a positive integer");
    return static_cast<int>(v);
  }

  double number() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (!at_end() && peek() == '.') {
      ++pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t save = pos_++;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      if (at_end() || !is_digit(peek())) {
        pos_ = save;
        fail("malformed exponent in number");
      }
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    const std::string lit(text_.substr(start, pos_ - start));
    if (lit == ".") fail("malformed number");
    const double v = std::strtod(lit.c_str(), nullptr);
    if (!std::isfinite(v)) fail("number out of range");
    return v;
  }

  void forbid_implicit_product() {
    if (!at_end() && (is_ident_char(peek()) || peek() == '(' || peek() == '.'))
      fail("implicit multiplication is not allowed, use '*'");
  }

  std::size_t variable_index(const std::string& name, std::size_t start) {
    const auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it != variables_.end()) return static_cast<std::size_t>(it - variables_.begin());
    if (fixed_) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    variables_.push_back(name);
    return variables_.size() - 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool fixed_;
  std::vector<std::string> variables_;
};

Polynomial to_polynomial(const std::vector<RawTerm>& raw, const std::vector<std::string>& variables) {
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (const auto& r : raw) {
    Exponents e = r.exponents;
    e.resize(variables.size(), 0);
    terms.push_back({r.coefficient, std::move(e)});
  }
  return Polynomial(variables, std::move(terms));
}

std::string monomial_text(const Polynomial& p, const Exponents& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += p.variables()[k];
    if (e[k] > 1) out += "**" + std::to_string(e[k]);
  }
  return out;
}

}  // namespace

std::string shortest_double(double v) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

Polynomial parse_polynomial(std::string_view text, const std::optional<std::vector<std::string>>& variables) {
  Parser parser(text, variables);
  auto raw = parser.polynomial();
  if (!parser.only_space_left()) parser.fail("unexpected text after ';'");
  return to_polynomial(raw, parser.variables());
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0;";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const std::string mono = monomial_text(p, t.exponents);
    const double re = t.coefficient.real();
    const double im = t.coefficient.imag();
    bool negative = false;
    std::string body;
    if (im == 0.0) {
      negative = re < 0.0;
      const double mag = std::abs(re);
      if (mag == 1.0 && !mono.empty())
        body = mono;
      else
        body = shortest_double(mag) + (mono.empty() ? "" : "*" + mono);
    } else if (re == 0.0) {
      negative = im < 0.0;
      const double mag = std::abs(im);
      body = (mag == 1.0 ? std::string("i") : shortest_double(mag) + "*i") + (mono.empty() ? "" : "*" + mono);
    } else {
      body = "(" + shortest_double(re) + (im < 0.0 ? " - " : " + ") + shortest_double(std::abs(im)) + "*i)" +
             (mono.empty() ? "" : "*" + mono);
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out + ";";
}

PolySystem parse_system(std::string_view text) {
  Parser parser(text, std::nullopt);
  parser.skip_space();
  const std::size_t n_eq = parser.read_count();
  std::optional<std::size_t> n_var;
  if (parser.count_follows_on_line()) n_var = parser.read_count();
  parser.expect_line_end();
  if (n_eq == 0) parser.fail("a system needs at least one polynomial");

  std::vector<std::vector<RawTerm>> raw;
  for (std::size_t k = 0; k < n_eq; ++k) {
    if (parser.only_space_left())
      parser.fail("expected " + std::to_string(n_eq) + " polynomials, found " + std::to_string(k));
    raw.push_back(parser.polynomial());
  }
  if (!parser.only_space_left())
    parser.fail("expected " + std::to_string(n_eq) + " polynomials, found more input");

  const auto& vars = parser.variables();
  const std::size_t expected_vars = n_var.value_or(n_eq);
  if (vars.size() != expected_vars)
    throw ParseError("expected " + std::to_string(expected_vars) + " variables, found " + std::to_string(vars.size()),
                     1, 1);
  std::vector<Polynomial> polys;
  for (const auto& r : raw) polys.push_back(to_polynomial(r, vars));
  return PolySystem(vars, std::move(polys));
}

std::string format_system(const PolySystem& s) {
  std::string out = std::to_string(s.equation_count());
  if (!s.is_square()) out += " " + std::to_string(s.variable_count());
  out += '\n';
  for (const auto& p : s.polys()) out += format_polynomial(p) + '\n';
  return out;
}

PolySystem parse_polynomials(const std::vector<std::string>& polys) {
  std::string text = std::to_string(polys.size());
  std::vector<std::string> seen;
  // Count variables up front so the header matches whatever the strings use.
  for (const auto& s : polys) {
    Parser probe(s, std::nullopt);
    probe.polynomial();
    for (const auto& v : probe.variables())
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  }
  text += " " + std::to_string(seen.size()) + "\n";
  for (const auto& s : polys) text += s + "\n";
  return parse_system(text);
}

PolySystem read_system_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

void write_system_file(const PolySystem& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_system(s);
}

}  // namespace helios

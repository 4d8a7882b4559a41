#include "helios/solio.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "helios/error.hpp"

namespace helios {

namespace {

std::string printf_string(const char* format, double a, double b) {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, format, a + 0.0, b + 0.0);
  return buffer;
}

std::string complex_fields(Complex z) { return printf_string("% .14E  % .14E", z.real(), z.imag()); }

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

class BlockReader {
 public:
  BlockReader(const std::vector<std::string>& lines, std::size_t first) : lines_(lines), row_(first) {}

  Solution read() {
    Solution sol;
    auto t = fields("t", 2);
    sol.t = {number(t[0], "t"), number(t[1], "t")};
    auto m = fields("m", 1);
    sol.m = integer(m[0]);
    next_line();
    if (trimmed(current_) != "the solution for t :") fail("expected 'the solution for t :'", 1);
    while (true) {
      next_line();
      std::string line = trimmed(current_);
      if (line.rfind("==", 0) == 0) {
        quality(line, sol);
        break;
      }
      auto colon = line.find(':');
      if (colon == std::string::npos) fail("expected '<name> : <re> <im>'", 1);
      std::string name = trimmed(line.substr(0, colon));
      if (name.empty()) fail("missing variable name", 1);
      auto values = tokens(line.substr(colon + 1));
      if (values.size() != 2) fail("expected two numbers for variable " + name, colon + 2);
      sol.variables.push_back(name);
      sol.coordinates.emplace_back(number(values[0], name), number(values[1], name));
    }
    return sol;
  }

  std::size_t row() const noexcept { return row_; }

 private:
  static std::string trimmed(const std::string& s) {
    auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
  }

  static std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
  }

  void next_line() {
    if (row_ >= lines_.size()) throw ParseError("unexpected end of solution block", static_cast<int>(row_) + 1, 1);
    current_ = lines_[row_++];
  }

  [[noreturn]] void fail(const std::string& what, std::size_t column) const {
    throw ParseError(what, static_cast<int>(row_), static_cast<int>(column));
  }

  std::vector<std::string> fields(const std::string& key, std::size_t count) {
    next_line();
    std::string line = trimmed(current_);
    auto colon = line.find(':');
    if (colon == std::string::npos || trimmed(line.substr(0, colon)) != key) fail("expected '" + key + " :'", 1);
    auto values = tokens(line.substr(colon + 1));
    if (values.size() != count) fail("wrong number of fields after '" + key + " :'", colon + 2);
    return values;
  }

  double number(const std::string& tok, const std::string& field) const {
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    fail("malformed number '" + tok + "' in field " + field, 1);
  }

  int integer(const std::string& tok) const {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    fail("malformed multiplicity '" + tok + "'", 1);
  }

  void quality(const std::string& line, Solution& sol) const {
    auto toks = tokens(line);
    // == err : E = rco : R = res : S =
    static const char* names[] = {"err", "rco", "res"};
    if (toks.size() != 13 || toks[0] != "==") fail("malformed quality line", 1);
    double* targets[] = {&sol.err, &sol.rco, &sol.res};
    for (int k = 0; k < 3; ++k) {
      if (toks[1 + 4 * k] != names[k] || toks[2 + 4 * k] != ":" || toks[4 + 4 * k] != "=")
        fail(std::string("malformed quality field ") + names[k], 1);
      *targets[k] = number(toks[3 + 4 * k], names[k]);
    }
  }

  const std::vector<std::string>& lines_;
  std::size_t row_;
  std::string current_;
};

}  // namespace

std::string format_solution(const Solution& sol) {
  std::string out = "t : " + complex_fields(sol.t) + "\n";
  out += "m : " + std::to_string(sol.m) + "\n";
  out += "the solution for t :\n";
  for (std::size_t i = 0; i < sol.coordinates.size(); ++i)
    out += " " + sol.variables.at(i) + " : " + complex_fields(sol.coordinates[i]) + "\n";
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "== err : % .3E = rco : % .3E = res : % .3E =\n", sol.err + 0.0,
                sol.rco + 0.0, sol.res + 0.0);
  return out + buffer;
}

std::vector<Solution> parse_solutions(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<Solution> out;
  std::size_t row = 0;
  while (true) {
    while (row < lines.size() && blank(lines[row])) ++row;
    if (row >= lines.size()) break;
    BlockReader reader(lines, row);
    out.push_back(reader.read());
    row = reader.row();
  }
  return out;
}

Solution parse_solution(std::string_view text) {
  auto sols = parse_solutions(text);
  if (sols.size() != 1)
    throw ParseError("expected exactly one solution block, found " + std::to_string(sols.size()), 1, 1);
  return std::move(sols.front());
}

SolutionRecord to_record(const Solution& sol) {
  SolutionRecord r;
  r["t"] = sol.t;
  r["m"] = sol.m;
  r["err"] = sol.err;
  r["rco"] = sol.rco;
  r["res"] = sol.res;
  for (std::size_t i = 0; i < sol.coordinates.size(); ++i) r[sol.variables.at(i)] = sol.coordinates[i];
  return r;
}

std::string to_json(const SolveReport& report) {
  using nlohmann::json;
  auto pair = [](Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); };
  json sols = json::array();
  for (const auto& s : report.solutions) {
    json coords = json::object();
    for (std::size_t i = 0; i < s.coordinates.size(); ++i) coords[s.variables.at(i)] = pair(s.coordinates[i]);
    sols.push_back({{"t", pair(s.t)}, {"m", s.m}, {"err", s.err}, {"rco", s.rco}, {"res", s.res}, {"coords", coords}});
  }
  json doc = {{"seed", report.seed},
              {"solutions", sols},
              {"paths", report.paths_tracked},
              {"diverged", report.diverged}};
  return doc.dump();
}

}  // namespace helios

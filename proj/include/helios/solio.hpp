#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "helios/solver.hpp"
#include "helios/tracker.hpp"

namespace helios {

/// Flat view of a Solution: "t", "m", "err", "rco", "res" and one key per variable.
using RecordValue = std::variant<int, double, Complex>;
using SolutionRecord = std::map<std::string, RecordValue>;

/// Text block:
///   t :  1.00000000000000E+00  0.00000000000000E+00
///   m : 1
///   the solution for t :
///    x : -1.00000000000000E+00  0.00000000000000E+00
///   == err :  2.143E-16 = rco :  4.775E-02 = res :  2.220E-16 =
std::string format_solution(const Solution& sol);

/// Inverse of format_solution. Throws ParseError naming the offending line
/// and field. Leading and trailing blank lines are ignored.
Solution parse_solution(std::string_view text);

/// Blocks separated by blank lines (or simply concatenated).
std::vector<Solution> parse_solutions(std::string_view text);

SolutionRecord to_record(const Solution& sol);

/// {"diverged","paths","seed","solutions":[{"coords":{name:[re,im]},"err","m","rco","res","t":[re,im]}]}
/// with sorted keys and shortest round-trip numbers.
std::string to_json(const SolveReport& report);

}  // namespace helios

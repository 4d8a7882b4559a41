#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "helios/error.hpp"
#include "helios/solio.hpp"
#include "helios/tracker.hpp"

namespace helios::gateway {

/// The single entry point for scripting bindings: one JSON request in, one
/// JSON response out. Requests carry a "job" name:
///
///   set_seed        {"seed"}                                    -> 0
///   solve           {"polynomials", "silent"}                   -> [solution blocks]
///   mixed_volume    {"polynomials"}                             -> integer
///   tracker_create  {"target", "start", "solution", "gamma"?}   -> handle
///   tracker_next    {"handle"}                                  -> point record or null
///   tracker_tune    {"handle", settings fields}                 -> 0
///   tracker_result  {"handle"}                                  -> {"status", "solution"?}
///   tracker_close   {"handle"}                                  -> 0
///
/// Responses are {"ok": true, "result": ...} or {"ok": false, "kind", "error"}
/// where kind is "parse" (with "line" and "column"), "dimension", "value" or
/// "request". No exception crosses this boundary.
std::string call(std::string_view request);

/// Raised by the typed wrappers below when the gateway reports a failure.
class GatewayError : public Error {
 public:
  GatewayError(std::string kind, const std::string& what) : Error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Typed wrappers; each builds one request and goes through call().

int set_seed(std::uint64_t seed);
std::vector<std::string> solve(const std::vector<std::string>& polynomials, bool silent = true);
std::uint64_t mixed_volume(const std::vector<std::string>& polynomials);

/// Step-wise tracker session. Records from next() hold "t", "step",
/// "iterations", "residual" and one complex entry per variable.
class PathTracker {
 public:
  PathTracker(const std::vector<std::string>& target, const std::vector<std::string>& start,
              const std::string& start_solution, std::optional<Complex> gamma = std::nullopt);
  ~PathTracker();
  PathTracker(const PathTracker&) = delete;
  PathTracker& operator=(const PathTracker&) = delete;

  std::optional<SolutionRecord> next();
  void tune(const TrackSettings& settings);
  /// "running", "converged", "diverged" or "stalled", plus the refined
  /// endpoint block once converged.
  std::pair<std::string, std::optional<std::string>> result();

 private:
  std::int64_t handle_;
};

}  // namespace helios::gateway

#include "helios/gateway.hpp"

#include <map>
#include <memory>
#include <mutex>

#include <json.hpp>

#include "helios/counts.hpp"
#include "helios/homotopy.hpp"
#include "helios/parse.hpp"
#include "helios/solver.hpp"

namespace helios::gateway {

namespace {

using nlohmann::json;

struct Session {
  std::unique_ptr<helios::PathTracker> tracker;
  PolySystem target;
};

struct Sessions {
  std::mutex mutex;
  std::map<std::int64_t, Session> open;
  std::int64_t next_handle = 1;
};

Sessions& sessions() {
  static Sessions s;
  return s;
}

class RequestError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> strings(const json& request, const char* key) {
  if (!request.contains(key) || !request[key].is_array()) throw RequestError(std::string("missing string list '") + key + "'");
  return request[key].get<std::vector<std::string>>();
}

Session& session(Sessions& all, const json& request) {
  const auto it = all.open.find(request.at("handle").get<std::int64_t>());
  if (it == all.open.end()) throw RequestError("unknown tracker handle");
  return it->second;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json job_solve(const json& request) {
  const PolySystem f = parse_polynomials(strings(request, "polynomials"));
  SolveOptions options;
  options.silent = request.value("silent", true);
  json blocks = json::array();
  for (const auto& sol : helios::solve(f, options).solutions) blocks.push_back(format_solution(sol));
  return blocks;
}

json job_tracker_create(const json& request) {
  const PolySystem target = parse_polynomials(strings(request, "target"));
  const PolySystem start = parse_polynomials(strings(request, "start"));
  const Solution sol = parse_solution(request.at("solution").get<std::string>());
  Complex gamma;
  if (request.contains("gamma")) {
    const auto g = request["gamma"].get<std::vector<double>>();
    if (g.size() != 2) throw RequestError("gamma must be [re, im]");
    gamma = {g[0], g[1]};
  } else {
    Rng rng(resolve_seed());
    gamma = rng.unit_circle();
  }
  auto homotopy = std::make_shared<const Homotopy>(target, start, gamma);
  auto tracker = std::make_unique<helios::PathTracker>(homotopy, sol.coordinates);
  auto& all = sessions();
  std::lock_guard lock(all.mutex);
  const std::int64_t handle = all.next_handle++;
  all.open.emplace(handle, Session{std::move(tracker), target});
  return handle;
}

json job_tracker_next(const json& request) {
  auto& all = sessions();
  std::lock_guard lock(all.mutex);
  Session& s = session(all, request);
  const auto point = s.tracker->next();
  if (!point) return nullptr;
  json record = {{"t", point->t},
                 {"step", point->step_used},
                 {"iterations", point->corrector_iterations},
                 {"residual", point->corrector_residual}};
  const auto& vars = s.target.variables();
  for (std::size_t i = 0; i < vars.size(); ++i) record[vars[i]] = complex_json(point->x[i]);
  return record;
}

json job_tracker_tune(const json& request) {
  auto& all = sessions();
  std::lock_guard lock(all.mutex);
  Session& s = session(all, request);
  TrackSettings t = s.tracker->settings();
  t.max_step = request.value("max_step", t.max_step);
  t.min_step = request.value("min_step", t.min_step);
  t.corrector_tolerance = request.value("corrector_tolerance", t.corrector_tolerance);
  t.max_corrector_iterations = request.value("max_corrector_iterations", t.max_corrector_iterations);
  t.step_expansion = request.value("step_expansion", t.step_expansion);
  t.step_reduction = request.value("step_reduction", t.step_reduction);
  t.divergence_threshold = request.value("divergence_threshold", t.divergence_threshold);
  t.endpoint_tolerance = request.value("endpoint_tolerance", t.endpoint_tolerance);
  s.tracker->tune(t);
  return 0;
}

json job_tracker_result(const json& request) {
  auto& all = sessions();
  std::lock_guard lock(all.mutex);
  Session& s = session(all, request);
  json out = {{"status", to_string(s.tracker->status())}};
  if (s.tracker->status() == PathStatus::converged)
    out["solution"] = format_solution(refine_endpoint(s.target, s.tracker->x(), s.tracker->settings()));
  return out;
}

json job_tracker_close(const json& request) {
  auto& all = sessions();
  std::lock_guard lock(all.mutex);
  all.open.erase(request.at("handle").get<std::int64_t>());
  return 0;
}

json dispatch(const json& request) {
  const std::string job = request.at("job").get<std::string>();
  if (job == "set_seed") {
    helios::set_seed(request.at("seed").get<std::uint64_t>());
    return 0;
  }
  if (job == "solve") return job_solve(request);
  if (job == "mixed_volume") return helios::mixed_volume(parse_polynomials(strings(request, "polynomials")));
  if (job == "tracker_create") return job_tracker_create(request);
  if (job == "tracker_next") return job_tracker_next(request);
  if (job == "tracker_tune") return job_tracker_tune(request);
  if (job == "tracker_result") return job_tracker_result(request);
  if (job == "tracker_close") return job_tracker_close(request);
  throw RequestError("unknown job '" + job + "'");
}

json failure(const std::string& kind, const std::string& what) {
  return {{"ok", false}, {"kind", kind}, {"error", what}};
}

json checked_call(const json& request) {
  const json response = json::parse(call(request.dump()));
  if (!response.at("ok").get<bool>())
    throw GatewayError(response.at("kind").get<std::string>(), response.at("error").get<std::string>());
  return response.at("result");
}

}  // namespace

std::string call(std::string_view request) {
  json response;
  try {
    response = {{"ok", true}, {"result", dispatch(json::parse(request))}};
  } catch (const ParseError& e) {
    response = failure("parse", e.what());
    response["line"] = e.line();
    response["column"] = e.column();
  } catch (const DimensionError& e) {
    response = failure("dimension", e.what());
  } catch (const RequestError& e) {
    response = failure("request", e.what());
  } catch (const json::exception& e) {
    response = failure("request", e.what());
  } catch (const std::exception& e) {
    response = failure("value", e.what());
  }
  return response.dump();
}

int set_seed(std::uint64_t seed) { return checked_call({{"job", "set_seed"}, {"seed", seed}}).get<int>(); }

std::vector<std::string> solve(const std::vector<std::string>& polynomials, bool silent) {
  return checked_call({{"job", "solve"}, {"polynomials", polynomials}, {"silent", silent}}).get<std::vector<std::string>>();
}

std::uint64_t mixed_volume(const std::vector<std::string>& polynomials) {
  return checked_call({{"job", "mixed_volume"}, {"polynomials", polynomials}}).get<std::uint64_t>();
}

PathTracker::PathTracker(const std::vector<std::string>& target, const std::vector<std::string>& start,
                         const std::string& start_solution, std::optional<Complex> gamma) {
  json request = {{"job", "tracker_create"}, {"target", target}, {"start", start}, {"solution", start_solution}};
  if (gamma) request["gamma"] = complex_json(*gamma);
  handle_ = checked_call(request).get<std::int64_t>();
}

PathTracker::~PathTracker() { call(json({{"job", "tracker_close"}, {"handle", handle_}}).dump()); }

std::optional<SolutionRecord> PathTracker::next() {
  const json point = checked_call({{"job", "tracker_next"}, {"handle", handle_}});
  if (point.is_null()) return std::nullopt;
  SolutionRecord record;
  for (const auto& [key, value] : point.items()) {
    if (key == "iterations") record[key] = value.get<int>();
    else if (value.is_array()) record[key] = Complex(value[0].get<double>(), value[1].get<double>());
    else record[key] = value.get<double>();
  }
  return record;
}

void PathTracker::tune(const TrackSettings& s) {
  checked_call({{"job", "tracker_tune"},
                {"handle", handle_},
                {"max_step", s.max_step},
                {"min_step", s.min_step},
                {"corrector_tolerance", s.corrector_tolerance},
                {"max_corrector_iterations", s.max_corrector_iterations},
                {"step_expansion", s.step_expansion},
                {"step_reduction", s.step_reduction},
                {"divergence_threshold", s.divergence_threshold},
                {"endpoint_tolerance", s.endpoint_tolerance}});
}

std::pair<std::string, std::optional<std::string>> PathTracker::result() {
  const json r = checked_call({{"job", "tracker_result"}, {"handle", handle_}});
  std::optional<std::string> block;
  if (r.contains("solution")) block = r["solution"].get<std::string>();
  return {r.at("status").get<std::string>(), block};
}

}  // namespace helios::gateway

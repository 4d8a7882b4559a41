#include "helios/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "helios/error.hpp"
#include "helios/linalg.hpp"

namespace helios {

namespace {

bool finite(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

CVector negated(CVector v) {
  for (auto& z : v) z = -z;
  return v;
}

}  // namespace

std::string to_string(PathStatus s) {
  switch (s) {
    case PathStatus::running: return "running";
    case PathStatus::converged: return "converged";
    case PathStatus::diverged: return "diverged";
    case PathStatus::stalled: return "stalled";
  }
  return "unknown";
}

void TrackSettings::validate() const {
  if (!(min_step > 0.0)) throw Error("min_step must be positive");
  if (!(min_step <= max_step)) throw Error("min_step must not exceed max_step");
  if (!(max_step <= 1.0)) throw Error("max_step must not exceed 1");
  if (!(corrector_tolerance > 0.0)) throw Error("corrector_tolerance must be positive");
  if (!(endpoint_tolerance > 0.0)) throw Error("endpoint_tolerance must be positive");
  if (max_corrector_iterations < 1) throw Error("max_corrector_iterations must be at least 1");
  if (!(step_expansion >= 1.0)) throw Error("step_expansion must be at least 1");
  if (!(step_reduction > 0.0 && step_reduction < 1.0)) throw Error("step_reduction must lie in (0, 1)");
  if (!(divergence_threshold > 1.0)) throw Error("divergence_threshold must exceed 1");
}

PathTracker::PathTracker(std::shared_ptr<const Homotopy> homotopy, CVector start, TrackSettings settings)
    : homotopy_(std::move(homotopy)), settings_(settings), x_(std::move(start)) {
  if (!homotopy_) throw Error("tracker needs a homotopy");
  settings_.validate();
  if (x_.size() != homotopy_->dimension()) throw DimensionError("start point has the wrong length");
  const double r = max_norm(homotopy_->value(x_, 0.0));
  if (!(r <= kStartResidual))
    throw Error("start point is not on the path: residual " + std::to_string(r) + " at t = 0");
  step_ = settings_.max_step;
  norms_.emplace_back(1.0, max_norm(x_));
}

void PathTracker::tune(const TrackSettings& settings) {
  settings.validate();
  settings_ = settings;
  step_ = std::clamp(step_, settings_.min_step, settings_.max_step);
}

PathTracker::Correction PathTracker::correct(CVector x, double t) const {
  Correction c;
  double previous = std::numeric_limits<double>::infinity();
  double update = previous;
  for (int k = 1; k <= settings_.max_corrector_iterations; ++k) {
    const HomotopyValue h = homotopy_->evaluate(x, t);
    const auto dx = solve_linear(h.jx, negated(h.value));
    if (!dx) return c;
    previous = update;
    update = max_norm(*dx);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += (*dx)[i];
    c.iterations = k;
    if (!finite(x)) return c;
    if (update <= settings_.corrector_tolerance * std::max(1.0, max_norm(x))) {
      c.converged = true;
      break;
    }
  }
  c.residual = max_norm(homotopy_->value(x, t));
  // Near singular points Newton only contracts linearly; accept a small
  // residual if the updates are still shrinking.
  if (!c.converged && c.residual <= settings_.corrector_tolerance && update < 0.75 * previous) c.converged = true;
  c.x = std::move(x);
  return c;
}

void PathTracker::shrink_or_stall() {
  streak_ = 0;
  step_ *= settings_.step_reduction;
  if (step_ >= settings_.min_step) return;
  status_ = growing_without_bound() ? PathStatus::diverged : PathStatus::stalled;
}

// Paths to infinity with slow growth, |x| ~ (1 - t)^-p, stall long before
// reaching the divergence threshold. Estimate p from the accepted point
// where 1 - t was at least 100 times larger than now.
bool PathTracker::growing_without_bound() const {
  const double norm = max_norm(x_);
  if (norm > std::sqrt(settings_.divergence_threshold)) return true;
  const double remaining = 1.0 - t_;
  if (!(remaining > 0.0)) return false;
  for (auto it = norms_.rbegin(); it != norms_.rend(); ++it) {
    if (it->first < 100.0 * remaining) continue;
    if (!(it->second > 0.0)) return false;
    const double growth = std::log(norm / it->second) / std::log(it->first / remaining);
    return growth >= kDivergentGrowth;
  }
  return false;
}

std::optional<PathPoint> PathTracker::next() {
  while (status_ == PathStatus::running) {
    const double remaining = 1.0 - t_;
    const bool landing = step_ >= remaining;
    const double dt = landing ? remaining : step_;
    const double t_new = landing ? 1.0 : t_ + dt;

    const HomotopyValue h = homotopy_->evaluate(x_, t_);
    const auto tangent = solve_linear(h.jx, negated(h.dt));
    if (!tangent) {
      shrink_or_stall();
      continue;
    }
    CVector predicted = x_;
    for (std::size_t i = 0; i < predicted.size(); ++i) predicted[i] += dt * (*tangent)[i];

    Correction c = correct(std::move(predicted), t_new);
    if (!c.converged) {
      shrink_or_stall();
      continue;
    }
    t_ = t_new;
    x_ = std::move(c.x);
    norms_.emplace_back(1.0 - t_, max_norm(x_));
    if (++streak_ >= TrackSettings::kExpansionStreak) {
      streak_ = 0;
      step_ = std::min(step_ * settings_.step_expansion, settings_.max_step);
    }
    if (max_norm(x_) > settings_.divergence_threshold) {
      status_ = PathStatus::diverged;
      return std::nullopt;
    }
    if (t_ >= 1.0) status_ = PathStatus::converged;
    return PathPoint{t_, x_, dt, c.iterations, c.residual};
  }
  return std::nullopt;
}

double inverse_condition(const PolySystem& f, std::span<const Complex> x) {
  const CMatrix jac = f.jacobian(x);
  LuDecomposition lu(jac);
  if (!lu.nonsingular()) return 0.0;
  const double norm = norm1(jac);
  const double inv_norm = norm1(lu.inverse());
  if (!(norm > 0.0) || !std::isfinite(inv_norm)) return 0.0;
  double rco = 1.0 / (norm * inv_norm);

  const auto magnitude = f.jacobian_magnitude(x);
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    double row = 0.0, bound = 0.0;
    for (std::size_t j = 0; j < jac.cols(); ++j) {
      row += std::abs(jac(i, j));
      bound += magnitude[i][j];
    }
    if (bound > 0.0) rco = std::min(rco, row / bound);
  }
  return std::clamp(rco, 0.0, 1.0);
}

Solution refine_endpoint(const PolySystem& f, CVector x, const TrackSettings& settings) {
  if (!f.is_square()) throw DimensionError("endpoint refinement needs a square system");
  Solution sol;
  sol.variables = f.variables();
  double err = 0.0;
  for (int k = 0; k < kRefineIterations; ++k) {
    const auto dx = solve_linear(f.jacobian(x), negated(f.evaluate(x)));
    if (!dx) {
      // No Newton step possible at a singular Jacobian.
      err = std::max(err, 1.0);
      break;
    }
    CVector trial = x;
    for (std::size_t i = 0; i < x.size(); ++i) trial[i] += (*dx)[i];
    if (!finite(trial)) {
      err = std::max(err, 1.0);
      break;
    }
    x = std::move(trial);
    err = max_norm(*dx);
    if (err <= settings.endpoint_tolerance) break;
  }
  sol.coordinates = std::move(x);
  sol.err = err;
  sol.res = max_norm(f.evaluate(sol.coordinates));
  sol.rco = inverse_condition(f, sol.coordinates);
  return sol;
}

PathOutcome track_path(std::shared_ptr<const Homotopy> homotopy, CVector start, const TrackSettings& settings) {
  PathTracker tracker(homotopy, std::move(start), settings);
  PathOutcome out;
  while (tracker.next()) ++out.steps;
  out.status = tracker.status();
  out.final_t = tracker.t();
  out.final_x = tracker.x();
  if (out.status == PathStatus::converged) {
    Solution sol = refine_endpoint(homotopy->target(), tracker.x(), settings);
    if (max_norm(sol.coordinates) > settings.divergence_threshold) {
      out.status = PathStatus::diverged;
    } else {
      out.endpoint = std::move(sol);
    }
  }
  return out;
}

}  // namespace helios

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "helios/homotopy.hpp"
#include "helios/poly.hpp"

namespace helios {

/// Step control and tolerances of the predictor-corrector tracker.
struct TrackSettings {
  double max_step = 0.1;
  double min_step = 1e-8;
  double corrector_tolerance = 1e-8;  // on the max-norm of the Newton update, relative to max(1, |x|)
  int max_corrector_iterations = 4;
  double step_expansion = 2.0;  // applied after kExpansionStreak consecutive accepted steps
  double step_reduction = 0.5;
  double divergence_threshold = 1e8;  // on the max-norm of x
  double endpoint_tolerance = 1e-12;

  static constexpr int kExpansionStreak = 3;

  /// Throws Error describing the first violated constraint.
  void validate() const;
};

/// One accepted point on a solution path.
struct PathPoint {
  double t = 0.0;
  CVector x;
  double step_used = 0.0;
  int corrector_iterations = 0;
  double corrector_residual = 0.0;  // max-norm of h(x, t) at the accepted point
};

/// End-of-path record with its quality triplet.
struct Solution {
  Complex t{1.0, 0.0};
  int m = 1;
  std::vector<std::string> variables;
  CVector coordinates;
  double err = 0.0;  // max-norm of the last Newton update
  double rco = 1.0;  // inverse condition number estimate of the Jacobian
  double res = 0.0;  // max-norm of the residual

  bool operator==(const Solution&) const = default;
};

enum class PathStatus { running, converged, diverged, stalled };

std::string to_string(PathStatus s);

struct PathOutcome {
  PathStatus status = PathStatus::stalled;
  std::optional<Solution> endpoint;  // set when converged
  double final_t = 0.0;
  CVector final_x;
  int steps = 0;
};

/// Step-wise tracker of one solution path of a homotopy.
///
/// Tangent predictor, Newton corrector at fixed t, step halving on corrector
/// failure and expansion after a streak of successes. The last step is
/// clamped to land exactly on t = 1. No randomness: equal inputs give equal
/// step sequences.
class PathTracker {
 public:
  /// Throws Error if `start` does not satisfy h(., 0) to 1e-8 or settings are invalid.
  PathTracker(std::shared_ptr<const Homotopy> homotopy, CVector start, TrackSettings settings = {});

  /// Performs one accepted predictor-corrector step. Returns nullopt once the
  /// path has terminated; status() then tells how.
  std::optional<PathPoint> next();

  /// Replaces the settings for subsequent steps. Invalid settings throw and
  /// leave the old ones in place.
  void tune(const TrackSettings& settings);

  const TrackSettings& settings() const noexcept { return settings_; }
  PathStatus status() const noexcept { return status_; }
  bool finished() const noexcept { return status_ != PathStatus::running; }
  double t() const noexcept { return t_; }
  const CVector& x() const noexcept { return x_; }
  double current_step() const noexcept { return step_; }
  const Homotopy& homotopy() const noexcept { return *homotopy_; }

  /// Residual bound a start point must satisfy.
  static constexpr double kStartResidual = 1e-8;
  /// A stalled path whose |x| grows at least like (1 - t)^-kDivergentGrowth
  /// over the last two decades of 1 - t is reported as diverged.
  static constexpr double kDivergentGrowth = 0.1;

 private:
  struct Correction {
    bool converged = false;
    CVector x;
    int iterations = 0;
    double residual = 0.0;
  };

  Correction correct(CVector x, double t) const;
  void shrink_or_stall();
  bool growing_without_bound() const;

  std::shared_ptr<const Homotopy> homotopy_;
  TrackSettings settings_;
  double t_ = 0.0;
  CVector x_;
  double step_;
  int streak_ = 0;
  PathStatus status_ = PathStatus::running;
  std::vector<std::pair<double, double>> norms_;  // (1 - t, |x|) at every accepted point
};

/// Newton refinement at t = 1 producing the quality triplet.
///
/// Up to kRefineIterations steps stopping once the update is below
/// endpoint_tolerance. rco is the smaller of 1/(|J|_1 |J^-1|_1) and the
/// least row ratio |J_i|_1 / sum of term magnitudes; the latter exposes
/// singular roots of univariate equations, whose 1x1 condition number is
/// always one. rco is 0 when LU meets a pivot below kSingularPivot.
Solution refine_endpoint(const PolySystem& f, CVector x, const TrackSettings& settings = {});

inline constexpr int kRefineIterations = 5;

/// Tracks a path to termination and refines the endpoint when t = 1 is reached.
PathOutcome track_path(std::shared_ptr<const Homotopy> homotopy, CVector start, const TrackSettings& settings = {});

/// Inverse condition estimate used by refine_endpoint.
double inverse_condition(const PolySystem& f, std::span<const Complex> x);

}  // namespace helios

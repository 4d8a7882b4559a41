#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "helios/poly.hpp"
#include "helios/rng.hpp"
#include "helios/tracker.hpp"

namespace helios {

/// Fixes the seed used by every subsequent solve() that does not pass its own.
void set_seed(std::uint64_t seed);
/// The fixed seed, or the seed of the most recent solve when none was fixed.
std::uint64_t get_seed();
/// Forgets a fixed seed; later solves draw fresh seeds.
void clear_seed();
/// `requested` if given, else the fixed seed, else a fresh one; recorded for get_seed().
std::uint64_t resolve_seed(std::optional<std::uint64_t> requested = std::nullopt);

struct SolveOptions {
  std::optional<std::uint64_t> seed;  // overrides the global seed
  bool silent = true;                 // false reports progress on `progress`
  unsigned tasks = 1;                 // worker threads for path tracking
  TrackSettings settings;
  double cluster_radius = 1e-6;
  std::ostream* progress = nullptr;  // defaults to std::cerr
};

struct SolveReport {
  std::vector<Solution> solutions;
  std::size_t paths_tracked = 0;
  std::size_t diverged = 0;
  std::size_t stalled = 0;
  std::uint64_t seed = 0;
  std::uint64_t root_count_used = 0;
  std::uint64_t mixed_volume = 0;  // predictor only; 0 when not computed
};

/// Endpoints merged by a clustering pass.
struct Cluster {
  CVector representative;  // component-wise mean
  int multiplicity = 0;
  std::vector<std::size_t> members;  // indices into the input
};

/// Single-linkage clustering under the max-norm: endpoints within `radius`
/// of each other (transitively) merge.
std::vector<Cluster> cluster_multiplicities(const std::vector<CVector>& endpoints, double radius = 1e-6);

/// Sorts points by their coordinates rounded to 1e-8, lexicographically on (re, im).
void canonical_sort(std::vector<CVector>& points);

/// Tracks many paths of one homotopy, concurrently up to `tasks` workers.
/// Stalled paths are retried once with min_step / 10 and a corrector cap of 6.
std::vector<PathOutcome> track_all(std::shared_ptr<const Homotopy> homotopy, const std::vector<CVector>& starts,
                                   const TrackSettings& settings, unsigned tasks);

/// Extra refine_endpoint rounds the solver spends on slowly converging endpoints.
inline constexpr int kPolishRounds = 6;

/// Several paths meeting at an endpoint with inverse condition above this
/// have jumped: a nonsingular root is the end of exactly one path.
inline constexpr double kJumpRco = 1e-6;
inline constexpr int kRepairRounds = 2;

/// track_all, endpoint polishing, then up to kRepairRounds re-tracks of the
/// paths that share a nonsingular endpoint, each round with max_step ten
/// times smaller.
std::vector<PathOutcome> track_all_checked(std::shared_ptr<const Homotopy> homotopy, const std::vector<CVector>& starts,
                                           const SolveOptions& options);

/// Blackbox solver: total-degree start system, gamma homotopy, all paths,
/// endpoint refinement and clustering. Throws for non-square input or a
/// zero equation.
SolveReport solve(const PolySystem& s, const SolveOptions& options = {});
/// Same, drawing all randomness from `rng`; report.seed is rng.seed().
SolveReport solve(const PolySystem& s, Rng& rng, const SolveOptions& options = {});

}  // namespace helios

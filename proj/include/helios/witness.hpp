#pragma once

#include <map>
#include <string>
#include <vector>

#include "helios/poly.hpp"
#include "helios/rng.hpp"
#include "helios/solver.hpp"
#include "helios/tracker.hpp"

namespace helios {

/// Slack coordinates at or below this max-norm mark genuine witness points.
inline constexpr double kSlackZero = 1e-8;
/// Slack norms in (kSlackZero, kSlackAmbiguous) are reported as ambiguous.
inline constexpr double kSlackAmbiguous = 1e-6;
/// Residual a witness point must have on the original system and its slices.
inline constexpr double kWitnessResidual = 1e-8;

/// A d-dimensional solution set cut by d random affine slices.
struct WitnessSet {
  PolySystem system;
  std::size_t dimension = 0;
  std::vector<Polynomial> slices;
  std::vector<Solution> points;

  std::size_t degree() const noexcept { return points.size(); }
};

/// System with d slack variables z:
///   f_k(x) + sum_j a_kj z_j = 0   for k = 1..n (f squared up or padded to n equations)
///   s_j(x) + z_j = 0              for j = 1..d
struct Embedding {
  PolySystem original;
  std::size_t level = 0;
  PolySystem augmented;               // variables: x then slacks
  std::vector<Polynomial> slices;     // over the original variables
  std::vector<std::string> slack_names;
};

/// Throws Error unless 1 <= d <= n.
Embedding embed(const PolySystem& s, std::size_t d, Rng& rng);

/// Same embedding one level down: last slice dropped and z_d set to zero.
Embedding lower(const Embedding& e);

/// Level-d system with its last slice equation replaced by z_d = 0; the
/// target of the cascade homotopy from level d to d - 1.
PolySystem drop_last_slice(const Embedding& e);

/// Solves the square system {square_up(s, n - d), d random slices} and keeps
/// the solutions lying on s and on every slice.
WitnessSet witness_set(const PolySystem& s, std::size_t d, Rng& rng, const SolveOptions& options = {});

struct CascadeLevel {
  std::size_t dimension = 0;
  std::vector<Solution> candidates;  // over the original variables
  std::vector<Solution> ambiguous;   // slack norm in the dead zone
  std::size_t paths_tracked = 0;
};

/// Candidate witness points for every dimension from `top` down to 0.
/// Candidates form a superset: points on higher-dimensional sets may appear
/// again at lower levels (no membership filtering).
struct CascadeResult {
  std::vector<CascadeLevel> levels;  // levels[k] is dimension top - k

  const CascadeLevel& at_dimension(std::size_t d) const;
};

/// Throws Error unless top <= n - 1. A level without start points ends the
/// cascade; lower dimensions are then reported empty.
CascadeResult cascade(const PolySystem& s, std::size_t top, Rng& rng, const SolveOptions& options = {});

/// System with the slices appended, a blank line, then one solution block per point.
std::string format_witness_set(const WitnessSet& w);

}  // namespace helios

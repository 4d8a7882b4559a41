#include "helios/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "helios/counts.hpp"
#include "helios/error.hpp"
#include "helios/homotopy.hpp"
#include "helios/startsys.hpp"

namespace helios {

namespace {

struct SeedState {
  std::mutex mutex;
  std::optional<std::uint64_t> fixed;
  std::uint64_t last = 0;
};

SeedState& seed_state() {
  static SeedState state;
  return state;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::vector<double> sort_key(const CVector& x) {
  std::vector<double> key;
  key.reserve(2 * x.size());
  for (const auto& z : x) {
    key.push_back(std::round(z.real() * 1e8) / 1e8);
    key.push_back(std::round(z.imag() * 1e8) / 1e8);
  }
  return key;
}

// Singular endpoints converge only linearly; keep refining while the Newton
// update still shrinks so that the paths ending there land close enough to
// be clustered.
Solution polish(const PolySystem& f, Solution sol, const TrackSettings& settings) {
  for (int round = 0; round < kPolishRounds && sol.err > settings.endpoint_tolerance; ++round) {
    Solution next = refine_endpoint(f, sol.coordinates, settings);
    if (!(next.err < sol.err)) break;
    sol = std::move(next);
  }
  return sol;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t k) {
  while (parent[k] != k) k = parent[k] = parent[parent[k]];
  return k;
}

}  // namespace

void set_seed(std::uint64_t seed) {
  auto& s = seed_state();
  std::lock_guard lock(s.mutex);
  s.fixed = seed;
  s.last = seed;
}

std::uint64_t get_seed() {
  auto& s = seed_state();
  std::lock_guard lock(s.mutex);
  return s.fixed.value_or(s.last);
}

void clear_seed() {
  auto& s = seed_state();
  std::lock_guard lock(s.mutex);
  s.fixed.reset();
}

void canonical_sort(std::vector<CVector>& points) {
  std::stable_sort(points.begin(), points.end(),
                   [](const CVector& a, const CVector& b) { return sort_key(a) < sort_key(b); });
}

std::vector<Cluster> cluster_multiplicities(const std::vector<CVector>& endpoints, double radius) {
  if (!(radius > 0.0)) throw Error("cluster radius must be positive");
  const std::size_t n = endpoints.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (endpoints[a].size() != endpoints[b].size()) throw DimensionError("endpoints differ in length");
      double d = 0.0;
      for (std::size_t k = 0; k < endpoints[a].size(); ++k) d = std::max(d, std::abs(endpoints[a][k] - endpoints[b][k]));
      if (d <= radius) parent[find_root(parent, a)] = find_root(parent, b);
    }

  std::vector<Cluster> clusters;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = find_root(parent, k);
    if (slot[r] == n) {
      slot[r] = clusters.size();
      clusters.push_back({});
    }
    clusters[slot[r]].members.push_back(k);
  }
  for (auto& c : clusters) {
    c.multiplicity = static_cast<int>(c.members.size());
    c.representative.assign(endpoints[c.members.front()].size(), Complex{});
    for (auto m : c.members)
      for (std::size_t k = 0; k < c.representative.size(); ++k) c.representative[k] += endpoints[m][k];
    for (auto& z : c.representative) z /= static_cast<double>(c.members.size());
  }
  return clusters;
}

std::vector<PathOutcome> track_all(std::shared_ptr<const Homotopy> homotopy, const std::vector<CVector>& starts,
                                   const TrackSettings& settings, unsigned tasks) {
  TrackSettings retry = settings;
  retry.min_step = settings.min_step / 10.0;
  retry.max_corrector_iterations = std::max(settings.max_corrector_iterations, 6);

  std::vector<PathOutcome> outcomes(starts.size());
  auto run = [&](std::size_t k) {
    PathOutcome out = track_path(homotopy, starts[k], settings);
    if (out.status == PathStatus::stalled) out = track_path(homotopy, starts[k], retry);
    outcomes[k] = std::move(out);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(tasks, static_cast<unsigned>(starts.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < starts.size(); ++k) run(k);
    return outcomes;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = cursor++; k < starts.size(); k = cursor++) run(k);
    });
  return outcomes;  // pool joins on destruction before outcomes is returned
}

std::vector<PathOutcome> track_all_checked(std::shared_ptr<const Homotopy> homotopy, const std::vector<CVector>& starts,
                                           const SolveOptions& options) {
  const PolySystem& f = homotopy->target();
  auto outcomes = track_all(homotopy, starts, options.settings, options.tasks);
  auto finish = [&](std::vector<PathOutcome>& outs, const std::vector<std::size_t>& which) {
    for (auto k : which)
      if (outs[k].status == PathStatus::converged) outs[k].endpoint = polish(f, *outs[k].endpoint, options.settings);
  };
  std::vector<std::size_t> all(starts.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  finish(outcomes, all);

  TrackSettings careful = options.settings;
  for (int round = 0; round < kRepairRounds; ++round) {
    std::vector<CVector> endpoints;
    std::vector<std::size_t> owner;
    for (std::size_t k = 0; k < outcomes.size(); ++k)
      if (outcomes[k].status == PathStatus::converged) {
        endpoints.push_back(outcomes[k].endpoint->coordinates);
        owner.push_back(k);
      }
    std::vector<std::size_t> suspects;
    for (const auto& c : cluster_multiplicities(endpoints, options.cluster_radius)) {
      if (c.multiplicity < 2 || inverse_condition(f, c.representative) <= kJumpRco) continue;
      for (auto m : c.members) suspects.push_back(owner[m]);
    }
    if (suspects.empty()) break;
    std::sort(suspects.begin(), suspects.end());
    careful.max_step /= 10.0;
    careful.min_step = std::min(careful.min_step, careful.max_step) / 10.0;
    std::vector<CVector> again;
    for (auto k : suspects) again.push_back(starts[k]);
    auto redone = track_all(homotopy, again, careful, options.tasks);
    for (std::size_t j = 0; j < suspects.size(); ++j) outcomes[suspects[j]] = std::move(redone[j]);
    finish(outcomes, suspects);
  }
  return outcomes;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> requested) {
  auto& state = seed_state();
  std::lock_guard lock(state.mutex);
  const std::uint64_t seed = requested ? *requested : state.fixed ? *state.fixed : fresh_seed();
  state.last = seed;
  return seed;
}

SolveReport solve(const PolySystem& s, const SolveOptions& options) {
  Rng rng(resolve_seed(options.seed));
  return solve(s, rng, options);
}

SolveReport solve(const PolySystem& s, Rng& rng, const SolveOptions& options) {
  if (!s.is_square())
    throw DimensionError("solve needs a square system (" + std::to_string(s.equation_count()) + " equations in " +
                         std::to_string(s.variable_count()) + " variables); use witness sets for other shapes");
  for (const auto& p : s.polys())
    if (p.is_zero()) throw Error("solve: the system contains a zero polynomial");
  options.settings.validate();
  std::ostream& log = options.progress ? *options.progress : std::cerr;

  SolveReport report;
  report.seed = rng.seed();
  const StartPair start = total_degree_start(s, rng);
  const auto homotopy = std::make_shared<const Homotopy>(make_gamma_homotopy(s, start.g, rng));
  report.root_count_used = start.solutions.size();
  report.paths_tracked = start.solutions.size();
  if (!options.silent)
    log << "tracking " << report.paths_tracked << " paths, seed " << report.seed << ", gamma " << homotopy->gamma()
        << "\n";

  const auto outcomes = track_all_checked(homotopy, start.solutions, options);
  std::vector<CVector> endpoints;
  for (const auto& out : outcomes) {
    switch (out.status) {
      case PathStatus::converged:
        endpoints.push_back(out.endpoint->coordinates);
        break;
      case PathStatus::diverged: ++report.diverged; break;
      default: ++report.stalled; break;
    }
  }
  canonical_sort(endpoints);
  for (const auto& c : cluster_multiplicities(endpoints, options.cluster_radius)) {
    Solution sol = refine_endpoint(s, c.representative, options.settings);
    sol.m = c.multiplicity;
    report.solutions.push_back(std::move(sol));
  }
  if (!options.silent)
    log << report.solutions.size() << " solutions, " << report.diverged << " diverged, " << report.stalled
        << " stalled\n";
  return report;
}

}  // namespace helios

#include "helios/witness.hpp"

#include <algorithm>

#include "helios/error.hpp"
#include "helios/homotopy.hpp"
#include "helios/parse.hpp"
#include "helios/solio.hpp"
#include "helios/startsys.hpp"

namespace helios {

namespace {

std::vector<std::string> slack_names(const std::vector<std::string>& taken, std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= d; ++j) {
    std::string name = "zz" + std::to_string(j);
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
    names.push_back(std::move(name));
  }
  return names;
}

Polynomial variable(const std::vector<std::string>& vars, std::size_t k) {
  Exponents e(vars.size(), 0);
  e[k] = 1;
  return Polynomial(vars, {{1.0, std::move(e)}});
}

double slack_norm(const CVector& x, std::size_t n) {
  return max_norm(std::span<const Complex>(x).subspan(n));
}

Solution restricted(const Solution& s, const std::vector<std::string>& vars) {
  Solution out = s;
  out.variables = vars;
  out.coordinates.resize(vars.size());
  return out;
}

bool on_original(const PolySystem& s, const CVector& x) {
  return max_norm(s.evaluate(std::span<const Complex>(x).first(s.variable_count()))) <= kWitnessResidual;
}

// Clusters the converged endpoints of one cascade level and refines each representative.
std::vector<Solution> collect(const PolySystem& system, std::vector<CVector> endpoints, const SolveOptions& options) {
  canonical_sort(endpoints);
  std::vector<Solution> out;
  for (const auto& c : cluster_multiplicities(endpoints, options.cluster_radius)) {
    Solution sol = refine_endpoint(system, c.representative, options.settings);
    sol.m = c.multiplicity;
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace

Embedding embed(const PolySystem& s, std::size_t d, Rng& rng) {
  const std::size_t n = s.variable_count();
  if (d < 1 || d > n) throw Error("embedding level " + std::to_string(d) + " out of range 1.." + std::to_string(n));
  const PolySystem base = s.equation_count() == n ? s : random_combinations(s, n, rng);

  Embedding e;
  e.original = s;
  e.level = d;
  e.slack_names = slack_names(s.variables(), d);
  std::vector<std::string> vars = s.variables();
  vars.insert(vars.end(), e.slack_names.begin(), e.slack_names.end());

  std::vector<Polynomial> eqs;
  for (const auto& f : base.polys()) {
    Polynomial row = f.extended(vars);
    for (std::size_t j = 0; j < d; ++j) row = row + variable(vars, n + j).scaled(rng.unit_circle());
    eqs.push_back(std::move(row));
  }
  e.slices = random_slices(s.variables(), d, rng);
  for (std::size_t j = 0; j < d; ++j) eqs.push_back(e.slices[j].extended(vars) + variable(vars, n + j));
  e.augmented = PolySystem(vars, std::move(eqs));
  return e;
}

PolySystem drop_last_slice(const Embedding& e) {
  std::vector<Polynomial> eqs = e.augmented.polys();
  eqs.back() = variable(e.augmented.variables(), e.augmented.variable_count() - 1);
  return PolySystem(e.augmented.variables(), std::move(eqs));
}

Embedding lower(const Embedding& e) {
  if (e.level == 0) throw Error("cannot lower an embedding below level 0");
  Embedding out;
  out.original = e.original;
  out.level = e.level - 1;
  out.slices.assign(e.slices.begin(), e.slices.end() - 1);
  out.slack_names.assign(e.slack_names.begin(), e.slack_names.end() - 1);
  std::vector<Polynomial> kept(e.augmented.polys().begin(), e.augmented.polys().end() - 1);
  const Complex zero = 0.0;
  out.augmented = substitute(PolySystem(e.augmented.variables(), std::move(kept)), {e.slack_names.back()},
                             std::span<const Complex>(&zero, 1));
  return out;
}

WitnessSet witness_set(const PolySystem& s, std::size_t d, Rng& rng, const SolveOptions& options) {
  const std::size_t n = s.variable_count();
  if (d >= n) throw Error("witness dimension must be below the number of variables");
  if (n - d > s.equation_count())
    throw Error("a system of " + std::to_string(s.equation_count()) + " equations has no solution set of dimension " +
                std::to_string(d) + " in " + std::to_string(n) + " variables");
  WitnessSet w;
  w.system = s;
  w.dimension = d;
  std::vector<Polynomial> eqs = square_up(s, n - d, rng).polys();
  if (d > 0) {
    w.slices = random_slices(s.variables(), d, rng);
    eqs.insert(eqs.end(), w.slices.begin(), w.slices.end());
  }
  const SolveReport report = solve(PolySystem(s.variables(), std::move(eqs)), rng, options);
  for (const auto& sol : report.solutions) {
    if (!on_original(s, sol.coordinates)) continue;
    const bool on_slices = std::all_of(w.slices.begin(), w.slices.end(), [&](const Polynomial& p) {
      return std::abs(p.evaluate(sol.coordinates)) <= kWitnessResidual;
    });
    if (on_slices) w.points.push_back(sol);
  }
  return w;
}

const CascadeLevel& CascadeResult::at_dimension(std::size_t d) const {
  for (const auto& level : levels)
    if (level.dimension == d) return level;
  throw Error("cascade has no level for dimension " + std::to_string(d));
}

CascadeResult cascade(const PolySystem& s, std::size_t top, Rng& rng, const SolveOptions& options) {
  const std::size_t n = s.variable_count();
  if (top >= n) throw Error("cascade top dimension must be below the number of variables");
  const auto& vars = s.variables();
  CascadeResult result;

  // Splits level solutions into candidates (slack zero), ambiguous and starts.
  auto classify = [&](CascadeLevel& level, const std::vector<Solution>& sols, std::vector<CVector>& starts) {
    for (const auto& sol : sols) {
      const double z = slack_norm(sol.coordinates, n);
      if (z <= kSlackZero) {
        if (on_original(s, sol.coordinates)) level.candidates.push_back(restricted(sol, vars));
      } else if (z < kSlackAmbiguous) {
        level.ambiguous.push_back(restricted(sol, vars));
      } else {
        starts.push_back(sol.coordinates);
      }
    }
  };

  std::vector<CVector> starts;
  if (top == 0) {
    const PolySystem base = s.equation_count() == n ? s : random_combinations(s, n, rng);
    const SolveReport report = solve(base, rng, options);
    CascadeLevel level{0, {}, {}, report.paths_tracked};
    classify(level, report.solutions, starts);
    result.levels.push_back(std::move(level));
    return result;
  }

  Embedding e = embed(s, top, rng);
  {
    const SolveReport report = solve(e.augmented, rng, options);
    CascadeLevel level{top, {}, {}, report.paths_tracked};
    classify(level, report.solutions, starts);
    result.levels.push_back(std::move(level));
  }
  for (std::size_t d = top; d >= 1; --d) {
    CascadeLevel level{d - 1, {}, {}, starts.size()};
    if (starts.empty()) {
      result.levels.push_back(std::move(level));
      e = lower(e);
      continue;
    }
    const auto homotopy = std::make_shared<const Homotopy>(drop_last_slice(e), e.augmented, rng.unit_circle());
    const auto outcomes = track_all_checked(homotopy, starts, options);
    e = lower(e);
    std::vector<CVector> endpoints;
    for (const auto& out : outcomes) {
      if (out.status != PathStatus::converged) continue;
      CVector x = out.endpoint->coordinates;
      x.pop_back();  // z_d, driven to zero by the level homotopy
      endpoints.push_back(std::move(x));
    }
    starts.clear();
    classify(level, collect(e.augmented, std::move(endpoints), options), starts);
    result.levels.push_back(std::move(level));
  }
  return result;
}

std::string format_witness_set(const WitnessSet& w) {
  std::vector<Polynomial> eqs = w.system.polys();
  eqs.insert(eqs.end(), w.slices.begin(), w.slices.end());
  std::string out = format_system(PolySystem(w.system.variables(), std::move(eqs)));
  for (const auto& p : w.points) out += "\n" + format_solution(p);
  return out;
}

}  // namespace helios

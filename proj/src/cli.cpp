#include "helios/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "helios/binmaps.hpp"
#include "helios/counts.hpp"
#include "helios/error.hpp"
#include "helios/families.hpp"
#include "helios/homotopy.hpp"
#include "helios/parse.hpp"
#include "helios/solio.hpp"
#include "helios/solver.hpp"
#include "helios/witness.hpp"

namespace helios::cli {

namespace {

struct Flags {
  std::string file;
  std::optional<std::uint64_t> seed;
  bool json = false;
  unsigned tasks = 1;
  bool quiet = false;
  std::string target, start, sols;
  bool step = false;
  std::size_t dim = 0;
  std::size_t top = 0;
  std::string family;
  int size = 0;
  std::string output;
};

class MathFailure : public Error {
 public:
  using Error::Error;
};

std::optional<std::uint64_t> environment_seed() {
  const char* text = std::getenv("HELIOS_SEED");
  if (text == nullptr || *text == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(text, &used);
    if (used == std::strlen(text)) return seed;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("HELIOS_SEED is not an unsigned integer: ") + text, 1, 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string fields(Complex z) {
  char buffer[80];
  std::snprintf(buffer, sizeof buffer, "% .14E  % .14E", z.real() + 0.0, z.imag() + 0.0);
  return buffer;
}

std::string point_line(const PathPoint& p, const std::vector<std::string>& vars) {
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, "t : % .14E  step : % .3E  iter : %d  res : % .3E", p.t, p.step_used,
                p.corrector_iterations, p.corrector_residual);
  std::string line = buffer;
  for (std::size_t i = 0; i < vars.size(); ++i) line += "  " + vars[i] + " : " + fields(p.x[i]);
  return line;
}

void write_blocks(std::ostream& out, const std::vector<Solution>& sols) {
  for (std::size_t i = 0; i < sols.size(); ++i) out << (i ? "\n" : "") << format_solution(sols[i]);
}

int do_solve(const Flags& f, std::ostream& out, std::ostream& err) {
  SolveOptions options;
  options.seed = f.seed;
  options.tasks = f.tasks;
  options.silent = f.quiet;
  options.progress = &err;
  const SolveReport report = solve(read_system_file(f.file), options);
  if (f.json)
    out << to_json(report) << "\n";
  else
    write_blocks(out, report.solutions);
  if (report.solutions.empty()) throw MathFailure("no path converged");
  return kSuccess;
}

int do_mixvol(const Flags& f, std::ostream& out) {
  const PolySystem s = read_system_file(f.file);
  out << "total degree: " << total_degree(s) << "\n";
  out << "mixed volume: " << mixed_volume(s) << "\n";
  return kSuccess;
}

int do_track(const Flags& f, std::ostream& out, std::ostream& err) {
  const PolySystem target = read_system_file(f.target);
  const PolySystem start = read_system_file(f.start);
  const auto starts = parse_solutions(read_file(f.sols));
  Rng rng(resolve_seed(f.seed));
  const auto homotopy = std::make_shared<const Homotopy>(target, start, rng.unit_circle());
  std::vector<Solution> endpoints;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    PathOutcome outcome;
    if (f.step) {
      out << "path " << k + 1 << "\n";
      PathTracker tracker(homotopy, starts[k].coordinates);
      while (auto p = tracker.next()) out << point_line(*p, target.variables()) << "\n";
      outcome = track_path(homotopy, starts[k].coordinates);
    } else {
      outcome = track_path(homotopy, starts[k].coordinates);
    }
    if (outcome.status == PathStatus::converged) {
      endpoints.push_back(*outcome.endpoint);
      if (f.step) out << format_solution(*outcome.endpoint);
    } else {
      err << "path " << k + 1 << " " << to_string(outcome.status) << " at t = " << outcome.final_t << "\n";
    }
  }
  if (!f.step) write_blocks(out, endpoints);
  if (endpoints.empty()) throw MathFailure("no path converged");
  return kSuccess;
}

int do_witness(const Flags& f, std::ostream& out) {
  Rng rng(resolve_seed(f.seed));
  const WitnessSet w = witness_set(read_system_file(f.file), f.dim, rng);
  out << format_witness_set(w);
  if (w.points.empty()) throw MathFailure("no witness points found");
  return kSuccess;
}

int do_cascade(const Flags& f, std::ostream& out) {
  Rng rng(resolve_seed(f.seed));
  const CascadeResult result = cascade(read_system_file(f.file), f.top, rng);
  for (const auto& level : result.levels) {
    out << "dimension " << level.dimension << " : " << level.candidates.size() << " candidates, "
        << level.ambiguous.size() << " ambiguous\n";
    for (const auto& sol : level.candidates) out << "\n" << format_solution(sol);
    if (!level.ambiguous.empty()) out << "\nambiguous\n";
    for (const auto& sol : level.ambiguous) out << "\n" << format_solution(sol);
    out << "\n";
  }
  return kSuccess;
}

int do_maps(const Flags& f, std::ostream& out) {
  const PolySystem s = read_system_file(f.file);
  if (!is_binomial(s)) throw ParseError("not a binomial system: every equation needs exactly two terms", 1, 1);
  const auto maps = monomial_maps(s);
  for (const auto& m : maps) out << format_map(m) << "\n";
  if (maps.empty()) throw MathFailure("the system has no solutions");
  return kSuccess;
}

int do_family(const Flags& f, std::ostream& out) {
  const PolySystem s = family(f.family, f.size);
  if (f.output.empty())
    out << format_system(s);
  else
    write_system_file(s, f.output);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial homotopy continuation", "helios"};
  app.require_subcommand(1);
  Flags f;

  auto seeded = [&](CLI::App* sub) { sub->add_option("--seed", f.seed, "random seed (default: HELIOS_SEED)"); };

  auto* solve_cmd = app.add_subcommand("solve", "solve a square system by the blackbox solver");
  solve_cmd->add_option("file", f.file, "system file")->required()->check(CLI::ExistingFile);
  seeded(solve_cmd);
  solve_cmd->add_flag("--json", f.json, "print the report as JSON");
  solve_cmd->add_option("--tasks", f.tasks, "tracking threads")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--quiet", f.quiet, "no progress on stderr");

  auto* mixvol_cmd = app.add_subcommand("mixvol", "total degree and mixed volume");
  mixvol_cmd->add_option("file", f.file, "system file")->required()->check(CLI::ExistingFile);

  auto* track_cmd = app.add_subcommand("track", "track paths from start solutions");
  track_cmd->add_option("--target", f.target, "target system file")->required()->check(CLI::ExistingFile);
  track_cmd->add_option("--start", f.start, "start system file")->required()->check(CLI::ExistingFile);
  track_cmd->add_option("--sols", f.sols, "start solutions file")->required()->check(CLI::ExistingFile);
  track_cmd->add_flag("--step", f.step, "print every accepted point");
  seeded(track_cmd);

  auto* witness_cmd = app.add_subcommand("witness", "witness set of a given dimension");
  witness_cmd->add_option("file", f.file, "system file")->required()->check(CLI::ExistingFile);
  witness_cmd->add_option("--dim", f.dim, "dimension")->required();
  seeded(witness_cmd);

  auto* cascade_cmd = app.add_subcommand("cascade", "candidate witness points for every dimension");
  cascade_cmd->add_option("file", f.file, "system file")->required()->check(CLI::ExistingFile);
  cascade_cmd->add_option("--top", f.top, "top dimension")->required();
  seeded(cascade_cmd);

  auto* maps_cmd = app.add_subcommand("maps", "monomial maps of a binomial system");
  maps_cmd->add_option("file", f.file, "system file")->required()->check(CLI::ExistingFile);

  auto* family_cmd = app.add_subcommand("family", "write a benchmark system");
  family_cmd->add_option("name", f.family, "cyclic or noon")->required()->check(CLI::IsMember({"cyclic", "noon"}));
  family_cmd->add_option("n", f.size, "size")->required();
  family_cmd->add_option("-o,--output", f.output, "output file (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (!f.seed) f.seed = environment_seed();
    if (solve_cmd->parsed()) return do_solve(f, out, err);
    if (mixvol_cmd->parsed()) return do_mixvol(f, out);
    if (track_cmd->parsed()) return do_track(f, out, err);
    if (witness_cmd->parsed()) return do_witness(f, out);
    if (cascade_cmd->parsed()) return do_cascade(f, out);
    if (maps_cmd->parsed()) return do_maps(f, out);
    return do_family(f, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const MathFailure& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  }
}

}  // namespace helios::cli

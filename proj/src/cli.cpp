#include "urprior/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "urprior/cohomology.hpp"
#include "urprior/compat.hpp"
#include "urprior/io.hpp"
#include "urprior/oracle.hpp"
#include "urprior/report.hpp"
#include "urprior/witness.hpp"

namespace urprior {

namespace {

struct Options {
  std::string input;
  std::string output;
  bool json = false;
  bool dump_matrices = false;
  std::size_t dim = 1;
  std::optional<std::size_t> max_dim;
};

void emit(std::ostream& out, const ordered_json& doc, bool json, std::string (*render)(const ordered_json&)) {
  if (json) {
    out << doc.dump(2) << "\n";
  } else {
    out << render(doc);
  }
}

// Loads and validates a system file; on failure prints the diagnostics and returns nullopt.
std::optional<AgentSystem> load_system(const nlohmann::json& doc, const Options& opt, std::ostream& out) {
  try {
    return validate(read_system(doc));
  } catch (const ValidationError& e) {
    emit(out, invalid_json(e.violations()), opt.json, render_invalid);
  } catch (const FormatError& e) {
    emit(out, malformed_json(e.what()), opt.json, render_invalid);
  }
  return std::nullopt;
}

SimplicialComplex load_complex(const nlohmann::json& doc) {
  const auto spec = read_complex(doc);
  try {
    return from_facets(spec.vertices, spec.facets);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto system = load_system(load_json_file(opt.input), opt, out);
  if (!system) return kExitInvalid;
  const auto report = run_check(*system, opt.max_dim.value_or(2));
  emit(out, to_json(*system, report), opt.json, render_check);
  return report.result.verdict == Verdict::exists ? kExitExists : kExitNone;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const auto system = load_system(load_json_file(opt.input), opt, out);
  if (!system) return kExitInvalid;
  const auto measure = feasibility_oracle(*system);
  emit(out, oracle_json(*system, measure), opt.json, render_oracle);
  return measure ? kExitExists : kExitNone;
}

int cmd_cohomology(const Options& opt, std::ostream& out) {
  if (opt.dim == 0) throw FormatError("--dim must be at least 1");
  const auto doc = load_json_file(opt.input);
  if (looks_like_complex(doc)) {
    const auto complex = load_complex(doc);
    emit(out, cohomology_json(complex, opt.dim, opt.dump_matrices), opt.json, render_cohomology);
    return kExitExists;
  }
  const auto system = load_system(doc, opt, out);
  if (!system) return kExitInvalid;
  const std::size_t depth = std::max(opt.dim + 1, opt.max_dim.value_or(0));
  const auto complex = build_overlap_complex(*system, depth);
  emit(out, cohomology_json(complex, opt.dim, opt.dump_matrices), opt.json, render_cohomology);
  return kExitExists;
}

int cmd_counterexample(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto complex = load_complex(load_json_file(opt.input));
  const AgentSystem system = generate_counterexample(complex);
  const auto doc = write_system(system);
  if (opt.output.empty()) {
    out << doc.dump(2) << "\n";
    return kExitExists;
  }
  std::ofstream file(opt.output);
  if (!file) {
    err << "error: cannot write " << opt.output << "\n";
    return kExitInvalid;
  }
  file << doc.dump(2) << "\n";
  if (opt.json) {
    out << ordered_json{{"output", opt.output}, {"agents", system.size()}, {"outcomes", system.space().size()}}.dump(2)
        << "\n";
  } else {
    out << "wrote " << system.size() << " agents, " << system.space().size() << " outcomes to " << opt.output << "\n";
  }
  return kExitExists;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether agents' credence functions share a common ur-prior", "urprior"};
  app.require_subcommand(1);

  Options opt;
  std::size_t max_dim = 0;
  auto add_common = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", opt.input, what)->required();
    sub->add_flag("--json", opt.json, "Print the machine-readable JSON report");
  };

  auto* check = app.add_subcommand("check", "Run the full ur-prior decision pipeline on a system file");
  add_common(check, "System file");
  check->add_option("--max-dim", max_dim, "Enumerate the overlap complex up to this dimension (at least 2)");

  auto* cohomology = app.add_subcommand("cohomology", "Cohomology of a complex file or of a system's overlap complex");
  add_common(cohomology, "System or complex file");
  cohomology->add_option("--dim", opt.dim, "Cohomology degree k >= 1")->default_val(1);
  cohomology->add_option("--max-dim", max_dim, "Enumerate a system's overlap complex at least this far");
  cohomology->add_flag("--dump-matrices", opt.dump_matrices, "Print the labelled coboundary matrices");

  auto* counterexample =
      app.add_subcommand("counterexample", "Pairwise compatible system without ur-prior on a complex with H1 != 0");
  add_common(counterexample, "Complex file");
  counterexample->add_option("--output", opt.output, "Write the system file here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "Brute-force feasibility check, independent of the overlap complex");
  add_common(oracle, "System file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInvalid;
  }
  if (max_dim > 0) opt.max_dim = max_dim;

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (cohomology->parsed()) return cmd_cohomology(opt, out);
    if (counterexample->parsed()) return cmd_counterexample(opt, out, err);
    if (oracle->parsed()) return cmd_oracle(opt, out);
  } catch (const NoHoleError& e) {
    if (opt.json) {
      out << ordered_json{{"error", "NoHole"}, {"message", e.what()}}.dump(2) << "\n";
    } else {
      out << "NoHole: " << e.what() << "\n";
    }
    return kExitNone;
  } catch (const FormatError& e) {
    emit(out, malformed_json(e.what()), opt.json, render_invalid);
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace urprior

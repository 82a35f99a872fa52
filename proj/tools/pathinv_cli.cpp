#include <chrono>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pathinv/fp.hpp"
#include "pathinv/instance.hpp"
#include "pathinv/invariants.hpp"
#include "pathinv/rational.hpp"
#include "pathinv/report.hpp"
#include "pathinv/reptype.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitPsi = 4;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string path;
  std::string json_out;
  std::string dot_out;
  std::string field_override;
  std::size_t max_degree_override = 0;
  std::size_t closure_cap_override = 0;
  bool quiet = false;
};

// Returns the effective field, applying --field on top of the file options.
std::optional<pathinv::FieldOption> resolve_field(const pathinv::InstanceData& data,
                                                  const std::string& override_str) {
  if (override_str.empty()) return data.options.field;
  pathinv::FieldOption f;
  if (override_str == "rational") return f;
  if (override_str.find_first_not_of("0123456789") == std::string::npos &&
      !override_str.empty()) {
    long long p = 0;
    try {
      p = std::stoll(override_str);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (p < 2 || p >= pathinv::Fp::max_modulus || !pathinv::is_prime(p)) return std::nullopt;
    f.rational = false;
    f.prime = p;
    return f;
  }
  return std::nullopt;
}

std::string field_name(const pathinv::FieldOption& f) {
  return f.rational ? "rational" : "prime " + std::to_string(f.prime);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <pathinv::Field F>
int do_validate(const pathinv::InstanceData& data, const std::string& text, bool quiet) {
  pathinv::HomogeneousAction<F> action = pathinv::build_action<F>(data, text);
  std::vector<pathinv::ActionError> errors = pathinv::validate(action);
  if (!errors.empty()) {
    for (const pathinv::ActionError& e : errors) std::cerr << e.str(action.quiver) << "\n";
    return kExitValidation;
  }
  if (!quiet) std::cout << "ok\n";
  return kExitOk;
}

template <pathinv::Field F>
int do_compute(const pathinv::InstanceData& data, const std::string& text,
               const pathinv::RunOptions& run_opts, const Options& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  pathinv::HomogeneousAction<F> action = pathinv::build_action<F>(data, text);
  std::vector<pathinv::ActionError> errors = pathinv::validate(action);
  if (!errors.empty()) {
    for (const pathinv::ActionError& e : errors) std::cerr << e.str(action.quiver) << "\n";
    return kExitValidation;
  }

  pathinv::ComputeReport rep;
  try {
    rep = pathinv::run_compute(action, run_opts);
  } catch (const pathinv::PsiIdentityViolation& e) {
    std::cerr << "internal fault: " << e.what() << "\n";
    return kExitPsi;
  }
  const double total_ms = ms_since(t0);

  if (!opts.json_out.empty()) {
    std::ofstream out(opts.json_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << opts.json_out << "\n";
      return kExitParse;
    }
    out << pathinv::report_to_json(rep);
  }
  if (!opts.dot_out.empty()) {
    std::ofstream out(opts.dot_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << opts.dot_out << "\n";
      return kExitParse;
    }
    out << pathinv::report_to_dot(rep);
  }

  if (!opts.quiet) {
    std::cout << "field: " << rep.field_name << ", max degree " << rep.max_degree
              << ", closure cap " << rep.closure_cap << "\n";
    std::cout << "closure: order " << rep.closure_order
              << (rep.closure_complete ? " (complete)" : " (incomplete)") << "\n";
    std::cout << "invariant dims by degree:";
    for (std::size_t d : rep.dimensions_by_degree) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "invariant quiver: " << rep.graded_arrows.size() << " graded arrow(s), "
              << (rep.stabilized ? "stabilized" : "not stabilized") << "\n";
    for (const pathinv::GradedArrowRow& g : rep.graded_arrows)
      std::cout << "  " << g.source << " -> " << g.target << "  d=" << g.degree << " ×"
                << g.multiplicity << "\n";
    std::size_t oracle_matches = 0;
    for (const pathinv::OracleRow& r : rep.oracle_rows) oracle_matches += r.match ? 1 : 0;
    std::cout << "checks: psi " << (rep.psi_all_ok ? "ok" : "FAILED") << " (" << rep.words.size()
              << " words), freeness " << (rep.freeness_ok ? "ok" : "FAILED") << ", oracle "
              << rep.oracle_status;
    if (rep.oracle_status == "checked")
      std::cout << " (" << oracle_matches << "/" << rep.oracle_rows.size() << " match)";
    std::cout << "\n";
    std::cout << "original verdict: " << rep.original_verdict.summary << "\n";
    std::cout << "invariant verdict: " << rep.invariant_verdict.summary << "\n";
    auto show_opt = [](const std::optional<bool>& v) {
      return !v.has_value() ? "not applicable" : (*v ? "yes" : "NO");
    };
    std::cout << "preserved: " << show_opt(rep.preserved) << "\n";
    std::cout << "cycle structure: " << show_opt(rep.cycle_structure_ok) << "\n";
    std::cout << "cycle degree witness: " << show_opt(rep.cycle_degree_witness_ok) << "\n";
    for (const std::string& c : rep.caveats) std::cout << "caveat: " << c << "\n";
    std::cout << "total " << total_ms << " ms\n";
  }

  const bool checks_ok = rep.psi_all_ok && rep.freeness_ok;
  return checks_ok ? kExitOk : kExitPsi;
}

int do_classify(const pathinv::InstanceData& data, bool quiet) {
  pathinv::Quiver q = pathinv::build_quiver(data);
  pathinv::GraphVerdict v = pathinv::classify_graph(pathinv::underlying_graph(q));
  std::string line = pathinv::verdict_str(v);
  if (pathinv::is_oriented_cycle(q) && v.overall == pathinv::RepType::Tame &&
      v.components.size() == 1)
    line = "Tame (oriented cycle / " + v.components[0].family + ")";
  if (!quiet) std::cout << line << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant quivers of complete path algebras under vertex-fixing group actions"};
  app.require_subcommand(1);

  Options opts;

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "parse an instance file and validate the action");
  cmd_validate->add_option("path", opts.path, "instance JSON file")->required();
  cmd_validate->add_option("--field", opts.field_override, "field override: rational|<prime>");
  cmd_validate->add_flag("--quiet", opts.quiet, "suppress non-error output");

  CLI::App* cmd_compute =
      app.add_subcommand("compute", "run the invariants engine and emit reports");
  cmd_compute->add_option("path", opts.path, "instance JSON file")->required();
  cmd_compute->add_option("--max-degree", opts.max_degree_override, "truncation degree override")
      ->check(CLI::PositiveNumber);
  cmd_compute->add_option("--json", opts.json_out, "write the JSON report here");
  cmd_compute->add_option("--dot", opts.dot_out, "write the invariant quiver in DOT here");
  cmd_compute->add_option("--field", opts.field_override, "field override: rational|<prime>");
  cmd_compute->add_option("--closure-cap", opts.closure_cap_override, "closure size cap override")
      ->check(CLI::PositiveNumber);
  cmd_compute->add_flag("--quiet", opts.quiet, "suppress non-error output");

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "classify the original quiver only");
  cmd_classify->add_option("path", opts.path, "instance JSON file")->required();
  cmd_classify->add_flag("--quiet", opts.quiet, "suppress non-error output");

  CLI11_PARSE(app, argc, argv);

  std::optional<std::string> text = read_file(opts.path);
  if (!text.has_value()) {
    std::cerr << "cannot read " << opts.path << "\n";
    return kExitParse;
  }

  pathinv::InstanceData data;
  try {
    data = pathinv::parse_instance(*text);
  } catch (const pathinv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }

  if (cmd_classify->parsed()) return do_classify(data, opts.quiet);

  std::optional<pathinv::FieldOption> field = resolve_field(data, opts.field_override);
  if (!field.has_value()) {
    std::cerr << "invalid --field value \"" << opts.field_override
              << "\" (expected \"rational\" or a prime < 2^31)\n";
    return kExitParse;
  }
  data.options.field = *field;

  try {
    if (cmd_validate->parsed()) {
      if (field->rational) return do_validate<pathinv::Rational>(data, *text, opts.quiet);
      return do_validate<pathinv::Fp>(data, *text, opts.quiet);
    }

    pathinv::RunOptions run_opts;
    run_opts.max_degree = opts.max_degree_override ? opts.max_degree_override : data.max_degree;
    run_opts.closure_cap =
        opts.closure_cap_override ? opts.closure_cap_override : data.options.closure_cap;
    run_opts.stabilization_window = data.options.stabilization_window;
    run_opts.field_name = field_name(*field);
    if (field->rational) return do_compute<pathinv::Rational>(data, *text, run_opts, opts);
    return do_compute<pathinv::Fp>(data, *text, run_opts, opts);
  } catch (const pathinv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
}

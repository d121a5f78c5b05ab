#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "skewcal/deffile.hpp"
#include "skewcal/oplusr.hpp"
#include "skewcal/poissonization.hpp"
#include "skewcal/registry.hpp"
#include "skewcal/suites.hpp"

namespace {

using namespace skewcal;

/// Resolves `arg` as a file path first, then as a built-in example name.
bool load_definition(const std::string& arg, DefinitionFile& out) {
  std::string text;
  std::string label = arg;
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) {
      std::cerr << "error: cannot read '" << arg << "'\n";
      return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (const RegistryEntry* e = find_example(arg)) {
    text = e->text;
    label = "<" + arg + ">";
  } else {
    std::cerr << "error: '" << arg
              << "' is neither a file nor a built-in example (try 'examples')\n";
    return false;
  }
  DefParseResult r = parse_definition(text);
  if (!r.ok()) {
    for (const auto& d : r.diagnostics)
      std::cerr << label << ":" << d.str() << "\n";
    return false;
  }
  out = *r.file;
  return true;
}

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char b : s)
    if ((b & 0xC0) != 0x80) ++w;
  return w;
}

const CheckResult* find_check(const CheckReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

void print_human(const CheckReport& rep) {
  std::size_t name_w = 4, tag_w = 3;
  for (const auto& c : rep.checks) {
    name_w = std::max(name_w, c.name.size());
    tag_w = std::max(tag_w, display_width(c.paper_ref));
  }
  std::cout << "suite: " << rep.suite << "   seed: " << rep.seed << "\n";
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& c : rep.checks) {
    std::cout << "  " << c.verdict << std::string(8 - c.verdict.size(), ' ')
              << c.name << std::string(name_w - c.name.size() + 2, ' ') << "["
              << c.paper_ref << "]";
    if (!c.reason.empty())
      std::cout << std::string(tag_w - display_width(c.paper_ref) + 2, ' ')
                << c.reason;
    std::cout << "\n";
    if (c.verdict == "pass")
      ++passed;
    else if (c.verdict == "fail")
      ++failed;
    else
      ++skipped;
  }
  std::cout << "summary: " << passed << " passed, " << failed << " failed, "
            << skipped << " skipped (" << rep.elapsed_ms << " ms)\n";
}

void print_json(const CheckReport& rep, bool with_compat_report) {
  nlohmann::json j;
  j["suite"] = rep.suite;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["verdict"] = c.verdict;
    jc["paper_ref"] = c.paper_ref;
    jc["residual_nonzero_entries"] = c.residual_nonzero_entries;
    jc["max_abs_sample"] = c.max_abs_sample;
    if (!c.reason.empty()) jc["reason"] = c.reason;
    j["checks"].push_back(jc);
  }
  j["seed"] = rep.seed;
  j["elapsed_ms"] = rep.elapsed_ms;
  if (with_compat_report) {
    const CheckResult* res = find_check(rep, "compat/compatibility-residual");
    const CheckResult* cyc = find_check(rep, "compat/cyclic-identity");
    const CheckResult* lift = find_check(rep, "compat/poissonized-transfer");
    bool identity = cyc && cyc->verdict == "pass";
    if (lift) identity = identity && lift->verdict == "pass";
    nlohmann::json jr;
    jr["residual_entries"] = res ? res->residual_nonzero_entries : 0;
    jr["verdict"] = res ? res->verdict : "skipped";
    jr["identity_check"] = identity;
    j["compat_report"] = jr;
  }
  std::cout << j.dump(2) << "\n";
}

int cmd_check(const std::string& suite, const std::string& arg, bool json,
              const SuiteOptions& opt) {
  DefinitionFile d;
  if (!load_definition(arg, d)) return 2;
  CheckReport rep;
  try {
    rep = run_suite(d, suite, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (json)
    print_json(rep, suite == "compat");
  else
    print_human(rep);
  return rep.all_passed() ? 0 : 1;
}

bool write_output(const std::string& path, const DefinitionFile& d) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << emit_definition(d);
  std::cout << "wrote " << path << "\n";
  return true;
}

int cmd_poissonize(const std::string& arg, const std::string& out_path) {
  DefinitionFile d;
  if (!load_definition(arg, d)) return 2;
  if (!d.pi) {
    std::cerr << "error: input has no [jacobi] block to poissonize\n";
    return 2;
  }
  AlgebroidDef alg = effective_algebroid(d);
  CoSec phi0 = effective_phi0(d, alg.rank());
  DefinitionFile out;
  try {
    AlgebroidDef bar = bar_realization(alg, phi0, "t");
    out.chart = bar.chart();
    out.algebroid = bar;
    out.phi0 = CoSec(bar.chart(), alg.rank(), 1);
    out.pi = poissonize(*d.pi, bar.chart(), "t");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return write_output(out_path, out) ? 0 : 2;
}

int cmd_contactify(const std::string& arg, const std::string& out_path) {
  DefinitionFile d;
  if (!load_definition(arg, d)) return 2;
  if (!d.contact_eta) {
    std::cerr << "error: input has no [contact] block\n";
    return 2;
  }
  AlgebroidDef tm = AlgebroidDef::tangent(d.chart);
  DefinitionFile out;
  try {
    ContactToJacobi ctj = contact_to_jacobi(tm, *d.contact_eta);
    AlgebroidDef ext = build_oplus(tm);
    out.chart = d.chart;
    out.algebroid = ext;
    out.phi0 = CoSec::basis(d.chart, ext.rank(), {tm.rank()});
    out.pi = flat_pair(ctj.lambda, MultiVec::from_section(ctj.reeb));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return write_output(out_path, out) ? 0 : 2;
}

int cmd_examples() {
  std::size_t w = 0;
  for (const auto& e : builtin_examples()) w = std::max(w, e.name.size());
  for (const auto& e : builtin_examples())
    std::cout << e.name << std::string(w - e.name.size() + 2, ' ')
              << e.description << " (default suite: " << e.default_suite
              << ")\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for skew, Lie, and Jacobi algebroid structures"};
  app.require_subcommand(1);

  std::string suite, input, output;
  bool json = false;
  SuiteOptions opt;

  CLI::App* check =
      app.add_subcommand("check", "Run a verification suite on a definition");
  check->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  check->add_option("input", input, "Definition file or built-in example name")
      ->required();
  check->add_flag("--json", json, "Emit the machine-readable report");
  check->add_option("--seed", opt.seed, "Seed for randomized property checks");
  check->add_flag("--numeric-fallback", opt.numeric_fallback,
                  "Judge residuals by sampling instead of exact zero tests");
  check->add_option("--tol", opt.tol,
                    "Sample tolerance for the numeric fallback");
  check->add_flag("--poissonized", opt.poissonized,
                  "Also check the lifted transfer identity (compat suite)");

  CLI::App* pz = app.add_subcommand(
      "poissonize", "Emit the one-coordinate extension with the scaled bivector");
  pz->add_option("input", input, "Definition file or built-in example name")
      ->required();
  pz->add_option("-o,--output", output, "Output definition file")->required();

  CLI::App* cf = app.add_subcommand(
      "contactify", "Emit the extended algebroid pair derived from a contact form");
  cf->add_option("input", input, "Definition file or built-in example name")
      ->required();
  cf->add_option("-o,--output", output, "Output definition file")->required();

  CLI::App* ex = app.add_subcommand("examples", "List built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (check->parsed()) return cmd_check(suite, input, json, opt);
  if (pz->parsed()) return cmd_poissonize(input, output);
  if (cf->parsed()) return cmd_contactify(input, output);
  if (ex->parsed()) return cmd_examples();
  return 2;
}

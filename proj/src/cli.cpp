#include "algproof/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "algproof/error.hpp"
#include "algproof/json_io.hpp"

namespace algproof::cli {

namespace {

using json_io::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("IoError", "cannot write " + path);
}

Json read_json(const std::string& path) { return json_io::parse_text(read_file(path)); }

// Errors raised on well-formed input that is nonetheless an invalid proof.
int exit_code_for(const std::string& code) {
  static const std::set<std::string> invalid{"InvalidInputProof", "NonIntegerBaseAxiom",
                                             "NonIntegralExtensionValue", "NonIntegralLineValue",
                                             "ZeroConstant"};
  return invalid.count(code) ? 1 : 2;
}

void report_error(std::ostream& err, const std::string& code, const std::string& message) {
  Json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  err << json_io::dump(j);
}

Certificate load_proof(const std::string& path) {
  return json_io::certificate_from_json(read_json(path));
}

struct Flags {
  std::string proof, out, state, reslin, axioms, instance, system;
  std::uint32_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t below = 0;
  bool all_errors = false;
  bool allow_partial = false;
  bool faithful = false;
  bool override_guard = false;
};

int cmd_check(const Flags& f, std::ostream& out) {
  if (!f.reslin.empty()) {
    const auto file = json_io::reslin_from_json(read_json(f.reslin));
    const auto r = reslin::check_reslin(file.axioms, file.proof);
    out << json_io::dump(json_io::to_json(r));
    return r.valid && (f.allow_partial || r.refutation) ? 0 : 1;
  }
  if (f.proof.empty()) throw Error("FlagError", "check needs --proof or --reslin");
  const Certificate c = load_proof(f.proof);
  if (!f.system.empty()) {
    const auto kind = parse_system(f.system);
    if (!kind) throw Error("FlagError", "unknown system " + f.system);
    if (*kind != c.kind)
      throw Error("SystemMismatch", "--system " + f.system + " but the proof declares " +
                                        std::string(system_name(c.kind)));
  }
  CheckOptions opt;
  opt.all_errors = f.all_errors;
  opt.require_refutation = !f.allow_partial;
  const auto r = check_certificate(c, opt);
  out << json_io::dump(json_io::to_json(r));
  return r.valid ? 0 : 1;
}

int cmd_gen_bvp(const Flags& f, std::ostream& out) {
  const std::string text = json_io::dump(json_io::instance_to_json(bvp::gen_bvp(f.n)));
  if (f.out.empty()) {
    out << text;
  } else {
    write_file(f.out, text);
    Json j;
    j["n"] = f.n;
    j["out"] = f.out;
    out << json_io::dump(j);
  }
  return 0;
}

int cmd_oracle(const Flags& f, std::ostream& out) {
  if (!f.instance.empty()) {
    const auto inst = json_io::instance_from_json(read_json(f.instance));
    if (inst.n != f.n)
      throw Error("FlagError", "--instance holds n = " + std::to_string(inst.n) + ", not " +
                                   std::to_string(f.n));
  }
  const Certificate c = bvp::brute_force_refutation(f.n, f.override_guard);
  const std::string text = json_io::dump(json_io::to_json(c));
  if (f.out.empty()) {
    out << text;
  } else {
    write_file(f.out, text);
    out << json_io::dump(json_io::to_json(check_certificate(c)));
  }
  return 0;
}

int cmd_translate(const Flags& f, std::ostream& out) {
  auto file = json_io::reslin_from_json(read_json(f.reslin));
  if (!f.axioms.empty()) {
    const Json k = read_json(f.axioms);
    if (k.is_array()) {
      file.axioms.clear();
      for (const auto& d : k) file.axioms.push_back(json_io::disjunction_from_json(d));
    } else {
      file.axioms = json_io::reslin_from_json(k).axioms;
    }
  }
  const auto sim = xlate::simulate_reslin_b(file.axioms, file.proof);
  const std::string text = json_io::dump(json_io::to_json(sim.cert));
  if (!f.out.empty()) write_file(f.out, text);
  Json j;
  j["check"] = json_io::to_json(check_certificate(sim.cert));
  j["line_map"] = sim.line_map;
  Json reg = Json::array();
  for (const auto& d : sim.registry.definitions()) {
    Json x;
    x["var"] = d.var.name();
    x["def"] = json_io::to_json(d.definition);
    reg.push_back(std::move(x));
  }
  j["registry"] = std::move(reg);
  j["size"] = xlate::simulation_size(sim.cert);
  if (f.out.empty()) j["proof"] = json_io::parse_text(text);
  out << json_io::dump(j);
  return 0;
}

int cmd_rationalize(const Flags& f, std::ostream& out) {
  const Certificate c = load_proof(f.proof);
  xlate::RationalizeOptions opt;
  opt.faithful_constants = f.faithful;
  const auto r = xlate::rationalize(c.axioms, c.lines, opt);
  const Json state = json_io::to_json(r.state);
  if (!f.state.empty()) write_file(f.state, json_io::dump(state));
  Json j;
  j["check"] = json_io::to_json(check_certificate(r.cert));
  j["state"] = state;
  if (f.out.empty())
    j["proof"] = json_io::to_json(r.cert);
  else
    write_file(f.out, json_io::dump(json_io::to_json(r.cert)));
  out << json_io::dump(j);
  return 0;
}

// Checks the proof and returns its nonzero final constant's numerator, or
// prints the failing report and returns nothing.
std::optional<Integer> verified_final(const Certificate& c, std::ostream& out) {
  const auto r = check_certificate(c);
  if (!r.valid) {
    out << json_io::dump(json_io::to_json(r));
    return std::nullopt;
  }
  return r.final_constant->get_num();
}

int cmd_audit(const Flags& f, std::ostream& out) {
  const auto m = verified_final(load_proof(f.proof), out);
  if (!m) return 1;
  const auto r = bvp::audit_divisibility(*m, f.n);
  out << json_io::dump(json_io::to_json(r));
  return r.passed ? 0 : 1;
}

int cmd_trace(const Flags& f, std::ostream& out) {
  const Certificate c = load_proof(f.proof);
  const auto r = bvp::trace_mod_check(c.axioms, c.lines, f.n, f.k);
  out << json_io::dump(json_io::to_json(r));
  return r.passed ? 0 : 1;
}

int cmd_measure(const Flags& f, std::ostream& out) {
  const Certificate c = load_proof(f.proof);
  out << json_io::dump(json_io::to_json(measure(c.lines)));
  return 0;
}

int cmd_primes(const Flags& f, std::ostream& out) {
  Json j;
  j["primes"] = bvp::primes_below(f.below);
  j["primorial_bits"] = bvp::primorial_bits(f.below);
  out << json_io::dump(j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic proof certificates: checking, translation and BVP bounds", "algproof"};
  app.require_subcommand(1, 1);
  Flags f;
  std::function<int(const Flags&, std::ostream&)> action;

  auto* check = app.add_subcommand("check", "Verify a proof certificate or a Res-Lin proof");
  check->add_option("--proof", f.proof, "Proof certificate JSON");
  check->add_option("--reslin", f.reslin, "Res-Lin proof JSON (checked instead of --proof)");
  check->add_option("--system", f.system,
                    "Expected system: pc-q, pcsqrt-q, pcsqrt-z, extpcsqrt-q, extpcsqrt-z, "
                    "spspc-q; a mismatch with the file is exit 2");
  check->add_flag("--all-errors", f.all_errors, "Report every failing line; verdict unchanged");
  check->add_flag("--allow-partial", f.allow_partial,
                  "Accept valid derivations that do not end in a nonzero constant");
  check->callback([&] { action = cmd_check; });
  check->get_option("--reslin")->excludes("--proof")->excludes("--system");

  auto* gen = app.add_subcommand("gen-bvp", "Write the BVP_n instance");
  gen->add_option("--n", f.n, "Number of variables (>= 1)")->required();
  gen->add_option("--out", f.out, "Output file; stdout when omitted");
  gen->callback([&] { action = cmd_gen_bvp; });

  auto* oracle = app.add_subcommand("oracle-refute", "Write the brute-force Z refutation of BVP_n");
  oracle->add_option("--n", f.n, "Number of variables (>= 1)")->required();
  oracle->add_option("--out", f.out, "Output file; the proof goes to stdout when omitted");
  oracle->add_option("--instance", f.instance, "Instance file that must match n");
  oracle->add_flag("--override-guard", f.override_guard, "Allow n above the cost guard");
  oracle->callback([&] { action = cmd_oracle; });

  auto* tr = app.add_subcommand("translate", "Simulate a Res-Lin proof in Ext-PC√ over Q");
  tr->add_option("--reslin", f.reslin, "Res-Lin proof JSON")->required();
  tr->add_option("--axioms", f.axioms, "Axiom disjunctions; overrides those in --reslin");
  tr->add_option("--out", f.out, "Output certificate; embedded in stdout when omitted");
  tr->callback([&] { action = cmd_translate; });

  auto* rat = app.add_subcommand("rationalize", "Convert an Ext-PC√ Q refutation to Z");
  rat->add_option("--proof", f.proof, "Input certificate")->required();
  rat->add_option("--out", f.out, "Output certificate; embedded in stdout when omitted");
  rat->add_option("--state", f.state, "Write the M, T, deltas, L and F state here");
  rat->add_flag("--faithful-constants", f.faithful,
                "Use the product form of the square-root rescaling instead of the lcm");
  rat->callback([&] { action = cmd_rationalize; });

  auto* audit = app.add_subcommand("audit", "Check that every prime <= 2^n divides the final constant");
  audit->add_option("--proof", f.proof, "Refutation certificate")->required();
  audit->add_option("--n", f.n, "Instance size")->required();
  audit->callback([&] { action = cmd_audit; });

  auto* trace = app.add_subcommand("trace", "Evaluate a BVP_n refutation modulo k+1");
  trace->add_option("--proof", f.proof, "Refutation certificate")->required();
  trace->add_option("--n", f.n, "Instance size")->required();
  trace->add_option("--k", f.k, "Point index in [0, 2^n) with k+1 prime")->required();
  trace->callback([&] { action = cmd_trace; });

  auto* meas = app.add_subcommand("measure", "Report size, degree and line count");
  meas->add_option("--proof", f.proof, "Proof certificate")->required();
  meas->callback([&] { action = cmd_measure; });

  auto* primes = app.add_subcommand("primes", "List primes below N and the primorial bit length");
  primes->add_option("--below", f.below, "Exclusive upper bound")->required();
  primes->callback([&] { action = cmd_primes; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "FlagError", e.what());
    return 2;
  }

  try {
    return action(f, out);
  } catch (const Error& e) {
    report_error(err, e.code(), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return 2;
  }
}

}  // namespace algproof::cli

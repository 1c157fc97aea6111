#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "algproof/cli.hpp"
#include "algproof/error.hpp"
#include "algproof/json_io.hpp"
#include "q_corpus.hpp"
#include "reslin_corpus.hpp"

using namespace algproof;
using namespace algproof::testing;
using json_io::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("algproof-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string parse_error(const std::string& text, auto parser) {
  try {
    parser(json_io::parse_text(text));
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("json: polynomial encoding") {
  const Polynomial p = P("1/2*x1^2*y1 - 3*x2 + 7");
  const Json j = json_io::to_json(p);
  CHECK(j.dump() ==
        R"({"terms":[{"coef":"1/2","mono":{"x1":2,"y1":1}},{"coef":"-3","mono":{"x2":1}},{"coef":"7","mono":{}}]})");
  CHECK(json_io::polynomial_from_json(j) == p);
  CHECK(json_io::to_json(Polynomial{}).dump() == R"({"terms":[]})");

  auto poly = [](const Json& x) { return json_io::polynomial_from_json(x); };
  CHECK(parse_error(R"({"terms":[{"coef":"0","mono":{}}]})", poly) == "ParseError");
  CHECK(parse_error(R"({"terms":[{"coef":"2/4","mono":{}}]})", poly) == "ParseError");
  CHECK(parse_error(R"({"terms":[{"coef":"1","mono":{"x1":0}}]})", poly) == "ParseError");
  CHECK(parse_error(R"({"terms":[{"coef":"1","mono":{"x1":1}},{"coef":"2","mono":{"x1":1}}]})",
                    poly) == "ParseError");
  CHECK(parse_error(R"({"terms":[{"coef":"1","mono":{"z1":1}}]})", poly) != "");
  CHECK(parse_error(R"({"terms":[],"extra":1})", poly) == "ParseError");
  CHECK(parse_error(R"({"terms":[)", poly) == "ParseError");
  // Any term order is accepted and canonicalized.
  CHECK(json_io::polynomial_from_json(json_io::parse_text(
            R"({"terms":[{"coef":"1","mono":{}},{"coef":"1","mono":{"x1":1}}]})")) == P("x1 + 1"));
}

TEST_CASE("json: certificates and reports round-trip byte-identically") {
  std::vector<Certificate> certs{bvp::brute_force_refutation(2)};
  for (auto& [name, c] : q_corpus()) certs.push_back(c);
  for (const auto& c : certs) {
    const std::string text = json_io::dump(json_io::to_json(c));
    const Certificate back = json_io::certificate_from_json(json_io::parse_text(text));
    CHECK(back.kind == c.kind);
    CHECK(back.lines == c.lines);
    CHECK(json_io::dump(json_io::to_json(back)) == text);

    const auto r = check_certificate(c);
    const std::string rt = json_io::dump(json_io::to_json(r));
    CHECK(json_io::check_report_from_json(json_io::parse_text(rt)) == r);
  }

  auto broken = certs[0];
  broken.lines[1].poly = P("x1");
  CheckOptions opt;
  opt.all_errors = true;
  const auto r = check_certificate(broken, opt);
  REQUIRE_FALSE(r.all_errors.empty());
  const std::string rt = json_io::dump(json_io::to_json(r));
  CHECK(json_io::check_report_from_json(json_io::parse_text(rt)) == r);
  CHECK(json_io::dump(json_io::to_json(json_io::check_report_from_json(json_io::parse_text(rt)))) ==
        rt);
}

TEST_CASE("json: bvp artifacts") {
  const auto inst = bvp::gen_bvp(3);
  const std::string it = json_io::dump(json_io::instance_to_json(inst));
  CHECK(json_io::dump(json_io::instance_to_json(json_io::instance_from_json(json_io::parse_text(it)))) ==
        it);
  auto wrong = json_io::instance_to_json(bvp::gen_bvp(2));
  wrong["n"] = 3;
  CHECK(parse_error(wrong.dump(), [](const Json& x) { json_io::instance_from_json(x); }) ==
        "ParseError");

  const auto d = bvp::audit_divisibility(10, 2);
  const std::string dt = json_io::dump(json_io::to_json(d));
  CHECK(json_io::dump(json_io::to_json(json_io::divisibility_from_json(json_io::parse_text(dt)))) == dt);

  const auto c = bvp::brute_force_refutation(2);
  const auto t = bvp::trace_mod_check(c.axioms, c.lines, 2, 2);
  const std::string tt = json_io::dump(json_io::to_json(t));
  CHECK(json_io::dump(json_io::to_json(json_io::trace_from_json(json_io::parse_text(tt)))) == tt);
}

TEST_CASE("json: Res-Lin files") {
  for (const auto& [name, f] : reslin_corpus()) {
    INFO(name);
    const std::string text = json_io::dump(json_io::to_json(f));
    const auto back = json_io::reslin_from_json(json_io::parse_text(text));
    CHECK(json_io::dump(json_io::to_json(back)) == text);
    CHECK(reslin::check_reslin(back.axioms, back.proof).valid);
  }
  const auto e = json_io::lineq_from_json(json_io::parse_text(R"({"coeffs":{"x1":1,"x2":-2},"const":"-9007199254740993"})"));
  CHECK(e.coeffs.at(VarId::x(2)) == -2);
  CHECK(to_string(e.constant) == "-9007199254740993");
  CHECK(json_io::to_json(e).dump() == R"({"coeffs":{"x1":1,"x2":-2},"const":"-9007199254740993"})");

  auto lineq = [](const Json& x) { json_io::lineq_from_json(x); };
  CHECK(parse_error(R"({"coeffs":{"y1":1},"const":0})", lineq) == "ParseError");
  CHECK(parse_error(R"({"coeffs":{"x1":0},"const":0})", lineq) == "ParseError");
  CHECK(parse_error(R"({"coeffs":{"x1":1},"const":"5"})", lineq) == "ParseError");
  CHECK(parse_error(R"({"coeffs":{"x1":1.5},"const":0})", lineq) == "ParseError");

  // Fractional resolution scalars parse, then fail the integrality check.
  const auto f = json_io::reslin_from_json(json_io::parse_text(R"({
    "axioms": [[{"coeffs":{"x1":1},"const":0}], [{"coeffs":{"x1":1},"const":1}]],
    "lines": [
      {"disjunction":[{"coeffs":{"x1":1},"const":0}],"rule":{"type":"axiom","index":0}},
      {"disjunction":[{"coeffs":{"x1":1},"const":1}],"rule":{"type":"axiom","index":1}},
      {"disjunction":[{"coeffs":{},"const":1}],
       "rule":{"type":"resolution","j":0,"k":1,"dj":0,"dk":0,"alpha":"1/2","beta":"-1/2"}}]})"
));
  const auto r = reslin::check_reslin(f.axioms, f.proof);
  CHECK_FALSE(r.valid);
  CHECK(r.error->code == ErrorCode::NonIntegerScalar);
}

TEST_CASE("cli: n = 1 pipeline ends in 2") {
  TempDir tmp;
  REQUIRE(cli_run({"gen-bvp", "--n", "1", "--out", tmp.file("i.json")}).code == 0);
  REQUIRE(cli_run({"oracle-refute", "--n", "1", "--out", tmp.file("p.json"), "--instance",
                   tmp.file("i.json")})
              .code == 0);
  const auto r = cli_run({"check", "--system", "pcsqrt-z", "--proof", tmp.file("p.json")});
  CHECK(r.code == 0);
  const Json j = json_io::parse_text(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["final_constant"] == "2");
  CHECK(j["line_count"] == 5);
}

TEST_CASE("cli: corrupted line exits 1 with RuleMismatch") {
  TempDir tmp;
  auto c = bvp::brute_force_refutation(1);
  c.lines[2].poly = P("x1^2 - x1 - 3");
  spit(tmp.file("p.json"), json_io::dump(json_io::to_json(c)));
  const auto r = cli_run({"check", "--proof", tmp.file("p.json")});
  CHECK(r.code == 1);
  const Json j = json_io::parse_text(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["error"]["code"] == "RuleMismatch");
  CHECK(j["error"]["line"] == 2);
}

TEST_CASE("cli: primes example") {
  const auto r = cli_run({"primes", "--below", "8"});
  CHECK(r.code == 0);
  CHECK(json_io::parse_text(r.out).dump() == R"({"primes":[2,3,5,7],"primorial_bits":8})");
}

TEST_CASE("cli: exit 2 for flag, parse, I/O and mismatch errors") {
  TempDir tmp;
  auto expect2 = [](const Run& r, const std::string& code) {
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    const Json e = json_io::parse_text(r.err);
    CHECK(e["error"]["code"] == code);
    CHECK(e["error"]["message"].is_string());
  };
  expect2(cli_run({}), "FlagError");
  expect2(cli_run({"gen-bvp"}), "FlagError");
  expect2(cli_run({"gen-bvp", "--n", "two"}), "FlagError");
  expect2(cli_run({"check", "--proof", tmp.file("missing.json")}), "IoError");
  spit(tmp.file("bad.json"), "{\"system\": ");
  expect2(cli_run({"check", "--proof", tmp.file("bad.json")}), "ParseError");
  spit(tmp.file("p.json"), json_io::dump(json_io::to_json(bvp::brute_force_refutation(1))));
  expect2(cli_run({"check", "--system", "pc-q", "--proof", tmp.file("p.json")}), "SystemMismatch");
  expect2(cli_run({"check", "--system", "nope", "--proof", tmp.file("p.json")}), "FlagError");
  expect2(cli_run({"oracle-refute", "--n", "9"}), "CostGuard");
  expect2(cli_run({"gen-bvp", "--n", "0"}), "InvalidArgument");
  expect2(cli_run({"trace", "--proof", tmp.file("p.json"), "--n", "1", "--k", "0"}),
          "KPlusOneNotPrime");
  expect2(cli_run({"oracle-refute", "--n", "2", "--instance", tmp.file("p.json")}), "ParseError");
}

TEST_CASE("cli: help documents every flag") {
  const auto top = cli_run({"--help"});
  CHECK(top.code == 0);
  for (const char* cmd : {"check", "gen-bvp", "oracle-refute", "translate", "rationalize", "audit",
                          "trace", "measure", "primes"})
    CHECK(top.out.find(cmd) != std::string::npos);
  const auto h = cli_run({"rationalize", "--help"});
  CHECK(h.code == 0);
  for (const char* flag : {"--proof", "--out", "--state", "--faithful-constants"})
    CHECK(h.out.find(flag) != std::string::npos);
}

TEST_CASE("cli: audit and trace verdicts") {
  TempDir tmp;
  spit(tmp.file("p.json"), json_io::dump(json_io::to_json(bvp::brute_force_refutation(2))));
  auto r = cli_run({"audit", "--proof", tmp.file("p.json"), "--n", "2"});
  CHECK(r.code == 0);
  CHECK(json_io::parse_text(r.out)["M"] == "24");
  r = cli_run({"audit", "--proof", tmp.file("p.json"), "--n", "3"});
  CHECK(r.code == 1);
  CHECK(json_io::parse_text(r.out)["missing"] == Json::array({5, 7}));

  auto half = q_half();
  spit(tmp.file("q.json"), json_io::dump(json_io::to_json(half)));
  r = cli_run({"trace", "--proof", tmp.file("q.json"), "--n", "1", "--k", "1"});
  CHECK(r.code == 2);  // not the BVP instance

  auto c = bvp::brute_force_refutation(2);
  c.lines.back().poly = P("7");
  spit(tmp.file("bad.json"), json_io::dump(json_io::to_json(c)));
  r = cli_run({"audit", "--proof", tmp.file("bad.json"), "--n", "2"});
  CHECK(r.code == 1);
  CHECK(json_io::parse_text(r.out)["valid"] == false);
  r = cli_run({"trace", "--proof", tmp.file("bad.json"), "--n", "2", "--k", "1"});
  CHECK(r.code == 1);
  CHECK(json_io::parse_text(r.out)["passed"] == false);
}

TEST_CASE("cli: translate, rationalize, measure and Res-Lin check") {
  TempDir tmp;
  const auto f = reslin_bvp2();
  Json pi = json_io::to_json(f);
  Json k = pi["axioms"];
  pi.erase("axioms");
  spit(tmp.file("pi.json"), pi.dump());
  spit(tmp.file("k.json"), k.dump());
  auto r = cli_run({"translate", "--reslin", tmp.file("pi.json"), "--axioms", tmp.file("k.json"),
                    "--out", tmp.file("t.json")});
  REQUIRE(r.code == 0);
  CHECK(json_io::parse_text(r.out)["check"]["valid"] == true);
  const std::string t = slurp(tmp.file("t.json"));
  CHECK(json_io::dump(json_io::to_json(json_io::certificate_from_json(json_io::parse_text(t)))) == t);
  r = cli_run({"check", "--system", "extpcsqrt-q", "--proof", tmp.file("t.json")});
  CHECK(r.code == 0);

  r = cli_run({"rationalize", "--proof", tmp.file("t.json"), "--out", tmp.file("z.json"), "--state",
               tmp.file("s.json"), "--faithful-constants"});
  REQUIRE(r.code == 0);
  const Json state = json_io::parse_text(slurp(tmp.file("s.json")));
  for (const char* key : {"M", "T", "deltas", "L", "F_final", "final_constant"})
    CHECK(state.contains(key));
  CHECK(state["F_final"].is_string());
  r = cli_run({"check", "--system", "extpcsqrt-z", "--proof", tmp.file("z.json")});
  CHECK(r.code == 0);

  r = cli_run({"measure", "--proof", tmp.file("z.json")});
  CHECK(r.code == 0);
  CHECK(json_io::parse_text(r.out)["degree"].is_number());

  spit(tmp.file("rl.json"), json_io::dump(json_io::to_json(f)));
  r = cli_run({"check", "--reslin", tmp.file("rl.json")});
  CHECK(r.code == 0);
  CHECK(json_io::parse_text(r.out)["refutation"] == true);

  // A rationalize input with a fractional base axiom is a well-formed but unusable proof.
  AxiomSet ax{{P("1/2*x1"), P("x1 - 1")}, {}};
  ProofBuilder b(ax, SystemKind::PcSqrtQ);
  b.lincomb(b.axiom(0), b.axiom(1), 2, -1);
  spit(tmp.file("frac.json"), json_io::dump(json_io::to_json(std::move(b).finish())));
  r = cli_run({"rationalize", "--proof", tmp.file("frac.json")});
  CHECK(r.code == 1);
  CHECK(json_io::parse_text(r.err)["error"]["code"] == "NonIntegerBaseAxiom");
}

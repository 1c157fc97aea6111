#include "algproof/json_io.hpp"

#include <initializer_list>
#include <set>

#include "algproof/error.hpp"

namespace algproof::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("ParseError", what); }

void expect_keys(const Json& j, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional, const std::string& what) {
  if (!j.is_object()) bad(what + " must be an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    if (!j.contains(k)) bad(what + " is missing \"" + std::string(k) + "\"");
    allowed.insert(k);
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) bad(what + " has unknown key \"" + k + "\"");
}

std::uint64_t get_index(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(what + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::string get_string(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a string");
  return j.get<std::string>();
}

bool get_bool(const Json& j, const std::string& what) {
  if (!j.is_boolean()) bad(what + " must be a boolean");
  return j.get<bool>();
}

const Json& get_array(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  return j;
}

// Integers that stay exact in every JSON consumer are numbers; larger ones
// are decimal strings. Both spellings are accepted on input.
constexpr std::int64_t kSafeInteger = (std::int64_t{1} << 53) - 1;

Json small_integer(const Integer& v) {
  if (v.fits_slong_p() && abs(v) <= kSafeInteger) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(to_string(v));
}

Integer integer_from(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(kSafeInteger)) bad(what + " must be written as a string");
      return Integer(static_cast<unsigned long>(u));
    }
    const auto s = j.get<std::int64_t>();
    if (s > kSafeInteger || s < -kSafeInteger) bad(what + " must be written as a string");
    return Integer(static_cast<long>(s));
  }
  if (j.is_string()) {
    const Integer v = parse_integer(j.get<std::string>());
    if (abs(v) <= kSafeInteger) bad(what + " must be written as a number");
    return v;
  }
  bad(what + " must be an integer");
}

Json small_scalar(const Scalar& s) {
  if (is_integral(s)) return small_integer(s.get_num());
  return Json(to_string(s));
}

Scalar scalar_from(const Json& j, const std::string& what) {
  if (j.is_string()) {
    const Scalar s = parse_scalar(j.get<std::string>());
    if (!is_integral(s)) return s;
  }
  return Scalar(integer_from(j, what));
}

Json optional_line(const std::optional<std::size_t>& l) {
  return l ? Json(static_cast<std::uint64_t>(*l)) : Json(nullptr);
}

Json error_to_json(const CheckError& e) {
  Json j;
  j["line"] = optional_line(e.line);
  j["code"] = std::string(code_name(e.code));
  j["message"] = e.message;
  return j;
}

CheckError check_error_from_json(const Json& j) {
  expect_keys(j, {"line", "code", "message"}, {}, "error");
  CheckError e;
  if (!j["line"].is_null()) e.line = get_index(j["line"], "error line");
  const auto code = parse_code(get_string(j["code"], "error code"));
  if (!code) bad("unknown error code " + j["code"].get<std::string>());
  e.code = *code;
  e.message = get_string(j["message"], "error message");
  return e;
}

Json strings(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::vector<Integer> strings_from(const Json& j, const std::string& what) {
  std::vector<Integer> out;
  for (const auto& x : get_array(j, what)) out.push_back(parse_integer(get_string(x, what)));
  return out;
}

Json numbers(const std::vector<std::uint64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::vector<std::uint64_t> numbers_from(const Json& j, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const auto& x : get_array(j, what)) out.push_back(get_index(x, what));
  return out;
}

VarId var_from(const Json& j, const std::string& what) {
  return VarId::parse(get_string(j, what));
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --------------------------------------------------------------- polynomials

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json mono = Json::object();
    for (const auto& [v, e] : t.mono.factors()) mono[v.name()] = e;
    Json term;
    term["coef"] = to_string(t.coef);
    term["mono"] = std::move(mono);
    terms.push_back(std::move(term));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  expect_keys(j, {"terms"}, {}, "polynomial");
  std::vector<Term> terms;
  std::set<Monomial> seen;
  for (const auto& t : get_array(j["terms"], "terms")) {
    expect_keys(t, {"coef", "mono"}, {}, "term");
    const Scalar c = parse_scalar(get_string(t["coef"], "coef"));
    if (sgn(c) == 0) bad("zero coefficient");
    if (!t["mono"].is_object()) bad("mono must be an object");
    std::vector<Monomial::Factor> f;
    std::set<VarId> vars;
    for (const auto& [name, e] : t["mono"].items()) {
      const VarId v = VarId::parse(name);
      if (!vars.insert(v).second) bad("repeated variable " + name);
      const auto exp = get_index(e, "exponent");
      if (exp == 0) bad("zero exponent on " + name);
      if (exp > UINT32_MAX) bad("exponent too large on " + name);
      f.emplace_back(v, static_cast<std::uint32_t>(exp));
    }
    Monomial m(std::move(f));
    if (!seen.insert(m).second) bad("duplicate monomial " + m.to_string());
    terms.push_back({std::move(m), c});
  }
  return Polynomial::from_terms(std::move(terms));
}

// -------------------------------------------------------------- proof files

Json to_json(const AxiomSet& a) {
  Json base = Json::array();
  for (const auto& p : a.base) base.push_back(to_json(p));
  Json ext = Json::array();
  for (const auto& e : a.extensions) {
    Json x;
    x["var"] = e.var.name();
    x["def"] = to_json(e.definition);
    ext.push_back(std::move(x));
  }
  Json j;
  j["base"] = std::move(base);
  j["extensions"] = std::move(ext);
  return j;
}

AxiomSet axioms_from_json(const Json& j) {
  expect_keys(j, {"base"}, {"extensions"}, "axioms");
  AxiomSet a;
  for (const auto& p : get_array(j["base"], "base")) a.base.push_back(polynomial_from_json(p));
  if (j.contains("extensions"))
    for (const auto& e : get_array(j["extensions"], "extensions")) {
      expect_keys(e, {"var", "def"}, {}, "extension");
      a.extensions.push_back({var_from(e["var"], "var"), polynomial_from_json(e["def"])});
    }
  return a;
}

namespace {

Json rule_to_json(const StepRule& r) {
  Json j;
  std::visit(
      [&](const auto& x) {
        using R = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<R, rule::Axiom>) {
          j["type"] = "axiom";
          j["index"] = x.index;
        } else if constexpr (std::is_same_v<R, rule::LinComb>) {
          j["type"] = "lincomb";
          j["j"] = x.j;
          j["k"] = x.k;
          j["alpha"] = to_string(x.alpha);
          j["beta"] = to_string(x.beta);
        } else if constexpr (std::is_same_v<R, rule::MulVar>) {
          j["type"] = "mulvar";
          j["k"] = x.k;
          j["var"] = x.var.name();
        } else {
          j["type"] = "sqrt";
          j["k"] = x.k;
        }
      },
      r);
  return j;
}

StepRule rule_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) bad("rule must be an object with a type");
  const std::string type = get_string(j["type"], "rule type");
  if (type == "axiom") {
    expect_keys(j, {"type", "index"}, {}, "axiom rule");
    return rule::Axiom{get_index(j["index"], "index")};
  }
  if (type == "lincomb") {
    expect_keys(j, {"type", "j", "k", "alpha", "beta"}, {}, "lincomb rule");
    return rule::LinComb{get_index(j["j"], "j"), get_index(j["k"], "k"),
                         parse_scalar(get_string(j["alpha"], "alpha")),
                         parse_scalar(get_string(j["beta"], "beta"))};
  }
  if (type == "mulvar") {
    expect_keys(j, {"type", "k", "var"}, {}, "mulvar rule");
    return rule::MulVar{get_index(j["k"], "k"), var_from(j["var"], "var")};
  }
  if (type == "sqrt") {
    expect_keys(j, {"type", "k"}, {}, "sqrt rule");
    return rule::Sqrt{get_index(j["k"], "k")};
  }
  bad("unknown rule type " + type);
}

}  // namespace

Json to_json(const Certificate& c) {
  Json lines = Json::array();
  for (const auto& l : c.lines) {
    Json x;
    x["poly"] = to_json(l.poly);
    x["rule"] = rule_to_json(l.rule);
    lines.push_back(std::move(x));
  }
  Json j;
  j["system"] = std::string(system_name(c.kind));
  j["axioms"] = to_json(c.axioms);
  j["lines"] = std::move(lines);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  expect_keys(j, {"system", "axioms", "lines"}, {}, "proof");
  Certificate c;
  const auto kind = parse_system(get_string(j["system"], "system"));
  if (!kind) bad("unknown system " + j["system"].get<std::string>());
  c.kind = *kind;
  c.axioms = axioms_from_json(j["axioms"]);
  for (const auto& l : get_array(j["lines"], "lines")) {
    expect_keys(l, {"poly", "rule"}, {}, "line");
    c.lines.push_back({polynomial_from_json(l["poly"]), rule_from_json(l["rule"])});
  }
  return c;
}

// ----------------------------------------------------------------- reports

Json to_json(const CheckReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["error"] = r.error ? error_to_json(*r.error) : Json(nullptr);
  j["final_constant"] = r.final_constant ? Json(to_string(*r.final_constant)) : Json(nullptr);
  j["total_size"] = r.total_size;
  j["degree"] = r.degree;
  j["line_count"] = r.line_count;
  if (!r.all_errors.empty()) {
    Json all = Json::array();
    for (const auto& e : r.all_errors) all.push_back(error_to_json(e));
    j["all_errors"] = std::move(all);
  }
  return j;
}

CheckReport check_report_from_json(const Json& j) {
  expect_keys(j, {"valid", "error", "final_constant", "total_size", "degree", "line_count"},
              {"all_errors"}, "check report");
  CheckReport r;
  r.valid = get_bool(j["valid"], "valid");
  if (!j["error"].is_null()) r.error = check_error_from_json(j["error"]);
  if (!j["final_constant"].is_null())
    r.final_constant = parse_scalar(get_string(j["final_constant"], "final_constant"));
  r.total_size = get_index(j["total_size"], "total_size");
  if (!j["degree"].is_number_integer()) bad("degree must be an integer");
  r.degree = j["degree"].get<int>();
  r.line_count = get_index(j["line_count"], "line_count");
  if (j.contains("all_errors"))
    for (const auto& e : get_array(j["all_errors"], "all_errors"))
      r.all_errors.push_back(check_error_from_json(e));
  return r;
}

Json to_json(const Measures& m) {
  Json j;
  j["total_size"] = m.total_size;
  j["degree"] = m.degree;
  j["line_count"] = m.line_count;
  return j;
}

// --------------------------------------------------------------------- bvp

Json instance_to_json(const bvp::BvpInstance& inst) {
  Json j;
  j["n"] = inst.n;
  j["axioms"] = to_json(inst.axioms());
  return j;
}

bvp::BvpInstance instance_from_json(const Json& j) {
  expect_keys(j, {"n", "axioms"}, {}, "instance");
  const auto n = get_index(j["n"], "n");
  if (n < 1 || n > 62) bad("n out of range");
  const AxiomSet a = axioms_from_json(j["axioms"]);
  bvp::BvpInstance inst = bvp::gen_bvp(static_cast<std::uint32_t>(n));
  if (!a.extensions.empty() || a.base != inst.axioms().base)
    bad("axioms are not the BVP instance for n = " + std::to_string(n));
  return inst;
}

Json to_json(const bvp::DivisibilityReport& r) {
  Json j;
  j["n"] = r.n;
  j["M"] = to_string(r.M);
  j["primes_checked"] = numbers(r.primes_checked);
  j["missing"] = numbers(r.missing);
  j["bit_length"] = r.bit_length;
  j["passed"] = r.passed;
  return j;
}

bvp::DivisibilityReport divisibility_from_json(const Json& j) {
  expect_keys(j, {"n", "M", "primes_checked", "missing", "bit_length", "passed"}, {},
              "divisibility report");
  bvp::DivisibilityReport r;
  r.n = static_cast<std::uint32_t>(get_index(j["n"], "n"));
  r.M = parse_integer(get_string(j["M"], "M"));
  r.primes_checked = numbers_from(j["primes_checked"], "primes_checked");
  r.missing = numbers_from(j["missing"], "missing");
  r.bit_length = get_index(j["bit_length"], "bit_length");
  r.passed = get_bool(j["passed"], "passed");
  return r;
}

Json to_json(const bvp::TraceReport& r) {
  Json j;
  j["k"] = r.k;
  Json bits = Json::array();
  for (int b : r.bits) bits.push_back(b);
  j["bits"] = std::move(bits);
  j["extension_values"] = strings(r.extension_values);
  j["residues"] = strings(r.residues);
  j["passed"] = r.passed;
  return j;
}

bvp::TraceReport trace_from_json(const Json& j) {
  expect_keys(j, {"k", "bits", "extension_values", "residues", "passed"}, {}, "trace report");
  bvp::TraceReport r;
  r.k = get_index(j["k"], "k");
  for (const auto& b : get_array(j["bits"], "bits")) {
    const auto v = get_index(b, "bit");
    if (v > 1) bad("bit must be 0 or 1");
    r.bits.push_back(static_cast<int>(v));
  }
  r.extension_values = strings_from(j["extension_values"], "extension_values");
  r.residues = strings_from(j["residues"], "residues");
  r.passed = get_bool(j["passed"], "passed");
  return r;
}

// ------------------------------------------------------------------ Res-Lin

Json to_json(const reslin::LinEq& e) {
  Json c = Json::object();
  for (const auto& [v, a] : e.coeffs) c[v.name()] = small_integer(a);
  Json j;
  j["coeffs"] = std::move(c);
  j["const"] = small_integer(e.constant);
  return j;
}

reslin::LinEq lineq_from_json(const Json& j) {
  expect_keys(j, {"coeffs", "const"}, {}, "linear equation");
  if (!j["coeffs"].is_object()) bad("coeffs must be an object");
  std::map<VarId, Integer> c;
  for (const auto& [name, a] : j["coeffs"].items()) {
    const VarId v = VarId::parse(name);
    if (!v.is_x()) bad("linear equations range over x-variables, got " + name);
    Integer val = integer_from(a, "coefficient");
    if (sgn(val) == 0) bad("zero coefficient on " + name);
    c[v] = std::move(val);
  }
  return reslin::LinEq{std::move(c), integer_from(j["const"], "const")};
}

Json to_json(const reslin::Disjunction& d) {
  Json a = Json::array();
  for (const auto& e : d) a.push_back(to_json(e));
  return a;
}

reslin::Disjunction disjunction_from_json(const Json& j) {
  reslin::Disjunction d;
  for (const auto& e : get_array(j, "disjunction")) d.push_back(lineq_from_json(e));
  return d;
}

namespace {

Json rl_rule_to_json(const reslin::RlRule& r) {
  namespace rr = reslin::rule;
  Json j;
  std::visit(
      [&](const auto& x) {
        using R = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<R, rr::Axiom>) {
          j["type"] = "axiom";
          j["index"] = x.index;
        } else if constexpr (std::is_same_v<R, rr::BooleanAxiom>) {
          j["type"] = "bool-axiom";
          j["var"] = x.var.name();
        } else if constexpr (std::is_same_v<R, rr::Resolution>) {
          j["type"] = "resolution";
          j["j"] = x.j;
          j["k"] = x.k;
          j["dj"] = x.dj;
          j["dk"] = x.dk;
          j["alpha"] = small_scalar(x.alpha);
          j["beta"] = small_scalar(x.beta);
        } else if constexpr (std::is_same_v<R, rr::Weakening>) {
          j["type"] = "weakening";
          j["j"] = x.j;
          j["eq"] = json_io::to_json(x.eq);
        } else if constexpr (std::is_same_v<R, rr::Simplification>) {
          j["type"] = "simplification";
          j["j"] = x.j;
          j["d"] = x.d;
        } else {
          j["type"] = "contraction";
          j["j"] = x.j;
          j["d1"] = x.d1;
          j["d2"] = x.d2;
        }
      },
      r);
  return j;
}

reslin::RlRule rl_rule_from_json(const Json& j) {
  namespace rr = reslin::rule;
  if (!j.is_object() || !j.contains("type")) bad("rule must be an object with a type");
  const std::string type = get_string(j["type"], "rule type");
  if (type == "axiom") {
    expect_keys(j, {"type", "index"}, {}, "axiom rule");
    return rr::Axiom{get_index(j["index"], "index")};
  }
  if (type == "bool-axiom") {
    expect_keys(j, {"type", "var"}, {}, "bool-axiom rule");
    return rr::BooleanAxiom{var_from(j["var"], "var")};
  }
  if (type == "resolution") {
    expect_keys(j, {"type", "j", "k", "dj", "dk", "alpha", "beta"}, {}, "resolution rule");
    return rr::Resolution{get_index(j["j"], "j"),   get_index(j["k"], "k"),
                          get_index(j["dj"], "dj"), get_index(j["dk"], "dk"),
                          scalar_from(j["alpha"], "alpha"), scalar_from(j["beta"], "beta")};
  }
  if (type == "weakening") {
    expect_keys(j, {"type", "j", "eq"}, {}, "weakening rule");
    return rr::Weakening{get_index(j["j"], "j"), lineq_from_json(j["eq"])};
  }
  if (type == "simplification") {
    expect_keys(j, {"type", "j", "d"}, {}, "simplification rule");
    return rr::Simplification{get_index(j["j"], "j"), get_index(j["d"], "d")};
  }
  if (type == "contraction") {
    expect_keys(j, {"type", "j", "d1", "d2"}, {}, "contraction rule");
    return rr::Contraction{get_index(j["j"], "j"), get_index(j["d1"], "d1"),
                           get_index(j["d2"], "d2")};
  }
  bad("unknown Res-Lin rule type " + type);
}

}  // namespace

Json to_json(const reslin::ReslinFile& f) {
  Json axioms = Json::array();
  for (const auto& d : f.axioms) axioms.push_back(to_json(d));
  Json lines = Json::array();
  for (const auto& l : f.proof.lines) {
    Json x;
    x["disjunction"] = to_json(l.disjunction);
    x["rule"] = rl_rule_to_json(l.rule);
    lines.push_back(std::move(x));
  }
  Json j;
  j["axioms"] = std::move(axioms);
  j["lines"] = std::move(lines);
  return j;
}

reslin::ReslinFile reslin_from_json(const Json& j) {
  expect_keys(j, {}, {"axioms", "lines"}, "Res-Lin file");
  reslin::ReslinFile f;
  if (j.contains("axioms"))
    for (const auto& d : get_array(j["axioms"], "axioms")) f.axioms.push_back(disjunction_from_json(d));
  if (j.contains("lines"))
    for (const auto& l : get_array(j["lines"], "lines")) {
      expect_keys(l, {"disjunction", "rule"}, {}, "Res-Lin line");
      f.proof.lines.push_back({disjunction_from_json(l["disjunction"]), rl_rule_from_json(l["rule"])});
    }
  return f;
}

Json to_json(const reslin::RlReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["error"] = r.error ? error_to_json(*r.error) : Json(nullptr);
  j["refutation"] = r.refutation;
  j["size_unary"] = to_string(r.size_unary);
  j["size_binary"] = r.size_binary;
  j["line_count"] = r.line_count;
  return j;
}

Json to_json(const xlate::RationalizeState& s) {
  Json j;
  j["M"] = strings(s.M);
  j["T"] = strings(s.T);
  Json alpha = Json::array();
  for (const auto& row : s.alpha) {
    Json r = Json::array();
    for (auto a : row) r.push_back(a);
    alpha.push_back(std::move(r));
  }
  j["alpha"] = std::move(alpha);
  j["deltas"] = strings(s.deltas);
  j["L"] = strings(s.L);
  j["F_final"] = to_string(s.F);
  j["final_constant"] = to_string(s.final_constant);
  j["input_final_constant"] = to_string(s.input_final);
  if (s.F_exponents) j["F_exponents"] = numbers(*s.F_exponents);
  return j;
}

}  // namespace algproof::json_io

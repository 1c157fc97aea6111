#pragma once

// JSON encodings of every artifact. Parsers are strict: they reject unknown
// keys, non-canonical scalars, zero coefficients, zero exponents and
// duplicate monomials, throwing Error("ParseError"). Serializers are
// deterministic, so serialize(parse(text)) == text for serializer output.

#include <json.hpp>
#include <string>

#include "algproof/bvp.hpp"
#include "algproof/checker.hpp"
#include "algproof/reslin.hpp"
#include "algproof/xlate.hpp"

namespace algproof::json_io {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text);
// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const AxiomSet& a);
AxiomSet axioms_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);

Json to_json(const Measures& m);

// {"n": k, "axioms": AxiomSet}
Json instance_to_json(const bvp::BvpInstance& inst);
bvp::BvpInstance instance_from_json(const Json& j);

Json to_json(const bvp::DivisibilityReport& r);
bvp::DivisibilityReport divisibility_from_json(const Json& j);

Json to_json(const bvp::TraceReport& r);
bvp::TraceReport trace_from_json(const Json& j);

Json to_json(const reslin::LinEq& e);
reslin::LinEq lineq_from_json(const Json& j);
Json to_json(const reslin::Disjunction& d);
reslin::Disjunction disjunction_from_json(const Json& j);
Json to_json(const reslin::ReslinFile& f);
// Accepts {"axioms": [...], "lines": [...]}; either key may be absent.
reslin::ReslinFile reslin_from_json(const Json& j);
Json to_json(const reslin::RlReport& r);

Json to_json(const xlate::RationalizeState& s);

}  // namespace algproof::json_io

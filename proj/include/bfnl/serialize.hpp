#pragma once

#include <json.hpp>

#include "bfnl/checker.hpp"
#include "bfnl/decider.hpp"

namespace bfnl {

using Json = nlohmann::json;

// Algebra wire format: tables as nested arrays with null for undefined
// entries, order as a 0/1 matrix, constants as element indices.
Json algebra_to_json(const PartialAlgebra& a);
PartialAlgebra algebra_from_json(const Json& j);  // throws std::runtime_error

// Frame wire format: {"points": k, "unit": [indices], "rel": [[x,y,z], ...]}.
Json frame_to_json(const ResiduatedFrame& f);
ResiduatedFrame frame_from_json(const Json& j);

Json filter_to_json(FilterSet s);
Json family_to_json(const FilterFamily& family);

Json proof_to_json(const ProofNode& n);

Json checker_verdict_to_json(const CheckerVerdict& v);
Json certificate_to_json(const AcceptanceCertificate& c);

Json verdict_to_json(const std::vector<Sequent>& hypotheses, const Sequent& goal,
                     const Verdict& v);

}  // namespace bfnl

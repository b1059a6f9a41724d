#pragma once

#include <json.hpp>
#include <stdexcept>

#include "bsv/astype.hpp"
#include "bsv/brauer.hpp"
#include "bsv/bundle.hpp"
#include "bsv/cohomology.hpp"
#include "bsv/hilbert.hpp"

namespace bsv::io {

using nlohmann::json;

// Malformed/ill-typed input; distinct from domain failures.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Classes are accepted as {"global": ...}, {"abstract": ...},
// {"quaternion": {"a": "p/q", "b": "p/q"}} or {"invariants": [...]} and
// always emitted in one of the two canonical forms.
BrauerClass class_from_json(const json& j);
json class_to_json(const BrauerClass& c);

json astype_to_json(const ASType& t);

CtxPtr context_from_json(const json& j);

BundleExpr bundle_from_json(const json& j, CtxPtr ctx);
json bundle_to_json(const BundleExpr& e);

SplitBundle split_from_json(const json& j);
json split_to_json(const SplitBundle& s);

std::vector<CohAtom> atoms_from_json(const json& j);

json table_to_json(const CohomologyTable& t);
json verdict_to_json(const Verdict& v, bool grass);
json report_to_json(const ValidationReport& r);
json error_to_json(const DomainError& e);
json bigint_to_json(const BigInt& v);

}  // namespace bsv::io

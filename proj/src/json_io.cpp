#include "bsv/json_io.hpp"

#include <limits>

namespace bsv::io {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

long long need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    return v.get<long long>();
}

long long opt_int(const json& j, const char* key, long long def) {
    if (!j.is_object() || !j.contains(key)) return def;
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    return v.get<long long>();
}

const json& need_array(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
    return v;
}

std::vector<long long> int_vector(const json& v, const char* what) {
    if (!v.is_array()) throw SchemaError(std::string(what) + " must be an array of integers");
    std::vector<long long> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw SchemaError(std::string(what) + " must contain integers");
        out.push_back(x.get<long long>());
    }
    return out;
}

Place place_from_json(const json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "inf") return Place::real();
        try {
            size_t used = 0;
            long long p = std::stoll(s, &used);
            if (used != s.size()) throw SchemaError("bad place '" + s + "'");
            return Place::finite(p);
        } catch (const std::invalid_argument&) {
            throw SchemaError("bad place '" + s + "'");
        } catch (const std::out_of_range&) {
            throw SchemaError("bad place '" + s + "'");
        }
    }
    if (v.is_number_integer()) return Place::finite(v.get<long long>());
    throw SchemaError("place must be a prime or \"inf\"");
}

Rational rational_from_json(const json& v, const char* key) {
    if (v.is_number_integer()) return Rational(v.get<long long>(), 1);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw SchemaError(std::string("field '") + key + "' must be an integer or a \"p/q\" string");
}

std::vector<std::pair<Place, TorsionFraction>> invariants_from_json(const json& arr) {
    std::vector<std::pair<Place, TorsionFraction>> entries;
    for (const auto& e : arr) {
        Place pl = place_from_json(need(e, "place"));
        long long num = need_int(e, "num"), den = need_int(e, "den");
        if (den <= 0) throw SchemaError("invariant denominator must be positive");
        if (num < 0) throw SchemaError("invariant numerator must be nonnegative");
        entries.emplace_back(pl, TorsionFraction(num, den));
    }
    return entries;
}

}  // namespace

BrauerClass class_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("class must be an object");
    if (j.contains("global"))
        return BrauerClass(class_from_invariants(invariants_from_json(need_array(j.at("global"), "invariants"))));
    if (j.contains("invariants"))
        return BrauerClass(class_from_invariants(invariants_from_json(need_array(j, "invariants"))));
    if (j.contains("quaternion")) {
        const json& q = j.at("quaternion");
        return BrauerClass(quaternion_class(rational_from_json(need(q, "a"), "a"),
                                            rational_from_json(need(q, "b"), "b")));
    }
    if (j.contains("abstract")) {
        const json& a = j.at("abstract");
        return make_abstract_class(need_int(a, "period"),
                                   int_vector(need_array(a, "index_sequence"), "index_sequence"));
    }
    throw SchemaError("class must have one of: global, abstract, quaternion, invariants");
}

json class_to_json(const BrauerClass& c) {
    if (c.is_abstract()) {
        const auto& a = c.abstract();
        return json{{"abstract", {{"period", a.period}, {"index_sequence", a.index_sequence}}}};
    }
    json inv = json::array();
    for (const auto& [place, frac] : c.global().invariants)
        inv.push_back({{"place", place.infinite ? "inf" : std::to_string(place.prime)},
                       {"num", frac.num},
                       {"den", frac.den}});
    return json{{"global", {{"invariants", inv}}}};
}

json astype_to_json(const ASType& t) {
    return json{{"period", t.period()}, {"as_type", t.entries}};
}

CtxPtr context_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("context must be an object");
    BrauerClass cls = class_from_json(need(j, "class"));
    long long degree = need_int(j, "algebra_degree");
    long long d = opt_int(j, "d", 1);
    return make_context(std::move(cls), degree, d);
}

BundleExpr bundle_from_json(const json& j, CtxPtr ctx) {
    std::vector<std::pair<AsAtom, long long>> raw;
    for (const auto& e : need_array(j, "atoms")) {
        long long mult = opt_int(e, "mult", 1);
        raw.emplace_back(AsAtom{need_int(e, "a"), need_int(e, "j")}, mult);
    }
    return krull_schmidt_normalize(std::move(ctx), raw);
}

json bundle_to_json(const BundleExpr& e) {
    json atoms = json::array();
    for (const auto& [atom, mult] : e.atoms)
        atoms.push_back({{"a", atom.a}, {"j", atom.j}, {"mult", mult}});
    return json{{"atoms", atoms}};
}

SplitBundle split_from_json(const json& j) {
    SplitBundle s;
    for (const auto& e : need_array(j, "twists")) {
        long long t = need_int(e, "t");
        long long mult = opt_int(e, "mult", 1);
        if (mult < 1) throw SchemaError("twist multiplicity must be >= 1");
        s.twists[t] += mult;
    }
    return s;
}

json split_to_json(const SplitBundle& s) {
    json twists = json::array();
    for (const auto& [t, mult] : s.twists) twists.push_back({{"t", t}, {"mult", mult}});
    return json{{"twists", twists}};
}

std::vector<CohAtom> atoms_from_json(const json& j) {
    std::vector<CohAtom> out;
    for (const auto& e : need_array(j, "atoms")) {
        if (!e.is_object() || e.size() != 1)
            throw SchemaError("each atom must be an object with a single kind key");
        long long mult;
        if (e.contains("line")) {
            const json& v = e.at("line");
            mult = opt_int(v, "mult", 1);
            out.push_back(CohAtom::line(need_int(v, "t"), mult));
        } else if (e.contains("cotangent")) {
            const json& v = e.at("cotangent");
            mult = opt_int(v, "mult", 1);
            out.push_back(CohAtom::cotangent(need_int(v, "p"), need_int(v, "t"), mult));
        } else if (e.contains("schur")) {
            const json& v = e.at("schur");
            mult = opt_int(v, "mult", 1);
            out.push_back(CohAtom::schur(int_vector(need(v, "alpha"), "alpha"),
                                         int_vector(need(v, "beta"), "beta"),
                                         opt_int(v, "t", 0), mult));
        } else if (e.contains("as_atom")) {
            const json& v = e.at("as_atom");
            mult = opt_int(v, "mult", 1);
            out.push_back(CohAtom::as_atom(need_int(v, "a"), need_int(v, "j"), mult));
        } else {
            throw SchemaError("unknown atom kind");
        }
        if (mult < 1) throw SchemaError("atom multiplicity must be >= 1");
    }
    return out;
}

json bigint_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

json table_to_json(const CohomologyTable& t) {
    json rows = json::array();
    for (const auto& [deg, dim] : t)
        if (dim != 0) rows.push_back({{"i", deg}, {"dim", bigint_to_json(dim)}});
    return json{{"table", rows}};
}

json verdict_to_json(const Verdict& v, bool grass) {
    if (v.split) {
        json out{{"verdict", "split"}};
        if (v.decomposition) out["decomposition"] = bundle_to_json(*v.decomposition);
        return out;
    }
    const NotSplitWitness& w = *v.witness;
    json wit;
    if (grass) {
        wit = json{{"r", w.degree}, {"lambda", w.lambda}, {"t", w.t}, {"dim", bigint_to_json(w.dimension)}};
    } else {
        wit = json{{"i", w.degree}, {"a", w.a}, {"j", w.j}, {"dim", bigint_to_json(w.dimension)}};
    }
    return json{{"verdict", "not_split"}, {"witness", wit}};
}

json report_to_json(const ValidationReport& r) {
    json vs = json::array();
    for (const auto& v : r.violations) {
        json e{{"constraint", v.constraint}, {"detail", v.detail}};
        if (v.j >= 0) e["j"] = v.j;
        if (v.k >= 0) e["k"] = v.k;
        vs.push_back(e);
    }
    return json{{"valid", r.ok()}, {"violations", vs}};
}

json error_to_json(const DomainError& e) {
    json data = json::object();
    for (const auto& [k, v] : e.data()) data[k] = v;
    return json{{"error", {{"code", e.code()}, {"message", e.what()}, {"data", data}}}};
}

}  // namespace bsv::io

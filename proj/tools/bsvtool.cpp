// Command-line front end: every subcommand reads a JSON payload from a file
// (or stdin) and writes one JSON document to stdout.  Exit codes: 0 success,
// 1 malformed input, 2 domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bsv/json_io.hpp"

using bsv::io::json;
using bsv::io::SchemaError;

namespace {

struct Args {
    std::string command;
    std::string subcommand;
    std::string payload_path;  // empty or "-" means stdin
    std::optional<std::string> context_path;
    long long d = 1;
};

[[noreturn]] void usage_error(const std::string& msg) {
    json err{{"error", {{"code", "bad_input"}, {"message", msg}}}};
    std::cout << err.dump() << "\n";
    std::exit(1);
}

Args parse_args(int argc, char** argv) {
    std::vector<std::string> pos;
    Args args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--context") {
            if (++i >= argc) usage_error("--context needs a file argument");
            args.context_path = argv[i];
        } else if (a == "--d") {
            if (++i >= argc) usage_error("--d needs an integer argument");
            try {
                args.d = std::stoll(argv[i]);
            } catch (...) {
                usage_error("--d needs an integer argument");
            }
        } else {
            pos.push_back(a);
        }
    }
    if (pos.empty()) usage_error("no command given");
    args.command = pos[0];
    size_t next = 1;
    if (args.command == "class" || args.command == "bundle" || args.command == "criterion") {
        if (pos.size() < 2) usage_error("command '" + args.command + "' needs a subcommand");
        args.subcommand = pos[1];
        next = 2;
    }
    if (pos.size() > next + 1) usage_error("too many arguments");
    if (pos.size() == next + 1) args.payload_path = pos[next];
    return args;
}

json read_payload(const Args& args) {
    std::string text;
    if (args.payload_path.empty() || args.payload_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(args.payload_path);
        if (!f) usage_error("cannot open payload file '" + args.payload_path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

bsv::CtxPtr read_context(const Args& args) {
    if (!args.context_path) usage_error("this command needs --context <file>");
    std::ifstream f(*args.context_path);
    if (!f) usage_error("cannot open context file '" + *args.context_path + "'");
    json j = json::parse(std::string(std::istreambuf_iterator<char>(f), {}));
    return bsv::io::context_from_json(j);
}

int emit(const json& out, int code = 0) {
    std::cout << out.dump() << "\n";
    return code;
}

int run_class(const Args& args, const json& payload) {
    using namespace bsv;
    const std::string& sub = args.subcommand;
    if (sub == "build") return emit(io::class_to_json(io::class_from_json(payload)));
    if (sub == "tensor") {
        BrauerClass lhs = io::class_from_json(payload.at("lhs"));
        BrauerClass rhs = io::class_from_json(payload.at("rhs"));
        return emit(io::class_to_json(tensor(lhs, rhs)));
    }
    if (sub == "opposite") return emit(io::class_to_json(opposite(io::class_from_json(payload))));
    if (sub == "power") {
        BrauerClass c = io::class_from_json(payload.at("class"));
        if (!payload.contains("r") || !payload.at("r").is_number_integer())
            throw SchemaError("field 'r' must be an integer");
        return emit(io::class_to_json(power(c, payload.at("r").get<long long>())));
    }
    if (sub == "period") return emit(json{{"period", period(io::class_from_json(payload))}});
    if (sub == "index") {
        BrauerClass c = io::class_from_json(payload.at("class"));
        long long r = 1;
        if (payload.contains("r")) {
            if (!payload.at("r").is_number_integer()) throw SchemaError("field 'r' must be an integer");
            r = payload.at("r").get<long long>();
        }
        return emit(json{{"index", index(c, r)}});
    }
    usage_error("unknown class subcommand '" + sub + "'");
}

int run_bundle(const Args& args, const json& payload) {
    using namespace bsv;
    CtxPtr ctx = read_context(args);
    const std::string& sub = args.subcommand;
    if (sub == "normalize") return emit(io::bundle_to_json(io::bundle_from_json(payload, ctx)));
    if (sub == "dual") return emit(io::bundle_to_json(dual(io::bundle_from_json(payload, ctx))));
    if (sub == "rank") return emit(json{{"rank", rank(io::bundle_from_json(payload, ctx))}});
    if (sub == "tensor") {
        BundleExpr lhs = io::bundle_from_json(payload.at("lhs"), ctx);
        BundleExpr rhs = io::bundle_from_json(payload.at("rhs"), ctx);
        return emit(io::bundle_to_json(tensor_bundles(lhs, rhs)));
    }
    if (sub == "pullback") return emit(io::split_to_json(pullback(io::bundle_from_json(payload, ctx))));
    if (sub == "descend") {
        auto r = descend(io::split_from_json(payload), ctx);
        if (std::holds_alternative<BundleExpr>(r))
            return emit(io::bundle_to_json(std::get<BundleExpr>(r)));
        const auto& f = std::get<DescentFailure>(r);
        json err{{"error",
                  {{"code", "descent_failure"},
                   {"message", "twist multiplicity is not a multiple of the atom rank"},
                   {"data", {{"t", f.twist}, {"mult", f.mult}, {"required", f.required}}}}}};
        return emit(err, 2);
    }
    usage_error("unknown bundle subcommand '" + sub + "'");
}

int run(const Args& args, const json& payload) {
    using namespace bsv;
    if (args.command == "class") return run_class(args, payload);
    if (args.command == "bundle") return run_bundle(args, payload);
    if (args.command == "astype") {
        ASType t = compute_as_type(io::class_from_json(payload), args.d);
        return emit(io::astype_to_json(t));
    }
    if (args.command == "validate") {
        if (!payload.contains("period") || !payload.at("period").is_number_integer())
            throw SchemaError("field 'period' must be an integer");
        if (!payload.contains("index_sequence") || !payload.at("index_sequence").is_array())
            throw SchemaError("field 'index_sequence' must be an array");
        std::vector<long long> seq;
        for (const auto& x : payload.at("index_sequence")) {
            if (!x.is_number_integer()) throw SchemaError("index_sequence must contain integers");
            seq.push_back(x.get<long long>());
        }
        ValidationReport rep = validate_index_sequence(payload.at("period").get<long long>(), seq);
        return emit(io::report_to_json(rep), rep.ok() ? 0 : 2);
    }
    if (args.command == "cohomology") {
        CtxPtr ctx = read_context(args);
        return emit(io::table_to_json(cohomology_of_expr(io::atoms_from_json(payload), *ctx)));
    }
    if (args.command == "criterion") {
        CtxPtr ctx = read_context(args);
        std::vector<CohAtom> atoms = io::atoms_from_json(payload);
        if (args.subcommand == "bs") return emit(io::verdict_to_json(criterion_bs(atoms, ctx), false));
        if (args.subcommand == "grass")
            return emit(io::verdict_to_json(criterion_grass(atoms, ctx), true));
        usage_error("unknown criterion subcommand '" + args.subcommand + "'");
    }
    usage_error("unknown command '" + args.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    Args args = parse_args(argc, argv);
    try {
        json payload = read_payload(args);
        return run(args, payload);
    } catch (const bsv::DomainError& e) {
        return emit(bsv::io::error_to_json(e), 2);
    } catch (const SchemaError& e) {
        return emit(json{{"error", {{"code", "bad_input"}, {"message", e.what()}}}}, 1);
    } catch (const json::exception& e) {
        return emit(json{{"error", {{"code", "bad_input"}, {"message", e.what()}}}}, 1);
    } catch (const std::exception& e) {
        return emit(json{{"error", {{"code", "internal_error"}, {"message", e.what()}}}}, 1);
    }
}

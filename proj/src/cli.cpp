#include "hsalg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hsalg/json_io.hpp"

namespace hsalg {

namespace {

struct Config {
    std::string command;
    std::string pair, target, eta, triple, system;
    std::string kind, sign, out;
    std::string format = "json";
};

struct Inputs {
    std::optional<Document> pair, target, eta, triple, system;
};

// Inline JSON, a pair id, or a path.
Document load_arg(const std::string& flag, const std::string& value, bool allow_id) {
    if (!value.empty() && (value.front() == '{' || value.front() == '['))
        return parse_document(flag, value);
    if (allow_id && !std::filesystem::exists(value) && value.find('(') != std::string::npos) {
        Document doc;
        doc.name = flag;
        doc.root = value;
        doc.lines[""] = 1;
        return doc;
    }
    return load_document(value);
}

class Runner {
public:
    Runner(const Config& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

    int dispatch() {
        load_inputs();
        const std::string& c = cfg_.command;
        if (c == "list-spaces") return list_spaces();
        if (c == "build-pair") return build_pair_cmd(false);
        if (c == "verify-pair") return build_pair_cmd(true);
        if (c == "verify-eta") return verify_eta_cmd();
        if (c == "decompose") return decompose_cmd();
        if (c == "invariants") return invariants_cmd();
        if (c == "verify-triple") return verify_triple_cmd();
        if (c == "emit-system") return emit_system_cmd();
        if (c == "solve") return solve_cmd();
        throw ParseError("unknown command '" + c + "'");
    }

private:
    bool text() const { return cfg_.format == "text"; }

    void load_inputs() {
        if (!cfg_.pair.empty()) in_.pair = load_arg("--pair", cfg_.pair, true);
        if (!cfg_.target.empty()) in_.target = load_arg("--target", cfg_.target, false);
        if (!cfg_.eta.empty()) in_.eta = load_arg("--eta", cfg_.eta, false);
        if (!cfg_.triple.empty()) in_.triple = load_arg("--triple", cfg_.triple, false);
        if (!cfg_.system.empty()) in_.system = load_arg("--system", cfg_.system, false);
    }

    std::optional<Kind> kind() const {
        if (cfg_.kind.empty()) return std::nullopt;
        return parse_kind(cfg_.kind);
    }

    Kind require_kind() const {
        auto k = kind();
        if (!k) throw ParseError("--kind higgs|cohiggs is required for " + cfg_.command);
        return *k;
    }

    std::optional<PairSpec> pair_spec() const {
        if (!in_.pair) return std::nullopt;
        return read_pair_spec(Cursor(*in_.pair));
    }

    std::shared_ptr<const HermitianPair> build(const PairSpec& spec) const {
        return std::make_shared<const HermitianPair>(build_pair(spec));
    }

    std::shared_ptr<const BundleContext> context() const {
        if (!in_.eta) throw ParseError("--eta is required for " + cfg_.command);
        std::optional<TargetAlgebra> target;
        if (in_.target) target = read_target(Cursor(*in_.target));
        EtaInput eta = read_eta(Cursor(*in_.eta), pair_spec(), target);
        auto pair = build(eta.pair);
        auto h = std::make_shared<const TargetAlgebra>(std::move(eta.target));
        try {
            return std::make_shared<const BundleContext>(pair, h, std::move(eta.images));
        } catch (const ShapeError& e) {
            Cursor(*in_.eta).fail(e.what());
        }
    }

    void emit(const json& j, const std::string& text_form) {
        if (text()) out_ << text_form;
        else out_ << dump(j);
    }

    static std::string report_text(const Report& r) {
        std::ostringstream os;
        os << r.subject << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : r.checks) {
            os << "  " << (c.advisory ? "note" : c.passed ? "ok  " : "FAIL") << " " << c.name;
            if (c.advisory) os << (c.passed ? " (ok)" : " (flagged)");
            if (!c.detail.empty()) os << ": " << c.detail;
            os << "\n";
        }
        return os.str();
    }

    // Writes the report to err and returns false when the η precondition fails.
    bool eta_ok(const BundleContext& ctx) {
        Report r = verify_eta(ctx);
        if (r.passed()) return true;
        err_ << report_text(r);
        return false;
    }

    int list_spaces() {
        json arr = json::array();
        std::ostringstream os;
        for (const auto& f : catalog_families()) {
            arr.push_back({{"family", family_name(f.family)},
                           {"quotient", f.quotient},
                           {"constraints", f.constraints},
                           {"complex_dim", f.complex_dim_formula}});
            os << std::left << std::setw(14) << family_name(f.family) << std::setw(36) << f.quotient
               << std::setw(18) << f.constraints << "dim_C = " << f.complex_dim_formula << "\n";
        }
        emit(arr, os.str());
        return kExitOk;
    }

    int build_pair_cmd(bool verify) {
        auto spec = pair_spec();
        if (!spec) throw ParseError("--pair is required for " + cfg_.command);
        std::shared_ptr<const HermitianPair> pair;
        try {
            pair = build(*spec);
        } catch (const StructureError& e) {
            err_ << spec->id() << ": " << e.what() << "\n";
            return kExitCheckFailed;
        }
        if (!verify) {
            std::ostringstream os;
            os << pair->spec.id() << ": dim g = " << pair->g.dim() << ", dim k = " << pair->k.dim()
               << ", dim p = " << pair->p.dim() << ", lambda = " << to_string(pair->lambda)
               << ", complex dim = " << pair->complex_dim() << "\n";
            emit(to_json(*pair), os.str());
            return kExitOk;
        }
        Report r = verify_pair(*pair);
        json j = to_json(r);
        j["complex_dim"] = pair->complex_dim();
        emit(j, report_text(r) + "complex dim " + std::to_string(pair->complex_dim()) + "\n");
        return r.passed() ? kExitOk : kExitCheckFailed;
    }

    int verify_eta_cmd() {
        auto ctx = context();
        Report r = verify_eta(*ctx);
        emit(to_json(r), report_text(r));
        return r.passed() ? kExitOk : kExitCheckFailed;
    }

    int decompose_cmd() {
        auto ctx = context();
        if (!eta_ok(*ctx)) return kExitCheckFailed;
        ZkDecomposition d = decompose_target(*ctx);
        std::ostringstream os;
        for (const auto& [w, s] : d.components) os << "weight " << w << ": dim " << s.dim() << "\n";
        emit(to_json(d), os.str());
        return kExitOk;
    }

    int invariants_cmd() {
        auto ctx = context();
        if (!eta_ok(*ctx)) return kExitCheckFailed;
        Sign sign = Sign::Plus;
        if (!cfg_.sign.empty()) {
            Document d;
            d.name = "--sign";
            d.root = cfg_.sign;
            sign = read_sign(Cursor(d));
        }
        InvariantSpace s = invariant_space(*ctx, sign);
        bool contained = verify_weight_containment(s, decompose_target(*ctx), ctx->pair());
        std::ostringstream os;
        os << "(h ⊗ p" << sign_symbol(sign) << ")^K: dim " << s.dim() << " inside " << s.dim_h << "x"
           << s.dim_p << " tensors; weight containment " << (contained ? "ok" : "FAILED") << "\n";
        emit(to_json(s), os.str());
        if (!contained) {
            err_ << "weight containment failed\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    }

    int verify_triple_cmd() {
        if (!in_.triple) throw ParseError("--triple is required for verify-triple");
        auto ctx = context();
        if (!eta_ok(*ctx)) return kExitCheckFailed;
        ModuliTriple t = read_triple(Cursor(*in_.triple), ctx, kind());
        Report r = verify_triple(t);
        emit(to_json(r), report_text(r));
        return r.passed() ? kExitOk : kExitCheckFailed;
    }

    static std::string system_text(const QuadraticSystem& s) {
        std::ostringstream os;
        os << kind_name(s.kind) << " system in";
        for (const auto& v : s.variables) os << " " << v;
        if (s.variables.empty()) os << " no variables";
        os << ", " << s.equations.size() << " equation(s)\n";
        for (const auto& eq : s.equations) {
            os << "  ";
            bool first = true;
            for (const auto& [key, c] : eq.terms) {
                os << (first ? "" : " + ") << "(" << to_string(c) << ")*" << s.variables[key.first] << "*"
                   << s.variables[key.second];
                first = false;
            }
            os << " = 0    [" << eq.provenance << "]\n";
        }
        return os.str();
    }

    int emit_system_cmd() {
        Kind k = require_kind();
        auto ctx = context();
        if (!eta_ok(*ctx)) return kExitCheckFailed;
        QuadraticSystem s = emit_system(*ctx, k);
        emit(to_json(s), system_text(s));
        return kExitOk;
    }

    int solve_cmd() {
        QuadraticSystem s;
        if (in_.system) {
            s = read_system(Cursor(*in_.system));
        } else {
            Kind k = require_kind();
            auto ctx = context();
            if (!eta_ok(*ctx)) return kExitCheckFailed;
            s = emit_system(*ctx, k);
        }
        try {
            SolutionSet sol = solve_small(s);
            emit(to_json(sol), sol.describe() + "\n");
            return kExitOk;
        } catch (const Unsupported& e) {
            err_ << e.what() << "\n";
            emit(to_json(s), system_text(s));
            return kExitCheckFailed;
        }
    }

    const Config& cfg_;
    std::ostream& out_;
    std::ostream& err_;
    Inputs in_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact Lie-algebraic data of homogeneous bundles on Hermitian symmetric spaces",
                 "hsalg"};
    app.add_option("command", cfg.command, "Command to run")
        ->required()
        ->check(CLI::IsMember({"list-spaces", "build-pair", "verify-pair", "verify-eta", "decompose",
                               "invariants", "verify-triple", "emit-system", "solve"}));
    app.add_option("--pair", cfg.pair, "Pair spec: inline JSON, id such as grassmannian(1,2), or file");
    app.add_option("--target", cfg.target, "Target algebra: inline JSON or file");
    app.add_option("--eta", cfg.eta, "Eta spec file");
    app.add_option("--triple", cfg.triple, "Triple file (kind, beta, phi)");
    app.add_option("--system", cfg.system, "Emitted system file, for solve");
    app.add_option("--kind", cfg.kind, "higgs or cohiggs")->check(CLI::IsMember({"higgs", "cohiggs"}));
    app.add_option("--sign", cfg.sign, "+ or -")->check(CLI::IsMember({"+", "-", "plus", "minus"}));
    app.add_option("--out", cfg.out, "Write the artifact here instead of stdout");
    app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    std::ostringstream buffer;
    int code;
    try {
        Runner runner(cfg, buffer, err);
        code = runner.dispatch();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (cfg.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << cfg.out << "\n";
            return kExitInputError;
        }
        f << buffer.str();
    }
    return code;
}

} // namespace hsalg

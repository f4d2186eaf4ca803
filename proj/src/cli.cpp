#include "cimp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cimp/context.hpp"
#include "cimp/entail.hpp"
#include "cimp/error.hpp"
#include "cimp/rules.hpp"

namespace cimp {

namespace {

struct CliConfig {
    std::string rules_path;
    std::string cxt_path;
    std::string out_path;
    std::string dump_dense_path;
    std::string min_support = "0";
    std::string min_confidence = "0";
    std::size_t max_materialize = kDefaultMaterializeCap;
    std::size_t max_iterations = 1'000'000;
    bool trace = false;
    bool decimal = false;
    bool dense = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error("cannot write '" + path + "'");
}

/// Re-throws parse errors with the file name in front.
template <class F>
auto parse_in(const std::string& path, F&& parse) {
    try {
        return parse(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

class Printer {
public:
    Printer(std::ostream& out, bool decimal) : out_(out), decimal_(decimal) {}

    std::string value(const Rational& r) const {
        if (!decimal_)
            return r.str();
        std::ostringstream s;
        s << r.str() << " (~" << std::setprecision(6) << r.approx() << ")";
        return s.str();
    }

    void field(const std::string& key, const std::string& text) { out_ << key << ": " << text << '\n'; }
    void field(const std::string& key, const Rational& r) { field(key, value(r)); }

private:
    std::ostream& out_;
    bool decimal_;
};

const char* program_name(FailingProgram p) {
    return p == FailingProgram::support ? "support" : "confidence";
}

int cmd_entail(const CliConfig& cfg, bool witness_mode, std::ostream& out, std::ostream& err) {
    const RuleFile file = parse_in(cfg.rules_path, parse_rule_file);
    if (!file.query)
        throw Error(cfg.rules_path + ": no '?' query line");

    EntailOptions options;
    options.dense = cfg.dense;
    options.max_materialize = cfg.max_materialize;
    options.simplex.max_iterations = cfg.max_iterations;
    if (cfg.trace)
        options.simplex.trace = &err;

    if (!cfg.dump_dense_path.empty()) {
        const ImplicitSystem sys(attribute_universe(file.rules, *file.query), file.rules);
        write_file(cfg.dump_dense_path, densify(sys, cfg.max_materialize).to_tsv());
    }

    const Verdict verdict = decide_entailment(file.rules, *file.query, options);

    Printer p(out, cfg.decimal);
    if (verdict.entailed)
        p.field("verdict", "ENTAILED");
    else
        p.field("verdict", std::string("NOT ENTAILED (") + program_name(*verdict.failing_program) + ")");
    p.field("min_support", verdict.min_support_value);
    p.field("min_surrogate", verdict.min_surrogate_value);
    p.field("threshold_support", file.query->min_support());
    p.field("threshold_confidence", file.query->min_confidence());
    p.field("failing_program", verdict.failing_program ? program_name(*verdict.failing_program) : "none");
    p.field("witness_objects", std::to_string(verdict.witness ? verdict.witness->object_count() : 0));
    if (verdict.witness) {
        std::string path = cfg.out_path;
        if (path.empty() && !witness_mode)
            path = cfg.rules_path + ".witness.cxt";
        write_file(path, serialize_cxt(*verdict.witness));
        p.field("witness_file", path);
    }
    return verdict.entailed ? kExitHolds : kExitFails;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
    const FormalContext ctx = parse_in(cfg.cxt_path, parse_cxt);
    const RuleFile file = parse_in(cfg.rules_path, parse_rule_file);

    Printer p(out, cfg.decimal);
    bool all = true;
    auto report = [&](const ConstrainedImplication& r) {
        const Rational supp = support(ctx, r.premise());
        const Rational conf = confidence(ctx, r.premise(), r.conclusion());
        const bool supp_ok = supp >= r.min_support();
        const bool conf_ok = conf >= r.min_confidence();
        out << format_rule(r) << ": supp = " << p.value(supp) << (supp_ok ? " >= " : " < ")
            << p.value(r.min_support()) << ", conf = " << p.value(conf) << (conf_ok ? " >= " : " < ")
            << p.value(r.min_confidence()) << (supp_ok && conf_ok ? " -> OK" : " -> FAIL") << '\n';
        all = all && supp_ok && conf_ok;
    };
    for (const auto& r : file.rules)
        report(r);
    if (file.query) {
        out << "? ";
        report(*file.query);
    }
    p.field("result", all ? "MODEL" : "NOT A MODEL");
    return all ? kExitHolds : kExitFails;
}

int cmd_mine(const CliConfig& cfg, std::ostream& out) {
    const FormalContext ctx = parse_in(cfg.cxt_path, parse_cxt);
    const auto rules = mine_rules(ctx, Rational::parse(cfg.min_support), Rational::parse(cfg.min_confidence));
    for (const auto& r : rules)
        out << format_rule(r) << '\n';
    return kExitHolds;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Entailment of support/confidence-constrained implications", "cimp"};
    app.require_subcommand(1);

    auto solver_flags = [&](CLI::App* sub) {
        sub->add_option("--max-iterations", cfg.max_iterations, "Simplex iteration cap")->check(CLI::PositiveNumber);
        sub->add_option("--max-materialize", cfg.max_materialize, "Largest universe the densifier accepts");
        sub->add_flag("--trace", cfg.trace, "Per-pivot trace on stderr");
        sub->add_flag("--decimal", cfg.decimal, "Append decimal approximations");
        sub->add_flag("--dense", cfg.dense, "Solve over the materialised matrix");
        sub->add_option("--dump-dense", cfg.dump_dense_path, "Write the materialised system as TSV");
    };

    auto* entail = app.add_subcommand("entail", "Decide whether the rules entail the '?' query");
    entail->add_option("RULES_FILE", cfg.rules_path)->required();
    entail->add_option("--out", cfg.out_path, "Counter-model CXT path");
    solver_flags(entail);

    auto* witness = app.add_subcommand("witness", "Like entail, writing the counter-model to --out");
    witness->add_option("RULES_FILE", cfg.rules_path)->required();
    witness->add_option("--out", cfg.out_path, "Counter-model CXT path")->required();
    solver_flags(witness);

    auto* check = app.add_subcommand("check", "Check whether a context models every rule");
    check->add_option("CXT_FILE", cfg.cxt_path)->required();
    check->add_option("RULES_FILE", cfg.rules_path)->required();
    check->add_flag("--decimal", cfg.decimal, "Append decimal approximations");

    auto* mine = app.add_subcommand("mine", "List the constrained implications of a context");
    mine->add_option("CXT_FILE", cfg.cxt_path)->required();
    mine->add_option("--min-support", cfg.min_support, "Minimum support P/Q")->required();
    mine->add_option("--min-confidence", cfg.min_confidence, "Minimum confidence P/Q")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (*entail)
            return cmd_entail(cfg, false, out, err);
        if (*witness)
            return cmd_entail(cfg, true, out, err);
        if (*check)
            return cmd_check(cfg, out);
        return cmd_mine(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace cimp

#include "ebetti/cli.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebetti/closed_form.hpp"
#include "ebetti/errors.hpp"
#include "ebetti/io.hpp"
#include "ebetti/local_cohomology.hpp"
#include "ebetti/sweep.hpp"

namespace ebetti {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int cmd_betti(const std::string& path, const std::string& engine, int threads,
              std::ostream& out, std::ostream& err) {
    const Instance inst = load_instance(path);
    ReportDocument doc;
    doc.invariants = compute_invariants(inst.graph);

    if (engine == "closed-form") {
        doc.engine = "closed_form";
        doc.report = dispatch(inst, doc.invariants);
    } else if (engine == "oracle") {
        doc.engine = "oracle";
        doc.report = extremal_report_oracle(inst, threads);
    } else {
        doc.engine = "both";
        doc.report = dispatch(inst, doc.invariants);
        doc.oracle_report = extremal_report_oracle(inst, threads);
        doc.agreement = doc.report == *doc.oracle_report;
    }
    out << report_to_json(doc) << "\n";
    if (doc.agreement && !*doc.agreement) {
        err << "engine mismatch: closed form " << to_string(doc.report) << " vs oracle "
            << to_string(*doc.oracle_report) << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_invariants(const std::string& path, std::ostream& out) {
    const Instance inst = load_instance(path);
    out << invariants_to_json(inst, compute_invariants(inst.graph)) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& path, std::ostream& out) {
    const Instance inst = load_instance(path);
    const auto clause = pseudo_gorenstein_clause(inst);
    nlohmann::json doc;
    doc["pseudo_gorenstein"] = clause.has_value();
    doc["clause"] = clause ? nlohmann::json(clause_description(*clause)) : nlohmann::json(nullptr);
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_sweep(const SweepOptions& options, std::ostream& out) {
    const SweepResult result = run_sweep(options, &out);
    if (!result.clean()) {
        out << "rerun a mismatch with: ebetti betti <instance.json> --engine both\n";
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extremal Betti numbers of two-weight coordinate-pair ideals", "ebetti"};
    app.require_subcommand(1);

    std::string path;
    std::string engine = "closed-form";
    int threads = default_threads();

    auto* betti = app.add_subcommand("betti", "Compute the extremal Betti corners of R/I");
    betti->add_option("file", path, "instance file (JSON or 'n alpha beta' text)")->required();
    betti->add_option("--engine", engine, "closed-form, oracle, or both")
        ->check(CLI::IsMember({"closed-form", "oracle", "both"}))
        ->capture_default_str();
    betti->add_option("--threads", threads, "worker threads for the oracle")
        ->check(CLI::PositiveNumber);

    auto* invariants = app.add_subcommand("invariants", "Print the graph invariant bundle");
    invariants->add_option("file", path, "instance file")->required();

    auto* classify = app.add_subcommand("classify", "Pseudo-Gorenstein verdict for R/I");
    classify->add_option("file", path, "instance file")->required();

    SweepOptions sweep_options;
    sweep_options.threads = default_threads();
    bool exhaustive = false;
    auto* sweep = app.add_subcommand("sweep", "Cross-validate closed forms against the oracle");
    sweep->add_option("--n", sweep_options.n, "vertex count (5, 6 or 7)")
        ->required()
        ->check(CLI::Range(5, 7));
    sweep->add_option("--alpha-max", sweep_options.alpha_max, "largest alpha to test")
        ->required()
        ->check(CLI::Range(2, 8));
    auto* exhaustive_flag =
        sweep->add_flag("--exhaustive", exhaustive, "all non-empty graphs (n=5 only)");
    auto* seed_opt = sweep->add_option("--seed", sweep_options.seed, "random corpus seed");
    sweep->add_option("--count", sweep_options.count, "number of random graphs")
        ->needs(seed_opt)
        ->check(CLI::PositiveNumber);
    seed_opt->excludes(exhaustive_flag);
    sweep->add_option("--threads", sweep_options.threads, "worker threads")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (betti->parsed()) return cmd_betti(path, engine, threads, out, err);
        if (invariants->parsed()) return cmd_invariants(path, out);
        if (classify->parsed()) return cmd_classify(path, out);
        // sweep
        sweep_options.exhaustive = exhaustive;
        if (sweep_options.exhaustive && sweep_options.n != 5) {
            err << "error: exhaustive sweeps are only feasible for n=5\n";
            return kExitInput;
        }
        if (!sweep_options.exhaustive && sweep_options.count <= 0) {
            err << "error: random sweeps need --seed and --count\n";
            return kExitInput;
        }
        return cmd_sweep(sweep_options, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const UnsupportedInstanceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ebetti

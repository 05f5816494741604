// Batch front-end: classify single cases, enumerate good sets, run the
// existence criteria, and execute the verification sweeps.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lowop/errors.hpp"
#include "lowop/records.hpp"
#include "lowop/verify.hpp"
#include "lowop/weights.hpp"

namespace {

using namespace lowop;

Weight parse_weight(const std::string& text) {
    Weight out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty weight entry in '" + text + "'");
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("weight must not be empty");
    return out;
}

std::vector<int> parse_set(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    std::sort(out.begin(), out.end());
    return out;
}

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw std::invalid_argument("cannot open output file '" + path + "'");
        stream = file.get();
    }
    std::ostream& out() { return *stream; }
};

void write_records(const std::vector<ResultRecord>& records, const std::string& format,
                   Output& output) {
    if (format == "csv") {
        output.out() << csv_header() << '\n';
        for (const ResultRecord& r : records) output.out() << emit_csv(r) << '\n';
    } else {
        for (const ResultRecord& r : records) output.out() << emit_json(r) << '\n';
    }
}

bool checks_pass(const std::vector<ResultRecord>& records) {
    for (const ResultRecord& r : records) {
        if (r.checks.closure_oracle && !*r.checks.closure_oracle) return false;
        if (r.checks.nabla_oracle && !*r.checks.nabla_oracle) return false;
    }
    return true;
}

int report_sweep(const std::string& name, const SweepReport& rep, Output& output) {
    output.out() << name << ": " << (rep.ok() ? "pass" : "FAIL") << " (cases=" << rep.cases
                 << ", mismatches=" << rep.mismatches.size() << ")\n";
    for (const auto& [k, v] : rep.counts) output.out() << "  " << k << ": " << v << '\n';
    for (const std::string& n : rep.notes) output.out() << "  note: " << n << '\n';
    for (const Mismatch& m : rep.mismatches) output.out() << mismatch_json(m) << '\n';
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lowop: decide, construct and verify GL(n-1)-high weight vectors obtained by\n"
        "iterated Kleshchev lowering operators on costandard GL(n)-modules over F_p"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file (flags win)");

    std::string lambda_text, mu_text, set_text, out_path, format = "json", mode = "fast";
    long long p = 2;
    int i = 1, j = 2, workers = 1;
    std::vector<long long> primes{2, 3};
    std::vector<int> ranks{3, 4};
    long long max_first = 3, max_total = 6;
    std::string suite = "all";

    auto add_pair_options = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "characteristic (prime)")->required();
        cmd->add_option("--lambda", lambda_text, "weight lambda, comma separated")->required();
        cmd->add_option("--mu", mu_text, "weight mu, comma separated")->required();
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_grid_options = [&](CLI::App* cmd) {
        cmd->add_option("--p", primes, "characteristics to sweep");
        cmd->add_option("--n", ranks, "ranks to sweep");
        cmd->add_option("--max-lambda1", max_first, "bound on lambda_1");
        cmd->add_option("--max-total", max_total, "bound on |lambda|");
        cmd->add_option("--workers", workers, "worker threads");
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify S_{i,j}(A) f_{mu,lambda}");
    add_pair_options(classify);
    classify->add_option("--i", i, "row the node leaves")->required();
    classify->add_option("--j", j, "target row (n removes the node)")->required();
    classify->add_option("--A", set_text, "set A, comma separated");
    classify->add_option("--mode", mode, "fast or verify (adds oracle cross-checks)")
        ->check(CLI::IsMember({"fast", "verify"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "classify every A inside (i..j)");
    add_pair_options(enumerate);
    enumerate->add_option("--i", i)->required();
    enumerate->add_option("--j", j)->required();
    enumerate->add_option("--mode", mode, "fast or verify")
        ->check(CLI::IsMember({"fast", "verify"}));

    CLI::App* exists = app.add_subcommand(
        "exists", "find a set A making the image a non-zero high weight vector");
    add_pair_options(exists);
    exists->add_option("--i", i)->required();
    exists->add_option("--j", j)->required();

    CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check sweeps");
    add_grid_options(verify);
    verify->add_option("--suite", suite,
                       "all, agreement, raised, exists, poly, identities, structural, golden")
        ->check(CLI::IsMember(
            {"all", "agreement", "raised", "exists", "poly", "identities", "structural",
             "golden"}));

    CLI::App* sweep = app.add_subcommand("sweep", "classify the whole grid into records");
    add_grid_options(sweep);
    sweep->add_option("--mode", mode, "fast or verify")->check(CLI::IsMember({"fast", "verify"}));
    sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Output output(out_path);
        const bool with_checks = mode == "verify";

        if (classify->parsed()) {
            BranchingPair pair = BranchingPair::make(p, parse_weight(lambda_text),
                                                     parse_weight(mu_text));
            ResultRecord r = make_case_record(pair, i, j, parse_set(set_text), with_checks);
            write_records({r}, format, output);
            return checks_pass({r}) ? 0 : 1;
        }
        if (enumerate->parsed()) {
            BranchingPair pair = BranchingPair::make(p, parse_weight(lambda_text),
                                                     parse_weight(mu_text));
            auto records = enumerate_case_records(pair, i, j, with_checks);
            write_records(records, format, output);
            return checks_pass(records) ? 0 : 1;
        }
        if (exists->parsed()) {
            BranchingPair pair = BranchingPair::make(p, parse_weight(lambda_text),
                                                     parse_weight(mu_text));
            auto witness = find_good_set(pair, i, j);
            if (!witness) {
                if (format == "csv") {
                    output.out() << csv_header() << '\n';
                } else {
                    nlohmann::json none{{"p", pair.p}, {"lambda", pair.lambda}, {"mu", pair.mu},
                                        {"i", i},      {"j", j},               {"found", false}};
                    output.out() << none.dump() << '\n';
                }
                return 0;
            }
            ResultRecord r = make_case_record(pair, i, j, witness->A, false);
            r.witness_eps = witness->eps;
            write_records({r}, format, output);
            return 0;
        }
        if (verify->parsed()) {
            SweepOptions opts;
            opts.primes = primes;
            opts.ranks = ranks;
            opts.max_first = max_first;
            opts.max_total = max_total;
            opts.workers = workers;
            for (long long prime : opts.primes)
                if (!is_prime(prime))
                    throw std::invalid_argument(std::to_string(prime) + " is not prime");
            int bad = 0;
            auto want = [&](const char* name) { return suite == "all" || suite == name; };
            if (want("agreement")) bad += report_sweep("agreement", run_agreement_sweep(opts), output);
            if (want("raised"))
                bad += report_sweep("raised vanishing", run_raised_vanishing_sweep(opts), output);
            if (want("exists")) bad += report_sweep("existence", run_existence_sweep(opts), output);
            if (want("poly"))
                bad += report_sweep("symbolic kernel", run_polynomial_suite(6), output);
            if (want("identities"))
                bad += report_sweep("operator identities", run_identity_suite(opts), output);
            if (want("structural"))
                bad += report_sweep("structural invariants", run_structural_suite(opts), output);
            if (want("golden")) bad += report_sweep("locked examples", run_locked_examples(), output);
            output.out() << (bad ? "FAIL" : "0 disagreements") << '\n';
            return bad ? 1 : 0;
        }
        if (sweep->parsed()) {
            SweepOptions opts;
            opts.primes = primes;
            opts.ranks = ranks;
            opts.max_first = max_first;
            opts.max_total = max_total;
            opts.workers = workers;
            for (long long prime : opts.primes)
                if (!is_prime(prime))
                    throw std::invalid_argument(std::to_string(prime) + " is not prime");
            auto records = run_grid_records(opts, with_checks);
            write_records(records, format, output);
            return checks_pass(records) ? 0 : 1;
        }
    } catch (const lowop::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

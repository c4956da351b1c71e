/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <munch/bounds.hh>
#include <munch/cli.hh>
#include <munch/proofkit.hh>
#include <munch/solve.hh>
#include <munch/verify.hh>

#include <CLI11.hpp>

#include <ostream>
#include <thread>

using std::ostream;
using std::string;
using std::vector;

namespace munch::cli
{
    namespace
    {
        auto default_jobs() -> unsigned
        {
            return std::max(1u, std::thread::hardware_concurrency());
        }

        auto status_name(SearchStatus s) -> const char *
        {
            switch (s) {
            case SearchStatus::Witness: return "witness";
            case SearchStatus::ExhaustedNone: return "exhausted";
            case SearchStatus::BudgetExceeded: return "budget-exceeded";
            }
            return "?";
        }

        auto one_based(const RowPermutation & sigma) -> string
        {
            string s;
            for (size_t i = 0; i < sigma.size(); ++i)
                s += (i ? " " : "") + std::to_string(sigma(i) + 1);
            return s;
        }

        auto print_verification(const VerificationResult & r, ostream & out) -> int
        {
            if (r.verdict == Verdict::Unique) {
                out << "MUNCHHAUSEN\nsigns: " << r.outcome.to_string() << "\n";
                return exit_ok;
            }
            out << "AMBIGUOUS\nsigns: " << r.outcome.to_string() << "\nwitness: " << format_weights(*r.witness) << "\n";
            return exit_not_munchhausen;
        }

        struct Options
        {
            string file, out_file, witness_out, bfile;
            bool oracle = false;
            std::uint64_t budget = 0;
            std::uint64_t limit = default_audit_limit;
            unsigned jobs = default_jobs();
            std::size_t n = 0, n_max = 0;
            unsigned k = 0, k_max = 0;
            std::uint64_t exclude_n = 0;
        };
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Tools for the Münchhausen coin-weighing problem", "munch"};
        app.require_subcommand(1);
        Options o;

        auto verify_cmd = app.add_subcommand("verify", "Decide whether a matrix file proves the labeling 1..n");
        verify_cmd->add_option("file", o.file, "Matrix file")->required();
        verify_cmd->add_flag("--oracle", o.oracle, "Use the n! enumeration (n <= 9)");
        verify_cmd->add_option("--budget", o.budget, "Search node cap")->check(CLI::PositiveNumber);

        auto solve_cmd = app.add_subcommand("solve", "Compute B(n) with a witness design");
        solve_cmd->add_option("n", o.n, "Number of coins")->required()->check(CLI::PositiveNumber);
        solve_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
        solve_cmd->add_option("--budget", o.budget, "Assignment evaluations per k")->check(CLI::PositiveNumber);
        solve_cmd->add_option("--witness-out", o.witness_out, "Write the witness matrix here");

        auto sequence_cmd = app.add_subcommand("sequence", "Compute B(1..n_max) as a b-file");
        sequence_cmd->add_option("n_max", o.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
        sequence_cmd->add_option("--bfile", o.bfile, "Also write the b-file here");
        sequence_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sequence_cmd->add_option("--budget", o.budget, "Assignment evaluations per k")->check(CLI::PositiveNumber);

        auto bounds_cmd = app.add_subcommand("bounds", "Exclusion table for k = 0..k_max");
        bounds_cmd->add_option("k_max", o.k_max, "Largest k")->required()->check(CLI::Range(0u, bound_report_max_k));

        auto exclude_cmd = app.add_subcommand("exclude", "Test C(3^k, n) < (ceil(k/3))!");
        exclude_cmd->add_option("n", o.exclude_n, "Number of coins")->required()->check(CLI::PositiveNumber);
        exclude_cmd->add_option("k", o.k, "Number of weighings")->required()->check(CLI::Range(0u, 4096u));

        auto proof_cmd = app.add_subcommand("proof-check", "Row stabiliser and injectivity audit of a matrix file");
        proof_cmd->add_option("file", o.file, "Matrix file")->required();
        proof_cmd->add_option("--limit", o.limit, "Largest stabiliser to enumerate")->check(CLI::PositiveNumber);

        auto full_cmd = app.add_subcommand("counterexample-full", "Ambiguity witness for the full k-row design");
        full_cmd->add_option("k", o.k, "Number of weighings")->required()->check(CLI::Range(1u, full_matrix_max_rows));
        full_cmd->add_option("--out", o.out_file, "Write the full design here");

        auto chain_cmd = app.add_subcommand("chain", "Write the (n-1)-weighing chain design");
        chain_cmd->add_option("n", o.n, "Number of coins")->required()->check(CLI::Range(std::size_t{1}, max_coins));
        chain_cmd->add_option("--out", o.out_file, "Output matrix file");

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << "munch: " << e.what() << "\n\n" << app.help();
            return exit_usage;
        }

        try {
            if (verify_cmd->parsed()) {
                auto m = read_matrix_file(o.file);
                if (o.oracle)
                    return print_verification(verify_oracle(m), out);
                VerifyBudget budget;
                if (o.budget)
                    budget.max_nodes = o.budget;
                auto result = verify_fast(m, budget);
                if (auto exceeded = std::get_if<BudgetExceeded>(&result)) {
                    out << "BUDGET-EXCEEDED\nnodes: " << exceeded->nodes << "\n";
                    return exit_budget;
                }
                return print_verification(std::get<VerificationResult>(result), out);
            }

            SolveConfig config;
            config.jobs = o.jobs;
            if (o.budget)
                config.budget = o.budget;

            if (solve_cmd->parsed()) {
                auto r = baron(o.n, config);
                out << "n: " << r.n << "\nB(n): " << r.value << "\nminimality: "
                    << (r.minimality == Minimality::Proven ? "proven" : "upper-bound-only") << "\n";
                for (auto & [k, status] : r.passes)
                    out << "k=" << k << ": " << status_name(status) << "\n";
                out << "signs: " << weigh_identity(r.witness).to_string() << "\n" << serialize_matrix(r.witness);
                if (! o.witness_out.empty())
                    write_text_file(o.witness_out, serialize_matrix(r.witness));
                return r.minimality == Minimality::Proven ? exit_ok : exit_budget;
            }

            if (sequence_cmd->parsed()) {
                auto results = sequence(o.n_max, config);
                auto text = format_bfile(results);
                out << text;
                if (! o.bfile.empty())
                    write_text_file(o.bfile, text);
                for (auto & r : results)
                    if (r.minimality != Minimality::Proven)
                        return exit_budget;
                return exit_ok;
            }

            if (bounds_cmd->parsed()) {
                out << bounds_table(o.k_max);
                return exit_ok;
            }

            if (exclude_cmd->parsed()) {
                out << (excluded(o.exclude_n, o.k) ? "EXCLUDED" : "NOT-EXCLUDED") << "\n";
                return exit_ok;
            }

            if (proof_cmd->parsed()) {
                auto m = read_matrix_file(o.file);
                auto stab = stabilizer(m);
                out << "signs: " << weigh_identity(m).to_string() << "\n";
                out << "stabilizer_size: " << stab.size.str() << "\n";
                for (auto s : {Sign::Minus, Sign::Zero, Sign::Plus}) {
                    out << "class " << sign_char(s) << ":";
                    for (auto r : stab.class_of(s))
                        out << " " << r + 1;
                    out << "\n";
                }
                AuditResult audit;
                try {
                    audit = audit_injectivity(m, o.limit);
                }
                catch (const LimitError & e) {
                    out << "audit: LIMIT-EXCEEDED\n";
                    err << "munch: " << e.what() << "\n";
                    return exit_budget;
                }
                if (auto inj = std::get_if<Injective>(&audit))
                    out << "audit: INJECTIVE\nenumerated: " << inj->enumerated << "\n";
                else {
                    auto & c = std::get<Collision>(audit);
                    out << "audit: COLLISION\nsigma1: " << one_based(c.first) << "\nsigma2: " << one_based(c.second) << "\n";
                    if (c.certificate)
                        out << "certificate: " << format_weights(*c.certificate) << "\n";
                    else
                        out << "certificate: none (repeated rows)\n";
                }
                return exit_ok;
            }

            if (full_cmd->parsed()) {
                auto m = full_matrix(o.k);
                auto witness = counterexample_full(o.k);
                out << "signs: " << weigh_identity(m).to_string() << "\nwitness: " << format_weights(witness) << "\n";
                if (! o.out_file.empty())
                    write_text_file(o.out_file, serialize_matrix(m));
                return exit_ok;
            }

            if (chain_cmd->parsed()) {
                auto text = serialize_matrix(chain_construction(o.n));
                if (o.out_file.empty())
                    out << text;
                else
                    write_text_file(o.out_file, text);
                return exit_ok;
            }
        }
        catch (const Error & e) {
            err << "munch: " << e.what() << "\n";
            return exit_usage;
        }

        err << app.help();
        return exit_usage;
    }
}

#include "bichroma/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "bichroma/chi_engine.hpp"
#include "bichroma/multigraph.hpp"
#include "bichroma/sequences.hpp"
#include "bichroma/verify.hpp"

namespace bichroma {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join_values(const std::vector<mpz_class>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += values[i].get_str();
    }
    return out;
}

void print_identity_line(std::ostream& out, const IdentityReport& rep) {
    out << identity_name(rep.id) << ' ' << rep.grid;
    if (rep.pass) {
        out << " PASS checked=" << rep.checked << "\n";
        return;
    }
    out << " FAIL at (";
    const auto& cex = *rep.counterexample;
    for (std::size_t i = 0; i < cex.indices.size(); ++i) {
        if (i > 0)
            out << ',';
        out << cex.indices[i];
    }
    out << ") lhs=" << cex.lhs.get_str() << " rhs=" << cex.rhs.get_str() << " checked=" << rep.checked
        << " failed=" << rep.failed << "\n";
}

int cmd_verify_identities(std::ostream& out, int l, int max_index) {
    std::vector<IdentityReport> reports;
    for (IdentityId id : {IdentityId::T1_1, IdentityId::T1_2, IdentityId::T1_3, IdentityId::T1_4,
                          IdentityId::T1_5, IdentityId::P1})
        reports.push_back(verify_identity(id, {1, l}, max_index));
    for (int k = 0; k <= 4; ++k) {
        reports.push_back(verify_identity(IdentityId::L3_1, {k, l}, max_index));
        reports.push_back(verify_identity(IdentityId::L3_2, {k, l}, max_index));
    }
    for (IdentityId id : {IdentityId::C1, IdentityId::C2, IdentityId::C3, IdentityId::C4, IdentityId::C5,
                          IdentityId::FL, IdentityId::PELL})
        reports.push_back(verify_identity(id, {1, l}, max_index));

    long long checked = 0, failed = 0;
    for (const IdentityReport& rep : reports) {
        print_identity_line(out, rep);
        checked += rep.checked;
        failed += rep.failed;
    }
    out << "ok=" << (failed == 0 ? "true" : "false") << " checked=" << checked << " failed=" << failed
        << "\n";
    return failed == 0 ? 0 : 1;
}

int cmd_verify_oracle(std::ostream& out, const OracleCheckOptions& opts) {
    OracleCheckReport rep = verify_oracle_equivalence(opts);
    out << "exhaustive simple graphs n<=" << opts.exhaustive_max_vertices << ": graphs="
        << rep.exhaustive_graphs << " checks=" << rep.exhaustive_checks << "\n";
    out << "random multigraphs samples=" << opts.random_samples << " n<=" << opts.random_max_vertices
        << " edges<=" << opts.random_max_edges << ": graphs=" << rep.random_graphs << " checks="
        << rep.random_checks << "\n";
    if (!rep.pass)
        out << "first failure: " << rep.first_failure << "\n";
    out << "ok=" << (rep.pass ? "true" : "false") << " checked="
        << rep.exhaustive_checks + rep.random_checks << " failed=" << rep.failed << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_verify_sneaky(std::ostream& out, int r, int s, int t, int l) {
    SneakyCheckReport rep = verify_sneaky(r, s, t, l);
    out << "sneaky(" << r << ',' << s << ',' << t << ") l=" << l << ": brute=" << rep.brute.get_str()
        << " vertex=" << rep.vertex_value.get_str() << " edge=" << rep.edge_value.get_str()
        << " closed_lhs=" << rep.closed_lhs.get_str() << " closed_rhs="
        << rep.closed_rhs.get_str() << (rep.pass ? " PASS" : " FAIL") << "\n";
    out << "ok=" << (rep.pass ? "true" : "false") << " checked=4 failed=" << (rep.pass ? 0 : 1) << "\n";
    return rep.pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact (k,l)-coloring polynomial engine for multigraphs"};
    app.name("bichroma");
    app.require_subcommand(1);

    // chi <file.mg> [--eval K L]
    auto* chi_cmd = app.add_subcommand("chi", "Compute chi_G(x,y) of a graph file");
    std::string chi_file;
    std::vector<int> chi_eval;
    chi_cmd->add_option("file", chi_file, "graph in .mg format")->required();
    chi_cmd->add_option("--eval", chi_eval, "evaluate at integers K L")
        ->expected(2)
        ->check(CLI::NonNegativeNumber);

    // count <file.mg> -k K -l L [--oracle brute|subset]
    auto* count_cmd = app.add_subcommand("count", "Count proper (k,l)-colorings by enumeration");
    std::string count_file, count_oracle = "brute";
    int count_k = 0, count_l = 0;
    int budget_n = -1, budget_colors = -1, budget_k = -1;
    count_cmd->add_option("file", count_file, "graph in .mg format")->required();
    count_cmd->add_option("-k", count_k, "proper colors")->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_option("-l", count_l, "wildcard colors")->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--oracle", count_oracle, "oracle to use")
        ->check(CLI::IsMember({"brute", "subset"}));
    count_cmd->add_option("--budget-n", budget_n, "vertex budget override");
    count_cmd->add_option("--budget-colors", budget_colors, "k+l budget override (brute oracle)");
    count_cmd->add_option("--budget-k", budget_k, "k budget override (subset oracle)");

    // seq path|cycle -k K -l L -n N
    auto* seq_cmd = app.add_subcommand("seq", "Tabulate chi of the path/cycle family at (k,l)");
    std::string seq_family;
    int seq_k = 0, seq_l = 0, seq_n = 0;
    seq_cmd->add_option("family", seq_family, "path or cycle")
        ->required()
        ->check(CLI::IsMember({"path", "cycle"}));
    seq_cmd->add_option("-k", seq_k, "proper colors")->required()->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("-l", seq_l, "wildcard colors")->required()->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("-n", seq_n, "number of terms")->required()->check(CLI::PositiveNumber);

    // recurrence path|cycle -k K -l L [--terms T]
    auto* rec_cmd = app.add_subcommand("recurrence", "Mine the minimal linear recurrence of a family");
    std::string rec_family;
    int rec_k = 0, rec_l = 0, rec_terms = 12;
    rec_cmd->add_option("family", rec_family, "path or cycle")
        ->required()
        ->check(CLI::IsMember({"path", "cycle"}));
    rec_cmd->add_option("-k", rec_k, "proper colors")->required()->check(CLI::NonNegativeNumber);
    rec_cmd->add_option("-l", rec_l, "wildcard colors")->required()->check(CLI::NonNegativeNumber);
    rec_cmd->add_option("--terms", rec_terms, "terms to mine from (default 12)")
        ->check(CLI::Range(4, 64));

    // verify identities|oracle|sneaky
    auto* verify_cmd = app.add_subcommand("verify", "Machine-check recurrences and identities");
    verify_cmd->require_subcommand(1);

    auto* vid_cmd = verify_cmd->add_subcommand("identities", "Check the identity battery over a grid");
    int vid_l = 0, vid_max = 20;
    vid_cmd->add_option("-l", vid_l, "wildcard colors")->required()->check(CLI::PositiveNumber);
    vid_cmd->add_option("--max", vid_max, "index bound")->check(CLI::PositiveNumber);

    auto* vor_cmd = verify_cmd->add_subcommand("oracle", "Cross-check chi against both counting oracles");
    OracleCheckOptions oracle_opts;
    vor_cmd->add_option("--max-vertices", oracle_opts.exhaustive_max_vertices,
                        "exhaustive corpus bound (default 4)")
        ->check(CLI::Range(0, 5));
    vor_cmd->add_option("--max-edges", oracle_opts.random_max_edges, "random multigraph edge bound")
        ->check(CLI::Range(0, 12));
    vor_cmd->add_option("--kl-max", oracle_opts.kl_max, "check all (k,l) in [0,M]^2, k+l >= 1")
        ->check(CLI::Range(1, 4));
    vor_cmd->add_option("--samples", oracle_opts.random_samples, "number of random multigraphs")
        ->check(CLI::NonNegativeNumber);
    vor_cmd->add_option("--seed", oracle_opts.seed, "random corpus seed");

    auto* vsn_cmd = verify_cmd->add_subcommand("sneaky", "Check the chord-graph decompositions");
    std::vector<int> vsn_rst;
    int vsn_l = 1;
    vsn_cmd->add_option("--rst", vsn_rst, "chord graph parameters R S T")->required()->expected(3);
    vsn_cmd->add_option("-l", vsn_l, "wildcard colors")->required()->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chi_cmd->parsed()) {
            BiPoly poly = compute_chi(parse_graph(read_file(chi_file)));
            if (chi_eval.empty())
                out << poly.str() << "\n";
            else
                out << poly.eval(chi_eval[0], chi_eval[1]).get_str() << "\n";
            return 0;
        }
        if (count_cmd->parsed()) {
            MultiGraph g = parse_graph(read_file(count_file));
            mpz_class count;
            if (count_oracle == "brute") {
                BruteForceBudget budget;
                if (budget_n >= 0)
                    budget.max_vertices = budget_n;
                if (budget_colors >= 0)
                    budget.max_colors = budget_colors;
                count = count_bruteforce(g, {count_k, count_l}, budget);
            } else {
                SubsetExpansionBudget budget;
                if (budget_n >= 0)
                    budget.max_vertices = budget_n;
                if (budget_k >= 0)
                    budget.max_k = budget_k;
                count = count_subset_expansion(g, {count_k, count_l}, budget);
            }
            out << count.get_str() << "\n";
            return 0;
        }
        if (seq_cmd->parsed()) {
            SeqParams p{seq_k, seq_l};
            std::vector<mpz_class> values;
            if (seq_family == "path") {
                auto a = a_seq(p, seq_n);
                values.assign(a.begin() + 1, a.end()); // a_1..a_N
            } else {
                values = b_seq(p, seq_n);
            }
            out << join_values(values) << "\n";
            return 0;
        }
        if (rec_cmd->parsed()) {
            SeqParams p{rec_k, rec_l};
            std::vector<mpz_class> values;
            if (rec_family == "path") {
                auto a = a_seq(p, rec_terms);
                values.assign(a.begin() + 1, a.end()); // a_1..a_T
            } else {
                values = b_seq(p, rec_terms);
            }
            int max_order = std::min(6, (rec_terms - 2) / 2);
            auto rec = minimal_recurrence(values, max_order);
            if (!rec) {
                out << "order=none (no recurrence of order <= " << max_order << ")\n";
                return 0;
            }
            out << "order=" << rec->order << " coeffs=";
            for (std::size_t i = 0; i < rec->coeffs.size(); ++i) {
                if (i > 0)
                    out << ',';
                out << rec->coeffs[i].get_str();
            }
            if (rec_family == "cycle")
                out << " detB=" << hankel_det_b(p).det.get_str();
            out << "\n";
            return 0;
        }
        if (vid_cmd->parsed())
            return cmd_verify_identities(out, vid_l, vid_max);
        if (vor_cmd->parsed()) {
            oracle_opts.random_max_vertices = std::min(6, oracle_opts.exhaustive_max_vertices + 2);
            return cmd_verify_oracle(out, oracle_opts);
        }
        if (vsn_cmd->parsed())
            return cmd_verify_sneaky(out, vsn_rst[0], vsn_rst[1], vsn_rst[2], vsn_l);
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace bichroma

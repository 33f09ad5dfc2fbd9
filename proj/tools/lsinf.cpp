#include "lsinf/acceptance.hpp"
#include "lsinf/crystal.hpp"
#include "lsinf/decomp.hpp"
#include "lsinf/kt.hpp"
#include "lsinf/textio.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace lsinf;

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystal bases of extremal weight modules in types B, C, D of infinite rank"};
    app.require_subcommand(1);

    std::string lr_a, lr_b, lr_c;
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^omega_{rho,kappa}");
    lr->add_option("rho", lr_a)->required();
    lr->add_option("kappa", lr_b)->required();
    lr->add_option("omega", lr_c)->required();

    std::string type = "c", shape, lambda, mu, kcase, format = "dot";
    int rank = 3, rank_bump = 0, ell = 3;
    bool json = false, verbose = false, quick = false;

    auto* crystal = app.add_subcommand("crystal", "Export the crystal graph of a highest weight at finite rank");
    crystal->add_option("--type", type, "b, c or d")->required();
    crystal->add_option("--shape", shape, "weight, e.g. 1;0 or 0,1;1/2")->required();
    crystal->add_option("--rank", rank, "rank n (indices 0..n)")->required();
    crystal->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* decompose = app.add_subcommand("decompose", "Tensor product decomposition");
    decompose->add_option("--type", type)->required();
    decompose->add_option("--case", kcase)->required()->check(CLI::IsMember({"ee", "ed", "de", "dd", "general"}));
    decompose->add_option("--lambda", lambda)->required();
    decompose->add_option("--mu", mu)->required();
    decompose->add_option("--rank-bump", rank_bump, "use rank m+k in the de case")->check(CLI::NonNegativeNumber);
    decompose->add_flag("--json", json);

    std::string rho1, rho2, rho;
    auto* kt = app.add_subcommand("kt", "Signed triple Littlewood-Richardson sum");
    kt->add_option("--type", type)->required();
    kt->add_option("--rho1", rho1)->required();
    kt->add_option("--rho2", rho2)->required();
    kt->add_option("--rho", rho)->required();
    kt->add_option("--ell", ell)->required();
    kt->add_flag("--verbose,-v", verbose, "print the per-J term table");

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_flag("--quick", quick);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (lr->parsed()) {
            std::cout << lr_coefficient(parse_partition(lr_a), parse_partition(lr_b), parse_partition(lr_c)) << "\n";
        } else if (crystal->parsed()) {
            const auto g = generate_crystal(parse_weight(parse_type(type), shape), rank);
            std::cout << (format == "dot" ? crystal_dot(g) : crystal_json(g));
        } else if (decompose->parsed()) {
            const TypeTag t = parse_type(type);
            const Weight l = parse_weight(t, lambda), m = parse_weight(t, mu);
            DecompResult r;
            if (kcase == "ee") r = decompose_ee(l, m);
            else if (kcase == "ed") r = decompose_ed(l, m);
            else if (kcase == "de") r = decompose_de(l, m, rank_bump);
            else if (kcase == "dd") r = decompose_dd(l, m);
            else r = decompose_general(l, m);
            std::cout << (json ? decomp_json(r) : format_decomp(r)) << "\n";
        } else if (kt->parsed()) {
            std::vector<XlrTerm> trace;
            const std::int64_t v = xlr(parse_type(type), parse_partition(rho1), parse_partition(rho2), parse_partition(rho),
                                       ell, verbose ? &trace : nullptr);
            if (verbose) {
                std::cout << "J\tflipped\tsign\tlr\n";
                for (const XlrTerm& term : trace)
                    std::cout << "{" << join(term.J) << "}\t" << format_partition(term.flipped) << "\t"
                              << (term.sign > 0 ? "+" : "-") << "\t" << term.lr << "\n";
            }
            std::cout << v << "\n";
        } else if (verify->parsed()) {
            int failed = 0;
            run_acceptance(quick, [&failed](const CriterionResult& r) {
                std::cout << format_result(r) << std::endl;
                failed += !r.pass;
            });
            return failed == 0 ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

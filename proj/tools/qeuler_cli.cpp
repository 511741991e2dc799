// Command-line front end: exact polynomial families, identity-check suites,
// and Rees-product homology, with human, JSON and CSV output.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qeuler/qeuler.hpp"

using namespace qeuler;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

int default_threads() {
    if (const char* env = std::getenv("QEL_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

json report_to_json(const Report& rep) {
    json j{{"theorem", rep.theorem}, {"n_or_N", rep.n_or_N}, {"pass", rep.pass}};
    if (rep.first_mismatch) {
        j["first_mismatch"] = {{"n", rep.first_mismatch->n},
                               {"lhs", rep.first_mismatch->lhs},
                               {"rhs", rep.first_mismatch->rhs}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    json instances = json::array();
    for (const Instance& inst : rep.instances)
        instances.push_back(
            {{"params", inst.params}, {"pass", inst.pass}, {"lhs", inst.lhs}, {"rhs", inst.rhs}});
    j["instances"] = instances;
    return j;
}

struct OutputOptions {
    bool as_json = false;
    bool as_csv = false;
};

void emit(const json& payload, const OutputOptions& out, const std::string& human,
          const std::string& csv) {
    if (out.as_json)
        std::cout << payload.dump(2) << "\n";
    else if (out.as_csv)
        std::cout << csv;
    else
        std::cout << human;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

struct SuiteParams {
    std::optional<int> N, n, m, q;
    bool small = false;
    int threads = 1;
};

Report run_suite(const std::string& suite, const SuiteParams& p) {
    auto geti = [](std::optional<int> v, int dflt) { return v ? *v : dflt; };
    if (suite == "thm1-1") return verify_maj_exc_egf(geti(p.N, 6), p.threads);
    if (suite == "thm1-2") return verify_fix_refinement(geti(p.n, 6), p.threads);
    if (suite == "thm4-1") return verify_aid_des_equidistribution(geti(p.n, 6), p.threads);
    if (suite == "thm2-1") {
        int N = geti(p.N, 5);
        return verify_symfun_egf(N, geti(p.m, N));
    }
    if (suite == "thm2-2") {
        int n = geti(p.n, 4);
        return verify_ornament_expansion(n, geti(p.m, std::min(n, 4)));
    }
    if (suite == "cor2-3") {
        int n = geti(p.n, 5);
        return verify_derangement_factorization(n, geti(p.m, n));
    }
    if (suite == "rec9") {
        int n = geti(p.n, 5);
        return verify_derangement_recurrence(n, geti(p.m, n));
    }
    if (suite == "cor2-4") {
        int n = geti(p.n, 4);
        return verify_banner_expansion(n, geti(p.m, n));
    }
    if (suite == "thm2-6") {
        int n = geti(p.n, 4);
        return verify_banner_weight_recurrence(n, geti(p.m, n));
    }
    if (suite == "prop2-5") {
        int n = geti(p.n, 4);
        return verify_banner_ornament_bijection(n, geti(p.m, std::min(n, 4)));
    }
    if (suite == "thm3-3") return verify_rees_homology_dims(geti(p.n, 4));
    if (suite == "eq13") {
        int n = geti(p.n, 3);
        int q = geti(p.q, 2);
        Report dims = verify_subspace_rees_dims(n, q);
        Report series = verify_subspace_rees_series(std::min(n, 3), q);
        for (Instance& inst : series.instances)
            dims.add("series " + inst.params, dims.n_or_N, inst.pass, inst.lhs, inst.rhs);
        dims.pass = dims.pass && series.pass;
        if (!dims.first_mismatch && series.first_mismatch)
            dims.first_mismatch = series.first_mismatch;
        return dims;
    }
    throw CLI::ValidationError("verify", "unknown suite: " + suite);
}

std::vector<std::string> all_suites() {
    return {"thm1-1", "thm1-2", "thm2-1", "thm2-2", "cor2-3", "cor2-4",
            "thm2-6", "rec9",   "prop2-5", "thm3-3", "eq13",  "thm4-1"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-Eulerian polynomial and poset-homology toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads for S_n scans (env QEL_THREADS)");

    // ---- poly ----------------------------------------------------------
    auto* poly_cmd = app.add_subcommand("poly", "print an exact polynomial family member");
    std::string pair;
    int poly_n = 0;
    bool poly_force = false;
    OutputOptions poly_out;
    poly_cmd->add_option("pair", pair, "maj-exc | aid-des | fix-refined")->required();
    poly_cmd->add_option("--n", poly_n, "symmetric group size")->required();
    poly_cmd->add_flag("--force", poly_force, "override the resource guard");
    poly_cmd->add_flag("--json", poly_out.as_json, "machine-readable output");
    poly_cmd->add_flag("--csv", poly_out.as_csv, "term,coefficient table");

    // ---- verify --------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run an identity-check suite");
    std::string suite;
    SuiteParams sp;
    bool verify_force = false;
    OutputOptions verify_out;
    int optN = -1, optn = -1, optm = -1, optq = -1;
    verify_cmd->add_option("suite", suite, "thm1-1 thm1-2 thm2-1 thm2-2 cor2-3 cor2-4 thm2-6 rec9 prop2-5 thm3-3 eq13 thm4-1 all")
        ->required();
    verify_cmd->add_option("--N", optN, "series truncation order");
    verify_cmd->add_option("--n", optn, "maximum n");
    verify_cmd->add_option("--m", optm, "variable count / letter bound");
    verify_cmd->add_option("--q", optq, "field size for eq13 (2 or 3)");
    verify_cmd->add_flag("--small", sp.small, "paper-scale default bounds");
    verify_cmd->add_flag("--force", verify_force, "override the resource guards");
    verify_cmd->add_flag("--json", verify_out.as_json, "machine-readable output");
    verify_cmd->add_flag("--csv", verify_out.as_csv, "suite,instance,pass table");

    // ---- homology ------------------------------------------------------
    auto* hom_cmd = app.add_subcommand("homology", "reduced Betti numbers of a Rees-product ideal");
    std::string family;
    int hom_n = 0, hom_j = 0, hom_q = 2;
    bool hom_force = false;
    OutputOptions hom_out;
    hom_cmd->add_option("family", family, "bn | bnq")->required();
    hom_cmd->add_option("--n", hom_n, "poset size parameter")->required();
    hom_cmd->add_option("--j", hom_j, "chain coordinate of the maximal element")->required();
    hom_cmd->add_option("--q", hom_q, "field size for bnq (2 or 3)");
    hom_cmd->add_flag("--force", hom_force, "override the resource guard");
    hom_cmd->add_flag("--json", hom_out.as_json, "machine-readable output");
    hom_cmd->add_flag("--csv", hom_out.as_csv, "dim,betti table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (*poly_cmd) {
            if (poly_n < 0) throw CLI::ValidationError("poly", "--n must be nonnegative");
            if (poly_n > 11 && !poly_force)
                throw CLI::ValidationError(
                    "poly", "n > 11 exceeds the resource guard (use --force to override)");
            Poly value;
            if (pair == "maj-exc")
                value = maj_exc_poly(poly_n, threads);
            else if (pair == "aid-des")
                value = aid_des_poly(poly_n, threads);
            else if (pair == "fix-refined")
                value = fix_refined_poly(poly_n, threads);
            else
                throw CLI::ValidationError("poly", "unknown statistic pair: " + pair);
            std::string text = value.to_string();
            json payload{{"schema", kSchemaVersion},
                         {"command", "poly"},
                         {"parameters", {{"pair", pair}, {"n", poly_n}, {"threads", threads}}},
                         {"result", text},
                         {"wall_ms", elapsed_ms(start)}};
            std::string csv = "term,coefficient\n";
            for (const auto& [mono, coeff] : value.terms())
                csv += mono.to_string() + "," + coeff.str() + "\n";
            emit(payload, poly_out, text + "\n", csv);
            return 0;
        }

        if (*verify_cmd) {
            if (optN >= 0) sp.N = optN;
            if (optn >= 0) sp.n = optn;
            if (optm >= 0) sp.m = optm;
            if (optq >= 0) sp.q = optq;
            sp.threads = threads;
            if (sp.q && *sp.q != 2 && *sp.q != 3)
                throw CLI::ValidationError("verify", "--q must be 2 or 3");
            if (!verify_force) {
                if (sp.N && *sp.N > 10)
                    throw CLI::ValidationError("verify", "--N > 10 needs --force");
                if (sp.n && *sp.n > 8 && suite != "thm3-3" && suite != "eq13")
                    throw CLI::ValidationError("verify", "--n > 8 needs --force");
                if (suite == "thm3-3" && sp.n && *sp.n > 5)
                    throw CLI::ValidationError("verify", "thm3-3 with --n > 5 needs --force");
                if (suite == "eq13" && sp.n && *sp.n > 3)
                    throw CLI::ValidationError("verify", "eq13 with --n > 3 needs --force");
            }
            std::vector<std::string> suites;
            if (suite == "all")
                suites = all_suites();
            else
                suites = {suite};
            if (sp.small) {
                // paper-scale defaults: n <= 6, m = n, homology n <= 4
                sp.N.reset();
                sp.n.reset();
                sp.m.reset();
            }
            std::vector<Report> reports;
            bool pass = true;
            for (const std::string& s : suites) {
                SuiteParams local = sp;
                if (suite == "all") {
                    // per-suite defaults only; explicit bounds apply to single suites
                    local = SuiteParams{};
                    local.threads = threads;
                }
                reports.push_back(run_suite(s, local));
                pass = pass && reports.back().pass;
            }
            json jsuites = json::array();
            for (const Report& rep : reports) jsuites.push_back(report_to_json(rep));
            json payload{{"schema", kSchemaVersion},
                         {"command", "verify"},
                         {"parameters",
                          {{"suite", suite},
                           {"small", sp.small},
                           {"threads", threads},
                           {"N", sp.N ? json(*sp.N) : json(nullptr)},
                           {"n", sp.n ? json(*sp.n) : json(nullptr)},
                           {"m", sp.m ? json(*sp.m) : json(nullptr)},
                           {"q", sp.q ? json(*sp.q) : json(nullptr)}}},
                         {"suites", jsuites},
                         {"pass", pass},
                         {"wall_ms", elapsed_ms(start)}};
            std::string human, csv = "suite,instance,pass,lhs,rhs\n";
            for (const Report& rep : reports) {
                human += rep.theorem + ": " + (rep.pass ? "pass" : "FAIL") + " (" +
                         std::to_string(rep.instances.size()) + " instances)\n";
                if (!rep.pass && rep.first_mismatch)
                    human += "  first mismatch: " + rep.first_mismatch->lhs +
                             " != " + rep.first_mismatch->rhs + "\n";
                for (const Instance& inst : rep.instances)
                    csv += rep.theorem + "," + inst.params + "," + (inst.pass ? "1" : "0") + "," +
                           "\"" + inst.lhs + "\",\"" + inst.rhs + "\"\n";
            }
            emit(payload, verify_out, human, csv);
            return pass ? 0 : 1;
        }

        if (*hom_cmd) {
            if (hom_n < 1) throw CLI::ValidationError("homology", "--n must be positive");
            if (hom_j < 1 || hom_j > hom_n)
                throw CLI::ValidationError("homology", "--j must lie in 1..n");
            std::map<int, long long> betti;
            if (family == "bn") {
                if (hom_n > 5 && !hom_force)
                    throw CLI::ValidationError(
                        "homology", "bn with n > 5 exceeds the resource guard (use --force)");
                Poset rees = rees_bn_cn(hom_n);
                Poset full = boolean_lattice(hom_n);
                std::string top = full.label(full.index_of(full.label((1 << hom_n) - 1)));
                betti = reduced_betti(rees_open_ideal(rees, top, hom_j));
            } else if (family == "bnq") {
                if (hom_q != 2 && hom_q != 3)
                    throw CLI::ValidationError("homology", "--q must be 2 or 3");
                if (hom_n > 3 && !hom_force)
                    throw CLI::ValidationError(
                        "homology", "bnq with n > 3 exceeds the resource guard (use --force)");
                Poset full = subspace_lattice(hom_q, hom_n);
                std::string top = full.label(full.maximal_elements().front());
                Poset rees = rees_bnq_cn(hom_n, hom_q);
                betti = reduced_betti(rees_open_ideal(rees, top, hom_j));
            } else {
                throw CLI::ValidationError("homology", "unknown family: " + family);
            }
            json jbetti = json::object();
            for (const auto& [d, b] : betti) jbetti[std::to_string(d)] = b;
            json payload{{"schema", kSchemaVersion},
                         {"command", "homology"},
                         {"parameters",
                          {{"family", family}, {"n", hom_n}, {"j", hom_j}, {"q", hom_q}}},
                         {"betti", jbetti},
                         {"wall_ms", elapsed_ms(start)}};
            std::string human = "betti";
            if (betti.count(-1) && betti.at(-1) != 0)
                human += "[-1] = " + std::to_string(betti.at(-1)) + ";";
            human += " [dims 0..top] = [";
            bool first = true;
            for (const auto& [d, b] : betti) {
                if (d < 0) continue;
                if (!first) human += ", ";
                first = false;
                human += std::to_string(b);
            }
            human += "]\n";
            std::string csv = "dim,betti\n";
            for (const auto& [d, b] : betti)
                csv += std::to_string(d) + "," + std::to_string(b) + "\n";
            emit(payload, hom_out, human, csv);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

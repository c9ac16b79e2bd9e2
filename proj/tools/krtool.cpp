// Command-line interface for the crystal engine: classical and affine crystal
// generation and export, combinatorial R-matrices, one-dimensional sums,
// splitting maps, parabolic Lusztig q-analogues, and verification suites.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kr/io.hpp"
#include "kr/split.hpp"
#include "kr/verify.hpp"

using namespace kr;

namespace {

AffineType parse_type(const std::string& tag, int rank) {
    if (tag == "A") return {Kind::None, rank};
    if (tag == "C") return {Kind::Two, rank};
    if (tag == "D") return {Kind::OneOne, rank};
    if (tag == "D2") return {Kind::One, rank};
    throw CLI::ValidationError("--type", "expected one of A, C, D, D2");
}

RectangleList parse_tensors(const std::string& text) {
    RectangleList out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto x = tok.find('x');
        if (x == std::string::npos) throw CLI::ValidationError("--tensors", "expected rxs pairs");
        out.push_back({std::stoi(tok.substr(0, x)), std::stoi(tok.substr(x + 1))});
    }
    if (out.empty()) throw CLI::ValidationError("--tensors", "empty list");
    return out;
}

void emit_graph(const std::string& emit, const CrystalGraph& g, const std::vector<int>& sigma) {
    if (emit == "dot")
        write_graph_dot(std::cout, g);
    else if (emit == "json")
        write_graph_json(std::cout, g, sigma);
    else {
        std::cout << g.size() << " vertices\n";
        for (int v = 0; v < g.size(); ++v) std::cout << v << ": " << g.element(v).pretty() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics engine for nonexceptional affine crystal graphs"};
    app.require_subcommand(1);

    std::string type_tag = "D";
    int rank = 5, rr = 1, ss = 1, jobs = 1;
    std::string tensors, lambda_text, emit = "text", suite = "all";
    std::string cache_dir = default_cache_dir();
    std::size_t max_vertices = 4000000;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--type", type_tag, "affine family: A, C, D, D2 (D_{n+1}^(2))");
        cmd->add_option("--rank", rank, "classical rank (letters for type A)");
        cmd->add_option("--emit", emit, "output format: text, json, dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        cmd->add_option("--cache-dir", cache_dir, "cache directory (default KR_CACHE_DIR)");
        cmd->add_option("--max-vertices", max_vertices, "generation guard");
        cmd->add_option("--jobs", jobs, "worker threads for suites");
    };

    auto* c_crystal = app.add_subcommand("crystal", "generate a classical highest weight crystal");
    add_common(c_crystal);
    c_crystal->add_option("--lambda", lambda_text, "highest weight as a comma list")->required();

    auto* c_kr = app.add_subcommand("kr", "generate a KR crystal with zero arrows and sigma");
    add_common(c_kr);
    c_kr->add_option("--r", rr, "row index");
    c_kr->add_option("--s", ss, "width");

    auto* c_rmatrix = app.add_subcommand("rmatrix", "combinatorial R-matrix of a two-factor product");
    add_common(c_rmatrix);
    c_rmatrix->add_option("--tensors", tensors, "two factors r1xs1,r2xs2")->required();

    auto* c_ods = app.add_subcommand("onedimsum", "graded classical multiplicities of a tensor");
    add_common(c_ods);
    c_ods->add_option("--tensors", tensors, "factors r1xs1,...")->required();
    c_ods->add_option("--lambda", lambda_text, "restrict to one weight");

    auto* c_split = app.add_subcommand("split", "split a tensor into rows and boxes");
    add_common(c_split);
    c_split->add_option("--tensors", tensors, "factors r1xs1,...")->required();

    auto* c_lusztig = app.add_subcommand("lusztig", "parabolic Lusztig q-analogues");
    std::string group_tag = "GL", mu_text;
    int lgn = 3;
    bool stable = false;
    c_lusztig->add_option("--group", group_tag, "GL, Sp, SOodd, SOeven");
    c_lusztig->add_option("--rank", lgn, "rank n");
    c_lusztig->add_option("--lambda", lambda_text, "highest weight")->required();
    c_lusztig->add_option("--mu", mu_text, "mu as blocks a,b|c,d|...")->required();
    c_lusztig->add_flag("--stable", stable, "use the symmetric-group sum");
    c_lusztig->add_option("--emit", emit, "text or json");

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    add_common(c_verify);
    c_verify
        ->add_option("--suite", suite,
                     "decomposition, xk, transpose, sigma, energy, splitting, golden, all")
        ->check(CLI::IsMember(
            {"decomposition", "xk", "transpose", "sigma", "energy", "splitting", "golden", "all"}));
    bool verbose = false;
    c_verify->add_flag("--verbose", verbose, "print passing checks too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_crystal->parsed()) {
            AffineType type = parse_type(type_tag, rank);
            auto g = classical_crystal(type.classical(), Partition::parse(lambda_text),
                                       max_vertices);
            emit_graph(emit, g, {});
            return 0;
        }
        if (c_kr->parsed()) {
            AffineType type = parse_type(type_tag, rank);
            auto k = KRCrystal::get(type, rr, ss);
            if (!cache_dir.empty()) {
                if (!check_kr_cache(cache_dir, *k)) save_kr_cache(cache_dir, *k);
                std::cerr << "cache: " << cache_path(cache_dir, type, rr, ss) << "\n";
            }
            emit_graph(emit, k->graph, k->sigma_map);
            return 0;
        }
        if (c_rmatrix->parsed()) {
            AffineType type = parse_type(type_tag, rank);
            RectangleList R = parse_tensors(tensors);
            if (R.size() != 2) throw std::invalid_argument("rmatrix expects two factors");
            auto rm = RMatrix::get(KRCrystal::get(type, R[0].rows, R[0].cols),
                                   KRCrystal::get(type, R[1].rows, R[1].cols));
            if (emit == "json") {
                std::cout << "{\"schema\": " << kSchemaVersion << ", \"pairs\": [\n";
                for (int v = 0; v < rm->source->graph.size(); ++v) {
                    std::cout << (v ? ",\n" : "") << "  {\"from\": "
                              << element_json(rm->source->graph.element(v)) << ", \"to\": "
                              << element_json(rm->target->graph.element(rm->image[v]))
                              << ", \"hbar\": " << rm->hbar[v] << "}";
                }
                std::cout << "\n]}\n";
            } else {
                for (int v = 0; v < rm->source->graph.size(); ++v)
                    std::cout << rm->source->graph.element(v).pretty() << "  ->  "
                              << rm->target->graph.element(rm->image[v]).pretty()
                              << "   Hbar=" << rm->hbar[v] << "\n";
            }
            return 0;
        }
        if (c_ods->parsed()) {
            AffineType type = parse_type(type_tag, rank);
            auto t = TensorProduct::of(type, parse_tensors(tensors));
            if (!lambda_text.empty()) {
                Laurent p = one_dim_sum(*t, Partition::parse(lambda_text));
                std::cout << (emit == "json" ? laurent_json(p) : p.to_string()) << "\n";
                return 0;
            }
            for (const auto& [lam, p] : one_dim_sums(*t)) {
                if (emit == "json")
                    std::cout << "{\"lambda\": \"" << lam.to_string() << "\", \"sum\": "
                              << laurent_json(p) << "}\n";
                else
                    std::cout << lam.to_string() << ": " << p.to_string() << "\n";
            }
            return 0;
        }
        if (c_split->parsed()) {
            AffineType type = parse_type(type_tag, rank);
            auto t = TensorProduct::of(type, parse_tensors(tensors));
            auto sm = box_split_all(t);
            for (int v = 0; v < t->graph.size(); ++v)
                std::cout << t->graph.element(v).pretty() << "  ->  "
                          << sm.target->graph.element(sm.image[v]).pretty() << "\n";
            return 0;
        }
        if (c_lusztig->parsed()) {
            Group g;
            if (group_tag == "GL")
                g = Group::GL;
            else if (group_tag == "Sp")
                g = Group::Sp;
            else if (group_tag == "SOodd")
                g = Group::SO_odd;
            else if (group_tag == "SOeven")
                g = Group::SO_even;
            else
                throw std::invalid_argument("bad group tag");
            std::vector<int> mu;
            std::vector<int> eta;
            std::istringstream is(mu_text);
            std::string block;
            while (std::getline(is, block, '|')) {
                int len = 0;
                std::istringstream bs(block);
                std::string tok;
                while (std::getline(bs, tok, ',')) {
                    mu.push_back(std::stoi(tok));
                    ++len;
                }
                eta.push_back(len);
            }
            while (static_cast<int>(mu.size()) < lgn) {
                mu.push_back(0);
                eta.push_back(1);
            }
            LeviSelection levi{eta, lgn};
            Partition lam = Partition::parse(lambda_text);
            Laurent p = stable ? stable_lusztig_q(g, lgn, levi, lam, mu)
                               : lusztig_q(g, lgn, levi, lam, mu);
            std::cout << (emit == "json" ? laurent_json(p) : p.to_string()) << "\n";
            return 0;
        }
        if (c_verify->parsed()) {
            Envelope env;
            std::vector<SuiteReport> reports;
            if (suite == "all") {
                reports = verify_all(env, jobs);
            } else if (suite == "decomposition") {
                reports.push_back(verify_classical_decomposition(env));
                reports.push_back(verify_coenergy(env));
                reports.push_back(verify_decomposition_theorem(env));
            } else if (suite == "xk") {
                reports.push_back(verify_shimozono(env));
                reports.push_back(verify_xk(env));
                reports.push_back(verify_positivity(env));
            } else if (suite == "transpose") {
                reports.push_back(verify_transpose(env));
            } else if (suite == "sigma") {
                reports.push_back(verify_sigma(env));
            } else if (suite == "energy") {
                reports.push_back(verify_energy_relations(env));
                reports.push_back(verify_rmatrix(env));
            } else if (suite == "splitting") {
                reports.push_back(verify_splitting(env));
            } else if (suite == "golden") {
                reports.push_back(verify_golden(env));
            }
            bool pass = true;
            for (const auto& r : reports) pass = pass && r.pass();
            if (emit == "json")
                std::cout << report_json(reports);
            else
                for (const auto& r : reports) std::cout << report_text(r, verbose);
            return pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

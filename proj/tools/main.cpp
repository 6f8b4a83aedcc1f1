#include <CLI11.hpp>
#include <iostream>

#include "json.hpp"
#include "qrs/canonical.hpp"
#include "qrs/expr.hpp"
#include "qrs/modules.hpp"
#include "qrs/verify.hpp"

using namespace qrs;
using nlohmann::ordered_json;

namespace {

std::optional<Parent> parse_parent(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "U") return Parent::U;
    if (s == "B") return Parent::B;
    if (s == "Bbar") return Parent::Bbar;
    if (s == "Env") return Parent::Env;
    throw ConfigError("unknown parent '" + s + "' (U, B, Bbar, Env)");
}

CoproductKind parse_variant(const std::string& s) {
    if (s == "std") return CoproductKind::Std;
    if (s == "right") return CoproductKind::Right;
    if (s == "left") return CoproductKind::Left;
    if (s == "bottom") return CoproductKind::Bottom;
    throw ConfigError("unknown coproduct variant '" + s + "'");
}

Weight parse_beta(const std::string& s, int rank) {
    auto v = parse_lambda(s);
    if (static_cast<int>(v.size()) != rank)
        throw ConfigError("weight has " + std::to_string(v.size()) +
                          " coordinates, expected " + std::to_string(rank));
    return v;
}

ordered_json gram_json(const GramData& g) {
    ordered_json j;
    j["beta"] = g.beta;
    auto words = ordered_json::array();
    for (const auto& w : g.plus_basis) {
        std::string s;
        for (uint8_t i : w) s += "e[" + std::to_string(i + 1) + "]";
        words.push_back(s);
    }
    j["plus_basis"] = words;
    auto mwords = ordered_json::array();
    for (const auto& w : g.minus_basis) {
        std::string s;
        for (uint8_t i : w) s += "f[" + std::to_string(i + 1) + "]";
        mwords.push_back(s);
    }
    j["minus_basis"] = mwords;
    auto rows = ordered_json::array();
    for (const auto& row : g.gram) {
        auto jr = ordered_json::array();
        for (const auto& x : row) jr.push_back(x.str());
        rows.push_back(jr);
    }
    j["gram"] = rows;
    j["det"] = g.det.str();
    return j;
}

ordered_json graded_json(const GradedElement& g) {
    ordered_json j;
    j["cutoff"] = g.cutoff;
    auto grades = ordered_json::array();
    for (const auto& [w, e] : g.grades) {
        ordered_json entry;
        entry["grade"] = w;
        entry["element"] = e.str();
        grades.push_back(std::move(entry));
    }
    j["grades"] = std::move(grades);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "workbench for two-parameter quantum groups and their Kashiwara algebras:\n"
        "exact normal forms, skew Hopf pairing, canonical tensors, quantum Casimir,\n"
        "extremal projector, and highest-weight module checks over Q(r,s)"};
    app.require_subcommand(1);

    Config cfg;
    std::string config_file, parent_str, lambda_str;
    app.add_option("--type", cfg.type, "cartan type (A1, A2, A3, ..., B2, G2)")
        ->capture_default_str();
    app.add_option("--height", cfg.height, "truncation height L")->capture_default_str();
    app.add_option("--depth", cfg.depth, "module depth D")->capture_default_str();
    app.add_option("--lambda", lambda_str, "highest weight, comma-separated root coords");
    app.add_option("--seed", cfg.seed, "seed for randomized property instances")
        ->capture_default_str();
    app.add_flag("--json", cfg.json, "emit JSON instead of text");
    app.add_option("--config", config_file, "key=value config file (flags win)");

    // nf
    std::string nf_expr;
    auto* nf = app.add_subcommand("nf", "normal form of a DSL expression");
    nf->add_option("expr", nf_expr, "expression, e.g. 'E[1]*f[1]'")->required();
    nf->add_option("--parent", parent_str, "force parent algebra (U, B, Bbar, Env)");

    // pair
    std::string pair_x, pair_y;
    auto* pairc = app.add_subcommand("pair", "skew Hopf pairing of two expressions");
    pairc->add_option("x", pair_x, "element of the e/w half")->required();
    pairc->add_option("y", pair_y, "element of the f/v half")->required();

    // gram / dual
    std::string beta_str;
    auto* gramc = app.add_subcommand("gram", "gram matrix of a weight space");
    gramc->add_option("beta", beta_str, "weight, e.g. 1,1")->required();
    auto* dualc = app.add_subcommand("dual", "dual basis of a weight space");
    dualc->add_option("beta", beta_str, "weight, e.g. 1,1")->required();

    // coprod / antipode / phi / psi
    std::string hopf_expr, variant_str = "std";
    auto* coprodc = app.add_subcommand("coprod", "apply a coproduct");
    coprodc->add_option("expr", hopf_expr)->required();
    coprodc->add_option("--variant", variant_str, "std, right, left, bottom")
        ->capture_default_str();
    bool inverse_flag = false;
    auto* antipodec = app.add_subcommand("antipode", "apply the antipode of U");
    antipodec->add_option("expr", hopf_expr)->required();
    antipodec->add_flag("--inverse", inverse_flag, "apply the inverse antipode");
    auto* phic = app.add_subcommand("phi", "apply the anti-isomorphism into B");
    phic->add_option("expr", hopf_expr)->required();
    auto* psic = app.add_subcommand("psi", "apply the Casimir twisting automorphism");
    psic->add_option("expr", hopf_expr)->required();

    // gamma / casimir
    bool closed_form = false;
    auto* gammac = app.add_subcommand("gamma", "extremal projector grades");
    gammac->add_flag("--closed-form", closed_form, "rank-one closed form");
    auto* casimirc = app.add_subcommand("casimir", "quantum Casimir grades");

    // verma
    std::string verma_verify;
    auto* vermac = app.add_subcommand("verma", "highest-weight module report");
    vermac->add_option("--verify", verma_verify, "'all' runs the module checks")
        ->capture_default_str();

    // verify
    std::string suite;
    auto* verifyc = app.add_subcommand("verify", "run a verification suite");
    verifyc->add_option("suite", suite,
                        "relations|hopf|pairing|lemma51|prop51|casimir|thm61|categoryO|all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_file.empty()) {
            Config base = load_config_file(config_file);
            // flags already parsed into cfg win over the file
            Config merged = base;
            if (app.count("--type")) merged.type = cfg.type;
            if (app.count("--height")) merged.height = cfg.height;
            if (app.count("--depth")) merged.depth = cfg.depth;
            if (app.count("--seed")) merged.seed = cfg.seed;
            merged.json = cfg.json;
            cfg = merged;
        }
        if (!lambda_str.empty()) cfg.lambda = parse_lambda(lambda_str);
        if (cfg.height < 0 || cfg.height > 12) throw ConfigError("height out of range");
        if (cfg.depth < 1 || cfg.depth > 12) throw ConfigError("depth out of range");

        Algebra alg(CartanData::make(cfg.type));

        if (*nf) {
            Element x = parse_element(alg, nf_expr, parse_parent(parent_str));
            std::cout << alg.normal_form(x).str() << "\n";
            return 0;
        }
        if (*pairc) {
            SkewPairing pr(alg);
            Element x = parse_element(alg, pair_x, Parent::U);
            Element y = parse_element(alg, pair_y, Parent::U);
            std::cout << pr.pair(x, y).str() << "\n";
            return 0;
        }
        if (*gramc || *dualc) {
            SkewPairing pr(alg);
            const Weight beta = parse_beta(beta_str, alg.rank());
            const GramData& g = pr.gram(beta);
            if (*gramc) {
                if (cfg.json) {
                    std::cout << gram_json(g).dump(2) << "\n";
                } else {
                    std::cout << "weight " << weight_str(beta) << ", dimension "
                              << g.plus_basis.size() << "\n";
                    for (const auto& row : g.gram) {
                        for (const auto& x : row) std::cout << "  " << x.str();
                        std::cout << "\n";
                    }
                    std::cout << "det = " << g.det.str() << "\n";
                }
            } else {
                const auto duals = pr.dual_basis(beta);
                if (cfg.json) {
                    ordered_json j;
                    j["beta"] = beta;
                    auto arr = ordered_json::array();
                    for (const auto& y : duals) arr.push_back(y.str());
                    j["dual_basis"] = arr;
                    std::cout << j.dump(2) << "\n";
                } else {
                    for (const auto& y : duals) std::cout << y.str() << "\n";
                }
            }
            return 0;
        }
        if (*coprodc) {
            const CoproductKind kind = parse_variant(variant_str);
            Element x = parse_element(alg, hopf_expr, coproduct_source(kind));
            std::cout << coproduct(alg, kind, x).str() << "\n";
            return 0;
        }
        if (*antipodec) {
            Element x = parse_element(alg, hopf_expr, Parent::U);
            std::cout << antipode(alg, x,
                                  inverse_flag ? AntipodeDir::SInv : AntipodeDir::S)
                             .str()
                      << "\n";
            return 0;
        }
        if (*phic) {
            Element x = parse_element(alg, hopf_expr, Parent::Bbar);
            std::cout << phi(alg, x).str() << "\n";
            return 0;
        }
        if (*psic) {
            Element x = parse_element(alg, hopf_expr, Parent::U);
            std::cout << psi(alg, x).str() << "\n";
            return 0;
        }
        if (*gammac) {
            SkewPairing pr(alg);
            Canonical can(pr);
            Projector proj(can);
            const GradedElement g =
                closed_form ? proj.gamma_closed_rank1(cfg.height) : proj.gamma(cfg.height);
            if (cfg.json) {
                std::cout << graded_json(g).dump(2) << "\n";
            } else {
                for (const auto& [w, e] : g.grades)
                    std::cout << "grade " << weight_str(w) << ": " << e.str() << "\n";
            }
            return 0;
        }
        if (*casimirc) {
            SkewPairing pr(alg);
            Canonical can(pr);
            const GradedElement g = can.casimir(cfg.height);
            if (cfg.json) {
                std::cout << graded_json(g).dump(2) << "\n";
            } else {
                for (const auto& [w, e] : g.grades)
                    std::cout << "grade " << weight_str(w) << ": " << e.str() << "\n";
            }
            return 0;
        }
        if (*vermac) {
            const Weight lam = cfg.lambda ? *cfg.lambda : weight_zero(alg.rank());
            if (static_cast<int>(lam.size()) != alg.rank())
                throw ConfigError("lambda has wrong rank");
            VermaModule M(alg, lam, cfg.depth);
            if (verma_verify == "all") {
                Config c2 = cfg;
                c2.lambda = lam;
                Report rep = run_suite("categoryO", c2);
                std::cout << (cfg.json ? rep.to_json() + "\n" : rep.to_text());
                return rep.ok() ? 0 : 1;
            }
            ordered_json j;
            j["lambda"] = lam;
            j["depth"] = cfg.depth;
            auto slices = ordered_json::array();
            for (const auto& beta : alg.positive_weights_upto(cfg.depth)) {
                ordered_json s;
                s["beta"] = beta;
                s["dim"] = M.slice_dim(beta);
                s["kernel_dim"] = M.kernel_slice(beta).size();
                slices.push_back(std::move(s));
            }
            j["slices"] = std::move(slices);
            if (cfg.json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "lambda " << weight_str(lam) << ", depth " << cfg.depth
                          << "\n";
                for (const auto& s : j["slices"])
                    std::cout << "  slice beta=" << s["beta"].dump()
                              << " dim=" << s["dim"] << " kernel=" << s["kernel_dim"]
                              << "\n";
            }
            return 0;
        }
        if (*verifyc) {
            Report rep = run_suite(suite, cfg);
            std::cout << (cfg.json ? rep.to_json() + "\n" : rep.to_text());
            return rep.ok() ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const WrongType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

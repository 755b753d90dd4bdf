#include "CLI11.hpp"

#include "w3/acceptance.hpp"
#include "w3/expr.hpp"
#include "w3/freefield.hpp"
#include "w3/reports.hpp"
#include "w3/singvec.hpp"
#include "w3/winf.hpp"
#include "w3/zhu.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <utility>

namespace {

using nlohmann::json;
using w3::exact::Poly;
using w3::exact::Rational;
using w3::exact::Var;

void emit(const json& report, bool asJson) {
    if (asJson) {
        std::cout << report.dump(2) << std::endl;
        return;
    }
    std::cout << report["command"].get<std::string>() << " (exact arithmetic)\n"
              << report["results"].dump(2) << std::endl;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for a weight-3 extension of the Virasoro algebra at central charge -2:\n"
                 "singular vectors, the associative quotient and its weight curve, free-field\n"
                 "realizations, and the centrally extended algebra of circle differential operators."};
    app.require_subcommand(1);
    int exitCode = 0;

    // ---- sing -------------------------------------------------------------
    auto* sing = app.add_subcommand("sing", "Kernel of the positive modes at a graded level");
    int singLevel = 0;
    std::string singC = "-2", singModule = "vacuum", singT = "0", singW = "0";
    bool singJson = false;
    sing->add_option("--level", singLevel, "graded level to scan")->required();
    sing->add_option("--c", singC, "central charge (rational, default -2)");
    sing->add_option("--module", singModule, "vacuum | verma")
        ->check(CLI::IsMember({"vacuum", "verma"}));
    sing->add_option("--t", singT, "highest weight of L(0) (verma only, default 0)");
    sing->add_option("--w", singW, "highest weight of Wt(0) (verma only, default 0)");
    sing->add_flag("--json", singJson, "machine-readable report");
    sing->callback([&] {
        Rational c = Rational::parse(singC);
        auto m = singModule == "vacuum" ? w3::core::W3Module::vacuum(c) : w3::core::W3Module::verma(c);
        std::optional<std::pair<Rational, Rational>> weights;
        if (singModule == "verma") weights = {{Rational::parse(singT), Rational::parse(singW)}};
        auto rep = w3::singvec::find_singular(m, singLevel, weights);
        json basis = json::array();
        for (const auto& v : rep.basis) basis.push_back(w3::core::print_vector(v));
        json modes = json::array();
        for (const auto& s : rep.checkedModes) modes.push_back(w3::core::mode_str(s));
        emit(w3::reports::make_report(
                 "sing", json{{"level", singLevel}, {"c", singC}, {"module", singModule}},
                 json{{"level", rep.level},
                      {"kernelDim", rep.kernelDim},
                      {"basis", basis},
                      {"checkedModes", modes}}),
             singJson);
    });

    // ---- zhu --------------------------------------------------------------
    auto* zhuCmd = app.add_subcommand("zhu", "Associative-quotient computations");
    zhuCmd->require_subcommand(1);

    auto* zhuReduce = zhuCmd->add_subcommand("reduce", "Image of a vacuum-module vector in the quotient");
    std::string reduceExpr;
    bool reduceJson = false;
    zhuReduce->add_option("--expr", reduceExpr, "vector expression, e.g. \"L(-2)L(-2)vac + 2*L(-4)vac\"")
        ->required();
    zhuReduce->add_flag("--json", reduceJson, "machine-readable report");
    zhuReduce->callback([&] {
        auto m = w3::core::W3Module::vacuum(Rational(-2));
        auto v = w3::core::parse_vector(reduceExpr, m);
        Poly peel = w3::zhu::reduce_to_poly(v, w3::zhu::Strategy::LeftmostPeel);
        Poly star = w3::zhu::reduce_to_poly(v, w3::zhu::Strategy::StarExpansion);
        bool agree = peel == star;
        if (!agree) exitCode = 1;
        emit(w3::reports::make_report("zhu reduce", json{{"expr", reduceExpr}},
                                      json{{"image", peel.str()},
                                           {"imageAlternateStrategy", star.str()},
                                           {"strategiesAgree", agree}}),
             reduceJson);
    });

    auto* zhuCurve = zhuCmd->add_subcommand("curve", "Generator of the quotient relation ideal");
    bool curveJson = false;
    zhuCurve->add_flag("--json", curveJson, "machine-readable report");
    zhuCurve->callback([&] {
        auto rep = w3::zhu::curve_report();
        if (!rep.matches) exitCode = 1;
        emit(w3::reports::make_report("zhu curve", json::object(),
                                      json{{"generator", rep.generator.str()},
                                           {"singularImage", rep.vsImage.str()},
                                           {"partnerImage", rep.vspImage.str()},
                                           {"matches", rep.matches}}),
             curveJson);
    });

    // ---- curve ------------------------------------------------------------
    auto* curveCmd = app.add_subcommand("curve", "Rational parametrization of the weight curve");
    curveCmd->require_subcommand(1);
    auto* curveWeights = curveCmd->add_subcommand("weights", "Weights (t, w) at a parameter value");
    std::string curveAlpha;
    bool curveWJson = false;
    curveWeights->add_option("--alpha", curveAlpha, "rational parameter")->required();
    curveWeights->add_flag("--json", curveWJson, "machine-readable report");
    curveWeights->callback([&] {
        auto [t, w] = w3::zhu::weight_from_alpha(Rational::parse(curveAlpha));
        Rational partner = w3::zhu::iso_partner(Rational::parse(curveAlpha));
        emit(w3::reports::make_report("curve weights", json{{"alpha", curveAlpha}},
                                      json{{"t", t.str()},
                                           {"w", w.str()},
                                           {"isoPartnerAlpha", partner.str()}}),
             curveWJson);
    });

    // ---- ff ---------------------------------------------------------------
    auto* ff = app.add_subcommand("ff", "Free-field realizations");
    ff->require_subcommand(1);

    auto* ffWeights = ff->add_subcommand("weights", "Highest weight of the rank-one Fock module");
    std::string ffAlpha;
    bool ffWJson = false;
    ffWeights->add_option("--alpha", ffAlpha, "rational parameter, or 'sym' for a symbolic one")->required();
    ffWeights->add_flag("--json", ffWJson, "machine-readable report");
    ffWeights->callback([&] {
        Poly alpha = ffAlpha == "sym" ? Poly::variable(Var::alpha) : Poly(Rational::parse(ffAlpha));
        auto [t, w] = w3::freefield::highest_weight(alpha);
        auto [tc, wc] = w3::zhu::weight_from_alpha(alpha);
        bool agree = t == tc && w == wc;
        if (!agree) exitCode = 1;
        emit(w3::reports::make_report("ff weights", json{{"alpha", ffAlpha}},
                                      json{{"t", t.str()}, {"w", w.str()}, {"agreesWithCurve", agree}}),
             ffWJson);
    });

    auto* ffVerify = ff->add_subcommand("verify", "Check the realized commutators on graded components");
    int ffMaxLevel = 4;
    bool ffBosonization = false, ffVJson = false;
    ffVerify->add_option("--max-level", ffMaxLevel, "largest graded level checked (default 4)");
    ffVerify->add_flag("--bosonization", ffBosonization, "also check the charge-0 boson-fermion dictionary");
    ffVerify->add_flag("--json", ffVJson, "machine-readable report");
    ffVerify->callback([&] {
        auto rel = w3::freefield::verify_w3_relations(ffMaxLevel);
        json results{{"relations",
                      json{{"maxLevel", rel.maxLevel},
                           {"pairsChecked", rel.pairsChecked},
                           {"failures", rel.failures},
                           {"ok", rel.ok()}}}};
        bool ok = rel.ok();
        if (ffBosonization) {
            auto bos = w3::freefield::verify_bosonization(ffMaxLevel);
            results["bosonization"] = json{{"maxLevel", bos.maxLevel},
                                           {"bosonDims", bos.bosonDims},
                                           {"fermionDims", bos.fermionDims},
                                           {"dimsMatch", bos.dimsMatch},
                                           {"invertible", bos.invertible},
                                           {"intertwines", bos.intertwines},
                                           {"ok", bos.ok()}};
            ok = ok && bos.ok();
        }
        if (!ok) exitCode = 1;
        emit(w3::reports::make_report(
                 "ff verify", json{{"maxLevel", ffMaxLevel}, {"bosonization", ffBosonization}}, results),
             ffVJson);
    });

    // ---- winf -------------------------------------------------------------
    auto* winfCmd = app.add_subcommand("winf", "Centrally extended circle differential operators");
    winfCmd->require_subcommand(1);

    auto* jacobi = winfCmd->add_subcommand("jacobi", "Seeded antisymmetry/Jacobi property check");
    int jacSamples = 100, jacMaxDeg = 4;
    std::uint64_t jacSeed = 0;
    bool jacJson = false;
    jacobi->add_option("--samples", jacSamples, "number of random triples (default 100)");
    jacobi->add_option("--seed", jacSeed, "RNG seed (default 0)");
    jacobi->add_option("--max-deg", jacMaxDeg, "maximal polynomial degree in D (default 4)");
    jacobi->add_flag("--json", jacJson, "machine-readable report");
    jacobi->callback([&] {
        auto rep = w3::winf::verify_jacobi(jacSamples, jacSeed, jacMaxDeg);
        if (!rep.ok()) exitCode = 1;
        emit(w3::reports::make_report(
                 "winf jacobi",
                 json{{"samples", jacSamples}, {"seed", jacSeed}, {"maxDeg", jacMaxDeg}},
                 json{{"samples", rep.samples},
                      {"antisymmetryFailures", rep.antisymmetryFailures},
                      {"jacobiFailures", rep.jacobiFailures},
                      {"ok", rep.ok()}}),
             jacJson);
    });

    auto* dsr = winfCmd->add_subcommand("dsr", "Reduction central charge c_n at level k");
    int dsrN = 3;
    std::string dsrK;
    bool dsrJson = false;
    dsr->add_option("--n", dsrN, "rank parameter n >= 2")->required();
    dsr->add_option("--k", dsrK, "level (rational; write --k=-3/2 for negatives)")->required();
    dsr->add_flag("--json", dsrJson, "machine-readable report");
    dsr->callback([&] {
        Rational k = Rational::parse(dsrK);
        Rational c = w3::winf::dsr_central_charge(dsrN, k);
        // The same charge arises at the reciprocal shifted level.
        Rational partner = (k + Rational(dsrN)).inverse() - Rational(dsrN);
        emit(w3::reports::make_report("winf dsr", json{{"n", dsrN}, {"k", dsrK}},
                                      json{{"c", c.str()},
                                           {"partnerK", partner.str()},
                                           {"partnerC", w3::winf::dsr_central_charge(dsrN, partner).str()}}),
             dsrJson);
    });

    auto* classifyCmd = winfCmd->add_subcommand("classify", "Two-parameter label of an irreducible module");
    std::string classifyAlpha, classifyS = "0";
    bool classifyJson = false;
    classifyCmd->add_option("--alpha", classifyAlpha, "weight-curve parameter (alpha = 1 is excluded; use 0)")
        ->required();
    classifyCmd->add_option("--s", classifyS, "charge of the rank-one factor (default 0)");
    classifyCmd->add_flag("--json", classifyJson, "machine-readable report");
    classifyCmd->callback([&] {
        auto label = w3::winf::classify(Rational::parse(classifyAlpha), Rational::parse(classifyS));
        emit(w3::reports::make_report("winf classify",
                                      json{{"alpha", classifyAlpha}, {"s", classifyS}},
                                      json{{"alpha", label.alpha.str()},
                                           {"s", label.s.str()},
                                           {"t", label.t.str()},
                                           {"w", label.w.str()}}),
             classifyJson);
    });

    // ---- verify-all ---------------------------------------------------------
    auto* verifyAll = app.add_subcommand("verify-all", "Run the complete acceptance suite");
    bool verifyJson = false;
    verifyAll->add_flag("--json", verifyJson, "machine-readable report");
    verifyAll->callback([&] {
        auto results = w3::acceptance::run_all();
        bool allPass = true;
        json arr = json::array();
        for (const auto& r : results) {
            allPass = allPass && r.pass;
            arr.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        if (!allPass) exitCode = 1;
        if (verifyJson) {
            emit(w3::reports::make_report("verify-all", json::object(),
                                          json{{"criteria", arr}, {"allPass", allPass}}),
                 true);
        } else {
            for (const auto& r : results)
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "\n";
            std::cout << (allPass ? "all criteria passed" : "SOME CRITERIA FAILED") << std::endl;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return exitCode;
}

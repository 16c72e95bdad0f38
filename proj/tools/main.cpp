#include "simplex/centers.hpp"
#include "simplex/cevians.hpp"
#include "simplex/classify.hpp"
#include "simplex/constructions.hpp"
#include "simplex/corpus.hpp"
#include "simplex/json_io.hpp"
#include "simplex/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace simplex;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitGeneration = 4;

struct GlobalFlags {
    Tolerance tol;
    std::uint64_t seed = 0;
    int samples = 0;
    std::string format = "json";
    bool quiet = false;
};

int json_indent(const GlobalFlags& g) { return g.format == "jsonl" ? -1 : 2; }

void emit(const Json& doc, const GlobalFlags& g) {
    if (!g.quiet) std::cout << serialize(doc, json_indent(g)) << '\n';
}

struct PostCheck {
    std::string name;
    bool ok = false;
    double value = 0.0;
    double limit = 0.0;
};

int report_post_checks(const std::vector<PostCheck>& checks, bool quiet) {
    bool all = true;
    for (const PostCheck& c : checks) {
        all = all && c.ok;
        if (!quiet)
            std::cerr << (c.ok ? "pass " : "FAIL ") << c.name << " (value "
                      << format_double(c.value) << ", limit " << format_double(c.limit)
                      << ")\n";
    }
    return all ? kExitPass : kExitVerificationFail;
}

int run_analyze(const std::string& path, const GlobalFlags& g) {
    Simplex s = [&] {
        try {
            return load_simplex(path, g.tol);
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "parse error: " << e.what() << '\n';
            std::exit(kExitUsage);
        } catch (const std::runtime_error& e) {
            std::cerr << "input error: " << e.what() << '\n';
            std::exit(kExitUsage);
        }
    }();
    Json doc;
    doc["centers"] = center_report_document(all_centers(s, g.tol));
    doc["classification"] = classification_document(classify(s, g.tol));
    emit(doc, g);
    return kExitPass;
}

struct ConstructParams {
    double x = 0.0;
    bool x_given = false;
    int d = 0;
    bool d_given = false;
    int r = 2;
    double t = 0.0;
    bool t_given = false;
    double a = 0.0, b = 0.0, c = 0.0;
    bool abc_given = false;
    double edge = 1.0;
};

double center_scale(const Simplex& s, const Tolerance& tol) {
    return 1.0 + circumsphere(s, tol).radius;
}

int run_construct(const std::string& name, const ConstructParams& p,
                  const GlobalFlags& g) {
    std::vector<PostCheck> checks;
    std::optional<Simplex> built;

    if (name == "reg") {
        const int d = p.d_given ? p.d : 3;
        built = regular_simplex(d, p.edge);
        checks.push_back({"regular", is_regular(*built, g.tol), 0.0, 0.0});
    } else if (name == "rhombus-fold") {
        if (!p.t_given) {
            std::cerr << "rhombus-fold requires --t\n";
            return kExitUsage;
        }
        built = rhombus_fold_tetrahedron(p.t);
        const ClassificationReport c = classify(*built, g.tol);
        checks.push_back({"tetrahedron_valid", !c.degenerate, volume(*built), 0.0});
    } else if (name == "thm2.2") {
        const double t = equal_facet_inradius_parameter();
        built = rhombus_fold_tetrahedron(t);
        const ClassificationReport c = classify(*built, g.tol);
        checks.push_back({"facet_inradii_equal", c.facet_inradii_all_equal,
                          c.facet_inradius_spread, g.tol.rel});
        checks.push_back(
            {"not_equifacetal", !c.equifacetal, c.equifacetal_mismatch, 0.0});
    } else if (name == "equifacetal") {
        if (!p.abc_given) {
            std::cerr << "equifacetal requires --a --b --c\n";
            return kExitUsage;
        }
        built = equifacetal_tetrahedron(p.a, p.b, p.c);
        const double spread = (centroid(*built) - insphere(*built).center).norm() +
                              (centroid(*built) - circumsphere(*built, g.tol).center).norm();
        checks.push_back({"equifacetal", is_equifacetal(*built, g.tol), 0.0, 0.0});
        checks.push_back({"centers_coincide",
                          spread <= 1e-8 * center_scale(*built, g.tol), spread, 1e-8});
    } else if (name == "thm3.3") {
        std::array<double, 3> abc{};
        if (p.abc_given)
            abc = {p.a, p.b, p.c};
        else
            abc = incenter_fermat_base_scan();
        built = incenter_fermat_coincident(abc[0], abc[1], abc[2], g.tol);
        const FermatPoint f = fermat_torricelli(*built, g.tol);
        const double gap = (insphere(*built).center - f.point).norm() /
                           center_scale(*built, g.tol);
        checks.push_back({"incenter_fermat_coincide", gap <= 1e-8, gap, 1e-8});
        checks.push_back(
            {"not_equifacetal", !is_equifacetal(*built, g.tol), 0.0, 0.0});
    } else if (name == "thm3.4") {
        const int d = p.d_given ? p.d : 4;
        built = equiradial_not_equiareal(d);
        checks.push_back({"equiradial", is_equiradial(*built, g.tol), 0.0, 0.0});
        checks.push_back({"not_equiareal", !is_equiareal(*built, g.tol), 0.0, 0.0});
    } else if (name == "thm4.1") {
        if (!p.x_given) {
            std::cerr << "thm4.1 requires --x\n";
            return kExitUsage;
        }
        const GramFamilyMember member = four_coincident_centers_gram(p.x, g.tol);
        built = member.simplex;
        const Vector gc = centroid(*built);
        double spread = (gc - circumsphere(*built, g.tol).center).norm();
        spread = std::max(spread, (gc - insphere(*built).center).norm());
        spread = std::max(spread, (gc - fermat_torricelli(*built, g.tol).point).norm());
        spread /= center_scale(*built, g.tol);
        checks.push_back({"four_centers_coincide", spread <= 1e-8, spread, 1e-8});
    } else if (name == "thm4.3") {
        built = equiareal_distinct_centers_gram(g.tol).simplex;
        const Vector gc = centroid(*built);
        const Vector cc = circumsphere(*built, g.tol).center;
        const Vector fc = fermat_torricelli(*built, g.tol).point;
        const double sep = std::min({(gc - cc).norm(), (gc - fc).norm(), (cc - fc).norm()});
        checks.push_back({"equiareal", is_equiareal(*built, g.tol), 0.0, 0.0});
        checks.push_back({"three_centers_distinct", sep > 1e-4, sep, 1e-4});
    } else if (name == "thm4.6") {
        built = equiareal_equiradial_not_equifacetal(g.tol);
        checks.push_back({"equiareal", is_equiareal(*built, g.tol), 0.0, 0.0});
        checks.push_back({"equiradial", is_equiradial(*built, g.tol), 0.0, 0.0});
        checks.push_back(
            {"not_equifacetal", !is_equifacetal(*built, g.tol), 0.0, 0.0});
    } else if (name == "thm5.5") {
        const int d = p.d_given ? p.d : 4;
        built = exterior_circumcenter_equal_cevians(d, p.r, g.tol);
        const Vector weights =
            barycentric_coordinates(*built, Vector::Zero(built->dim()));
        const CevianReport cev =
            cevian_feet(*built, Vector::Zero(built->dim()), g.tol);
        checks.push_back(
            {"circumcenter_exterior", weights.minCoeff() < -1e-3, weights.minCoeff(),
             -1e-3});
        checks.push_back(
            {"cevians_equal", cev.length_spread <= 1e-9, cev.length_spread, 1e-9});
    } else {
        std::cerr << "unknown construction '" << name << "'\n";
        return kExitUsage;
    }

    emit(simplex_document(*built), g);
    return report_post_checks(checks, g.quiet);
}

int run_verify(const std::string& id, const GlobalFlags& g) {
    VerificationRun run;
    try {
        run = run_verification(id, g.seed, g.samples, g.tol);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    emit(verification_document(run), g);
    return run.pass ? kExitPass : kExitVerificationFail;
}

int run_random(int dim, int count, double range, const std::string& constraint,
               bool format_given, const GlobalFlags& g) {
    RandomCorpusSpec spec;
    spec.dimension = dim;
    spec.count = count;
    spec.range = range;
    spec.constraint = corpus_constraint_from_string(constraint);
    spec.seed = g.seed;

    Rng rng(spec.seed);
    std::vector<Json> docs;
    for (int i = 0; i < count; ++i) {
        try {
            docs.push_back(simplex_document(draw(spec, rng)));
        } catch (const std::runtime_error& e) {
            std::cerr << "generation failed: " << e.what() << '\n';
            return kExitGeneration;
        }
    }
    // Streams default to one document per line; --format json collects them.
    const bool as_array = format_given && g.format == "json";
    if (!g.quiet) {
        if (as_array) {
            Json all = Json::array();
            for (Json& d : docs) all.push_back(std::move(d));
            std::cout << serialize(all, 2) << '\n';
        } else {
            for (const Json& d : docs) std::cout << serialize(d, -1) << '\n';
        }
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computes classical centers of d-simplices, classifies facial "
                 "structure, builds the reference constructions, and runs "
                 "named verification suites."};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--tol-abs", g.tol.abs, "Absolute tolerance")
        ->capture_default_str();
    app.add_option("--tol-rel", g.tol.rel, "Relative tolerance")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--samples", g.samples,
                   "Sample count for suites (0 uses the suite default)")
        ->capture_default_str();
    auto* format_opt = app.add_option("--format", g.format, "json or jsonl")
                           ->check(CLI::IsMember({"json", "jsonl"}))
                           ->capture_default_str();
    app.add_flag("--quiet", g.quiet, "Suppress report output (exit code only)");

    auto* analyze = app.add_subcommand(
        "analyze", "Read a simplex or Gram JSON file and print center and "
                   "classification reports");
    std::string input_path;
    analyze->add_option("input", input_path, "JSON file")->required();
    analyze->fallthrough();

    auto* construct = app.add_subcommand(
        "construct", "Build a named simplex (reg, rhombus-fold, thm2.2, "
                     "equifacetal, thm3.3, thm3.4, thm4.1, thm4.3, thm4.6, "
                     "thm5.5) and post-verify it");
    std::string construct_name;
    ConstructParams params;
    construct->add_option("name", construct_name, "Construction name")->required();
    auto* xopt = construct->add_option("--x", params.x, "Gram family parameter");
    auto* dopt = construct->add_option("--d", params.d, "Dimension");
    construct->add_option("--r", params.r, "Vertex group size")->capture_default_str();
    auto* topt = construct->add_option("--t", params.t, "Fold edge length");
    auto* aopt = construct->add_option("--a", params.a, "Triangle side a");
    auto* bopt = construct->add_option("--b", params.b, "Triangle side b");
    auto* copt = construct->add_option("--c", params.c, "Triangle side c");
    construct->add_option("--edge", params.edge, "Edge length for reg")
        ->capture_default_str();
    construct->fallthrough();

    auto* verify = app.add_subcommand(
        "verify", "Run a named verification suite (T2.1 ... T5.5, L4.5, L5.2, "
                  "L5.3, L5.4)");
    std::string verify_id;
    verify->add_option("id", verify_id, "Suite identifier")->required();
    verify->fallthrough();

    auto* random_cmd = app.add_subcommand(
        "random", "Generate random simplices as a JSON stream");
    int rdim = 3;
    int rcount = 1;
    double rrange = 1.0;
    std::string rconstraint = "none";
    random_cmd->add_option("--d", rdim, "Dimension")->capture_default_str();
    random_cmd->add_option("--count", rcount, "Number of simplices")
        ->capture_default_str();
    random_cmd->add_option("--range", rrange, "Coordinate range")
        ->capture_default_str();
    random_cmd
        ->add_option("--constraint", rconstraint,
                     "none, unit-circumradius, centered, or acute-base")
        ->check(CLI::IsMember({"none", "unit-circumradius", "centered", "acute-base"}))
        ->capture_default_str();
    random_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    params.x_given = xopt->count() > 0;
    params.d_given = dopt->count() > 0;
    params.t_given = topt->count() > 0;
    params.abc_given = aopt->count() > 0 && bopt->count() > 0 && copt->count() > 0;

    try {
        if (app.got_subcommand(analyze)) return run_analyze(input_path, g);
        if (app.got_subcommand(construct))
            return run_construct(construct_name, params, g);
        if (app.got_subcommand(verify)) return run_verify(verify_id, g);
        if (app.got_subcommand(random_cmd))
            return run_random(rdim, rcount, rrange, rconstraint,
                              format_opt->count() > 0, g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGeneration;
    }
    return kExitUsage;
}

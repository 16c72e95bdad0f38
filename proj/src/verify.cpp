#include "simplex/verify.hpp"

#include "simplex/centers.hpp"
#include "simplex/cevians.hpp"
#include "simplex/classify.hpp"
#include "simplex/constructions.hpp"
#include "simplex/corpus.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace simplex {

namespace {

/// Collects checks and tracks running extrema over sample loops.
struct Suite {
    std::vector<Check> checks;

    void le(const std::string& name, double value, double limit) {
        checks.push_back({name, "<=", value, limit, value <= limit});
    }
    void gt(const std::string& name, double value, double limit) {
        checks.push_back({name, ">", value, limit, value > limit});
    }
    void lt(const std::string& name, double value, double limit) {
        checks.push_back({name, "<", value, limit, value < limit});
    }
    void eq(const std::string& name, double value, double limit) {
        checks.push_back({name, "==", value, limit, value == limit});
    }
    void flag(const std::string& name, bool ok, double value = 0.0) {
        checks.push_back({name, "true", value, 0.0, ok});
    }
};

double max_pairwise_distance(const std::vector<Vector>& pts) {
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            worst = std::max(worst, (pts[i] - pts[j]).norm());
    return worst;
}

double min_pairwise_distance(const std::vector<Vector>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, (pts[i] - pts[j]).norm());
    return best;
}

std::vector<Vector> five_classical_centers(const Simplex& s, const Tolerance& tol) {
    return {centroid(s), insphere(s).center, circumsphere(s, tol).center,
            fermat_torricelli(s, tol).point, monge_point(s, tol)};
}

/// Determinant of the edge-vector Gram matrix of the facet opposite
/// `skip`, formed directly from the vertex Gram matrix. For a k-simplex
/// facet the value equals (k! vol)^2.
double facet_gram_determinant(const Matrix& gram, int skip) {
    std::vector<int> idx;
    for (int i = 0; i < gram.rows(); ++i)
        if (i != skip) idx.push_back(i);
    const int base = idx.front();
    const int k = static_cast<int>(idx.size()) - 1;
    Matrix edges(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            edges(i, j) = gram(idx[i + 1], idx[j + 1]) - gram(idx[i + 1], base) -
                          gram(base, idx[j + 1]) + gram(base, base);
    return edges.determinant();
}

bool throws_invalid_argument(const std::function<void()>& action) {
    try {
        action();
    } catch (const std::invalid_argument&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

int resolved(int samples, int fallback) { return samples > 0 ? samples : fallback; }

// ---------------------------------------------------------------------------
// Tetrahedron equivalences: equifacetal <=> equiareal <=> equal opposite
// edges <=> equal facet perimeters <=> equiradial <=> the five classical
// centers coincide.
VerificationRun suite_t21(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 100);
    Rng rng(seed);
    Suite out;

    double center_spread = 0.0;
    double perimeter_spread = 0.0;
    double opposite_mismatch = 0.0;
    int equifacetal_hits = 0;
    int equiareal_hits = 0;
    int equiradial_hits = 0;
    for (int i = 0; i < n; ++i) {
        const Simplex t = random_equifacetal_tetrahedron(rng);
        center_spread = std::max(center_spread,
                                 max_pairwise_distance(five_classical_centers(t, tol)));
        const ClassificationReport c = classify(t, tol);
        perimeter_spread = std::max(perimeter_spread, relative_spread(c.facet_perimeters));
        for (const auto& pair : c.opposite_edge_pairs)
            opposite_mismatch =
                std::max(opposite_mismatch, std::abs(pair.first - pair.second));
        equifacetal_hits += c.equifacetal ? 1 : 0;
        equiareal_hits += c.equiareal ? 1 : 0;
        equiradial_hits += c.equiradial ? 1 : 0;
    }
    out.le("equifacetal_center_spread_max", center_spread, 1e-8);
    out.le("equifacetal_perimeter_spread_max", perimeter_spread, 1e-12);
    out.le("equifacetal_opposite_edge_mismatch_max", opposite_mismatch, 1e-12);
    out.flag("equifacetal_predicate_all", equifacetal_hits == n, equifacetal_hits);
    out.flag("equifacetal_equiareal_all", equiareal_hits == n, equiareal_hits);
    out.flag("equifacetal_equiradial_all", equiradial_hits == n, equiradial_hits);

    double generic_separation = std::numeric_limits<double>::infinity();
    int generic_predicate_hits = 0;
    for (int i = 0; i < n; ++i) {
        const Simplex t = random_simplex(3, 1.0, rng);
        generic_separation = std::min(
            generic_separation, min_pairwise_distance(five_classical_centers(t, tol)));
        const ClassificationReport c = classify(t, tol);
        if (c.equifacetal || c.equiareal || c.equiradial) ++generic_predicate_hits;
    }
    out.gt("generic_center_separation_min", generic_separation, 1e-6);
    out.flag("generic_predicates_none", generic_predicate_hits == 0,
             generic_predicate_hits);

    VerificationRun run{"T2.1", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// The tetrahedron with edges 1, 1, 1, 1, 1, (3 + sqrt 33)/6 has equal facet
// inradii without being equifacetal.
VerificationRun suite_t22(std::uint64_t seed, int samples, const Tolerance& tol) {
    Suite out;
    const double t = equal_facet_inradius_parameter();
    const double golden = (3.0 + std::sqrt(33.0)) / 6.0;
    out.le("parameter_vs_closed_form", std::abs(t - golden), 1e-12);

    const Simplex s = rhombus_fold_tetrahedron(t);
    const ClassificationReport c = classify(s, tol);
    const auto [rmin, rmax] =
        std::minmax_element(c.facet_inradii.begin(), c.facet_inradii.end());
    out.le("facet_inradius_spread", *rmax - *rmin, 1e-9);
    out.flag("facet_inradii_equal_predicate", c.facet_inradii_all_equal);
    out.flag("equifacetal_false", !c.equifacetal);

    double unit_error = 0.0;
    double long_edge = 0.0;
    const Matrix dist = s.distance_matrix();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            long_edge = std::max(long_edge, dist(i, j));
        }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (dist(i, j) < long_edge - 0.1)
                unit_error = std::max(unit_error, std::abs(dist(i, j) - 1.0));
    out.le("five_unit_edges", unit_error, 1e-12);
    out.le("fold_edge_vs_parameter", std::abs(long_edge - t), 1e-12);

    VerificationRun run{"T2.2", seed, 1, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Incenter = complementary 1-centroid iff the facet inradii are equal.
VerificationRun suite_t23(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 50);
    Rng rng(seed);
    Suite out;

    std::vector<Simplex> equal_inradius_instances;
    equal_inradius_instances.push_back(regular_simplex(3, 1.0));
    equal_inradius_instances.push_back(
        rhombus_fold_tetrahedron(equal_facet_inradius_parameter()));
    for (int i = 0; i < n; ++i)
        equal_inradius_instances.push_back(random_equifacetal_tetrahedron(rng));

    double coincide_worst = 0.0;
    int predicate_hits = 0;
    for (const Simplex& raw : equal_inradius_instances) {
        const Simplex s =
            raw.transformed(random_rotation(3, rng), random_translation(3, 2.0, rng));
        const double scale = circumsphere(s, tol).radius;
        const Vector i = insphere(s).center;
        const Vector j = complementary_one_centroid(s);
        coincide_worst = std::max(coincide_worst, (i - j).norm() / (1.0 + scale));
        predicate_hits += facet_inradii_equal(s, tol) ? 1 : 0;
    }
    out.le("equal_inradii_incenter_distance_max", coincide_worst, 1e-8);
    out.flag("equal_inradii_predicate_all",
             predicate_hits == static_cast<int>(equal_inradius_instances.size()),
             predicate_hits);

    double separation = std::numeric_limits<double>::infinity();
    double inradius_spread_min = std::numeric_limits<double>::infinity();
    int disagreements = 0;
    for (int i = 0; i < n; ++i) {
        const Simplex s = random_simplex(3, 1.0, rng);
        const ClassificationReport c = classify(s, tol);
        const Vector inc = insphere(s).center;
        const Vector j = complementary_one_centroid(s);
        separation = std::min(separation, (inc - j).norm());
        inradius_spread_min = std::min(inradius_spread_min, c.facet_inradius_spread);
        const double scale = circumsphere(s, tol).radius;
        const bool coincide = (inc - j).norm() <= 1e-7 * (1.0 + scale);
        if (coincide != c.facet_inradii_all_equal) ++disagreements;
    }
    out.gt("generic_incenter_distance_min", separation, 1e-6);
    out.gt("generic_inradius_spread_min", inradius_spread_min, 1e-6);
    out.flag("biconditional_consistent", disagreements == 0, disagreements);

    VerificationRun run{"T2.3", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// If any two of centroid, circumcenter and Fermat-Torricelli point coincide,
// all three do.
VerificationRun suite_t31(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 50);
    Rng rng(seed);
    Suite out;

    double fermat_norm = 0.0;
    double norm_spread = 0.0;
    int floating = 0;
    for (int i = 0; i < n; ++i) {
        const int d = 2 + i % 4;
        const Simplex s = spherical_centered_simplex(d, rng);
        const FermatPoint f = fermat_torricelli(s, tol);
        fermat_norm = std::max(fermat_norm, f.point.norm());
        floating += f.mode == FermatMode::floating ? 1 : 0;
        std::vector<double> norms;
        for (int v = 0; v < s.vertex_count(); ++v) norms.push_back(s.vertex(v).norm());
        norm_spread = std::max(norm_spread, relative_spread(norms));
    }
    out.le("centered_spherical_fermat_norm_max", fermat_norm, 1e-8);
    out.flag("centered_spherical_fermat_floating_all", floating == n, floating);
    out.le("vertex_norm_spread_max", norm_spread, 1e-12);

    int lone_pairs = 0;
    for (int i = 0; i < n; ++i) {
        const int d = 2 + i % 4;
        const Simplex s = random_simplex(d, 1.0, rng);
        const double scale = 1.0 + circumsphere(s, tol).radius;
        const Vector g = centroid(s);
        const Vector c = circumsphere(s, tol).center;
        const Vector f = fermat_torricelli(s, tol).point;
        const int close = ((g - c).norm() <= 1e-8 * scale ? 1 : 0) +
                          ((c - f).norm() <= 1e-8 * scale ? 1 : 0) +
                          ((f - g).norm() <= 1e-8 * scale ? 1 : 0);
        if (close == 1 || close == 2) ++lone_pairs;
    }
    out.flag("no_partial_coincidence", lone_pairs == 0, lone_pairs);

    VerificationRun run{"T3.1", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Helper corpora for the three facial equivalences.
std::vector<Simplex> equiradial_corpus(int d, int n, Rng& rng, const Tolerance& tol) {
    std::vector<Simplex> out;
    while (static_cast<int>(out.size()) < n) {
        Simplex base3 = random_equifacetal_tetrahedron(rng);
        if (d == 3) {
            const double edge = 0.5 + 2.0 * (rng() % 1024) / 1024.0;
            out.push_back(equiradial_over(regular_simplex(2, edge), true, tol));
            if (static_cast<int>(out.size()) < n) out.push_back(base3);
            continue;
        }
        Simplex grown = equiradial_over(base3, true, tol);
        if (d == 5) grown = equiradial_over(recentered_at_circumcenter(grown, tol), true, tol);
        out.push_back(grown);
    }
    out.resize(n, out.front());
    return out;
}

std::vector<Simplex> equiareal_corpus(int d, int n, Rng& rng, const Tolerance& tol) {
    std::vector<Simplex> out;
    while (static_cast<int>(out.size()) < n) {
        if (d == 3 && out.size() % 2 == 0) {
            out.push_back(random_equifacetal_tetrahedron(rng));
            continue;
        }
        const double edge = 0.5 + 2.0 * (rng() % 1024) / 1024.0;
        Simplex grown = equiareal_over(regular_simplex(2, edge), tol);
        for (int dd = 4; dd <= d; ++dd) grown = equiareal_over(grown, tol);
        out.push_back(grown);
    }
    out.resize(n, out.front());
    return out;
}

// The centroid/circumcenter, circumcenter/incenter and incenter/centroid
// coincidences are equivalent to well-distributed edges, equiradiality and
// equiareality respectively; positive corpora realize each property,
// negative corpora are generic.
VerificationRun suite_t32(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 50);
    Rng rng(seed);
    Suite out;

    double gc_worst = 0.0, ci_worst = 0.0, ig_worst = 0.0;
    int gc_predicate = 0, ci_predicate = 0, ig_predicate = 0;
    int gc_total = 0, ci_total = 0, ig_total = 0;
    double radius_relation_worst = 0.0;
    double facet_radius_spread_worst = 0.0;

    for (int d = 3; d <= 5; ++d) {
        for (int i = 0; i < n; ++i) {
            const Simplex s = spherical_centered_simplex(d, rng)
                                  .transformed(random_rotation(d, rng),
                                               random_translation(d, 2.0, rng));
            const double scale = 1.0 + circumsphere(s, tol).radius;
            gc_worst = std::max(gc_worst,
                                (centroid(s) - circumsphere(s, tol).center).norm() / scale);
            gc_predicate += has_well_distributed_edges(s, tol) ? 1 : 0;
            ++gc_total;
        }
        for (const Simplex& raw : equiradial_corpus(d, n, rng, tol)) {
            const Simplex s = raw.transformed(random_rotation(d, rng),
                                              random_translation(d, 2.0, rng));
            const Sphere circ = circumsphere(s, tol);
            const Sphere in = insphere(s);
            const double scale = 1.0 + circ.radius;
            ci_worst = std::max(ci_worst, (circ.center - in.center).norm() / scale);
            ci_predicate += is_equiradial(s, tol) ? 1 : 0;
            ++ci_total;

            std::vector<double> facet_radii;
            for (int j = 0; j < s.vertex_count(); ++j)
                facet_radii.push_back(circumsphere(facet(s, j), tol).radius);
            facet_radius_spread_worst =
                std::max(facet_radius_spread_worst, relative_spread(facet_radii));
            const double expected = circ.radius * circ.radius - in.radius * in.radius;
            for (double ri : facet_radii)
                radius_relation_worst =
                    std::max(radius_relation_worst, std::abs(ri * ri - expected));
        }
        for (const Simplex& raw : equiareal_corpus(d, n, rng, tol)) {
            const Simplex s = raw.transformed(random_rotation(d, rng),
                                              random_translation(d, 2.0, rng));
            const double scale = 1.0 + circumsphere(s, tol).radius;
            ig_worst = std::max(ig_worst,
                                (insphere(s).center - centroid(s)).norm() / scale);
            ig_predicate += is_equiareal(s, tol) ? 1 : 0;
            ++ig_total;
        }
    }
    out.le("well_distributed_centroid_circumcenter_max", gc_worst, 1e-8);
    out.flag("well_distributed_predicate_all", gc_predicate == gc_total, gc_predicate);
    out.le("equiradial_circumcenter_incenter_max", ci_worst, 1e-8);
    out.flag("equiradial_predicate_all", ci_predicate == ci_total, ci_predicate);
    out.le("equiradial_facet_radius_relation_max", radius_relation_worst, 1e-9);
    out.le("equiradial_facet_radius_spread_max", facet_radius_spread_worst, 1e-9);
    out.le("equiareal_incenter_centroid_max", ig_worst, 1e-8);
    out.flag("equiareal_predicate_all", ig_predicate == ig_total, ig_predicate);

    double gc_min = std::numeric_limits<double>::infinity();
    double ci_min = gc_min, ig_min = gc_min;
    int generic_hits = 0;
    for (int d = 3; d <= 5; ++d) {
        for (int i = 0; i < n; ++i) {
            const Simplex s = random_simplex(d, 1.0, rng);
            const Sphere circ = circumsphere(s, tol);
            const Sphere in = insphere(s);
            const Vector g = centroid(s);
            gc_min = std::min(gc_min, (g - circ.center).norm());
            ci_min = std::min(ci_min, (circ.center - in.center).norm());
            ig_min = std::min(ig_min, (in.center - g).norm());
            if (has_well_distributed_edges(s, tol) || is_equiradial(s, tol) ||
                is_equiareal(s, tol))
                ++generic_hits;
        }
    }
    out.gt("generic_centroid_circumcenter_min", gc_min, 1e-6);
    out.gt("generic_circumcenter_incenter_min", ci_min, 1e-6);
    out.gt("generic_incenter_centroid_min", ig_min, 1e-6);
    out.flag("generic_predicates_none", generic_hits == 0, generic_hits);

    VerificationRun run{"T3.2", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// A 4-simplex whose incenter and Fermat-Torricelli point coincide without
// being equifacetal.
VerificationRun suite_t33(std::uint64_t seed, int samples, const Tolerance& tol) {
    Suite out;
    const std::array<double, 3> abc = incenter_fermat_base_scan();
    const Simplex base = equifacetal_tetrahedron(abc[0], abc[1], abc[2]);
    const double ratio =
        circumsphere(base, tol).radius / insphere(base).radius;
    out.gt("base_radius_ratio_above_3", ratio, 3.0);
    out.le("base_radius_ratio_below_sqrt15", ratio, std::sqrt(15.0));

    const Simplex s = incenter_fermat_coincident(abc[0], abc[1], abc[2], tol);
    const double scale = 1.0 + circumsphere(s, tol).radius;
    const FermatPoint f = fermat_torricelli(s, tol);
    out.le("incenter_fermat_distance", (insphere(s).center - f.point).norm() / scale,
           1e-8);
    out.flag("fermat_floating", f.mode == FermatMode::floating);
    out.flag("equifacetal_false", !is_equifacetal(s, tol));

    VerificationRun run{"T3.3", seed, 1, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Equiradial but not equiareal simplices exist exactly from dimension 4 on.
VerificationRun suite_t34(std::uint64_t seed, int samples, const Tolerance& tol) {
    Suite out;
    const Simplex s = equiradial_not_equiareal(4);

    std::vector<double> apex_edges;
    for (int i = 0; i < 4; ++i) apex_edges.push_back(s.edge_length(i, 4));
    const double h = std::accumulate(apex_edges.begin(), apex_edges.end(), 0.0) / 4.0;
    out.le("apex_edge_spread", relative_spread(apex_edges), 1e-12);
    out.le("apex_edge_vs_inv_sqrt2", std::abs(h - 1.0 / std::sqrt(2.0)), 1e-9);

    const Simplex base = facet(s, 4);
    const double base_radius = circumsphere(base, tol).radius;
    out.le("base_circumradius_vs_sqrt_3_8",
           std::abs(base_radius - std::sqrt(3.0 / 8.0)), 1e-9);
    out.gt("apex_edge_exceeds_base_circumradius", h - base_radius, 0.0);

    double base_facet_radius_error = 0.0;
    for (int j = 0; j < base.vertex_count(); ++j)
        base_facet_radius_error = std::max(
            base_facet_radius_error,
            std::abs(circumsphere(facet(base, j), tol).radius - 1.0 / std::sqrt(3.0)));
    out.le("base_facet_circumradii_vs_inv_sqrt3", base_facet_radius_error, 1e-9);

    std::vector<double> facet_radii;
    double common_error = 0.0;
    for (int j = 0; j < s.vertex_count(); ++j) {
        const double r = circumsphere(facet(s, j), tol).radius;
        facet_radii.push_back(r);
        common_error = std::max(common_error, std::abs(r - std::sqrt(3.0 / 8.0)));
    }
    const auto [fmin, fmax] = std::minmax_element(facet_radii.begin(), facet_radii.end());
    out.le("facet_circumradius_spread", *fmax - *fmin, 1e-9);
    out.le("facet_circumradius_vs_sqrt_3_8", common_error, 1e-9);
    out.flag("equiradial_predicate", is_equiradial(s, tol));

    const ClassificationReport c = classify(s, tol);
    out.flag("equiareal_false", !c.equiareal);
    out.gt("facet_volume_spread", c.facet_volume_spread, 1e-3);

    const Simplex s5 = equiradial_not_equiareal(5);
    out.flag("d5_equiradial_not_equiareal",
             is_equiradial(s5, tol) && !is_equiareal(s5, tol));
    out.flag("d3_rejected",
             throws_invalid_argument([&] { equiradial_not_equiareal(3); }));

    VerificationRun run{"T3.4", seed, 1, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// An edge-tangent sphere centered at the circumcenter forces regularity.
VerificationRun suite_t35(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 50);
    Rng rng(seed);
    Suite out;

    double regular_center_error = 0.0;
    double regular_radius_error = 0.0;
    bool regular_all_exist = true;
    for (int d = 2; d <= 6; ++d) {
        const Simplex s = regular_simplex(d, 1.0);
        const auto oc = one_center(s, tol);
        if (!oc) {
            regular_all_exist = false;
            continue;
        }
        regular_center_error = std::max(
            regular_center_error, (oc->center - circumsphere(s, tol).center).norm());
        const double expected = std::sqrt((d - 1.0) / (4.0 * (d + 1.0)));
        regular_radius_error =
            std::max(regular_radius_error, std::abs(oc->radius - expected));
    }
    out.flag("regular_one_center_exists", regular_all_exist);
    out.le("regular_one_center_vs_circumcenter", regular_center_error, 1e-9);
    out.le("regular_one_center_radius_error", regular_radius_error, 1e-10);

    int tetra_with_sphere = 0;
    for (int i = 0; i < n; ++i) {
        std::array<double, 3> abc{};
        do {
            abc = random_acute_triple(rng);
        } while (relative_spread({abc[0], abc[1], abc[2]}) < 0.05);
        const Simplex t = equifacetal_tetrahedron(abc[0], abc[1], abc[2]);
        if (one_center(t, tol)) ++tetra_with_sphere;
    }
    out.flag("nonregular_equifacetal_has_none", tetra_with_sphere == 0,
             tetra_with_sphere);

    double triangle_incenter_error = 0.0;
    double triangle_separation = std::numeric_limits<double>::infinity();
    bool triangle_all_exist = true;
    for (int i = 0; i < n; ++i) {
        const Simplex t = random_simplex(2, 1.0, rng);
        const auto oc = one_center(t, tol);
        if (!oc) {
            triangle_all_exist = false;
            continue;
        }
        const Sphere in = insphere(t);
        const double scale = 1.0 + circumsphere(t, tol).radius;
        triangle_incenter_error =
            std::max(triangle_incenter_error,
                     ((oc->center - in.center).norm() + std::abs(oc->radius - in.radius)) /
                         scale);
        triangle_separation = std::min(
            triangle_separation, (oc->center - circumsphere(t, tol).center).norm());
    }
    out.flag("triangle_one_center_exists", triangle_all_exist);
    out.le("triangle_one_center_vs_incenter", triangle_incenter_error, 1e-9);
    out.gt("triangle_one_center_circumcenter_min", triangle_separation, 1e-6);

    int violations = 0;
    for (int i = 0; i < n; ++i) {
        const int d = 3 + i % 2;
        const Simplex s = random_simplex(d, 1.0, rng);
        const auto oc = one_center(s, tol);
        if (oc && (oc->center - circumsphere(s, tol).center).norm() <= 1e-6)
            ++violations;
    }
    out.flag("generic_never_circumcentered", violations == 0, violations);

    VerificationRun run{"T3.5", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// One-parameter Gram family with centroid = circumcenter = incenter =
// Fermat-Torricelli point.
VerificationRun suite_t41(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 50);
    Suite out;

    const auto [lo, hi] = four_coincident_feasible_interval(tol);
    const double golden_lo = -(1.0 + std::sqrt(5.0)) / 4.0;
    const double golden_hi = (std::sqrt(5.0) - 1.0) / 4.0;
    out.le("interval_low_vs_closed_form", std::abs(lo - golden_lo), 1e-6);
    out.le("interval_high_vs_closed_form", std::abs(hi - golden_hi), 1e-6);

    double center_worst = 0.0;
    double det_worst = 0.0;
    bool trace_exact = true;
    for (int k = 0; k < n; ++k) {
        const double x = lo + (hi - lo) * (k + 1.0) / (n + 1.0);
        const GramFamilyMember member = four_coincident_centers_gram(x, tol);
        if (member.gram.trace() != 5.0) trace_exact = false;

        const Simplex& s = member.simplex;
        const double scale = 1.0 + circumsphere(s, tol).radius;
        const Vector g = centroid(s);
        center_worst = std::max(
            center_worst, (g - circumsphere(s, tol).center).norm() / scale);
        center_worst =
            std::max(center_worst, (g - insphere(s).center).norm() / scale);
        center_worst = std::max(
            center_worst, (g - fermat_torricelli(s, tol).point).norm() / scale);

        const double expected = 2.5 * std::sqrt(1.0 - 2.0 * x - 4.0 * x * x);
        for (int j = 0; j < 5; ++j) {
            const double v = std::sqrt(facet_gram_determinant(member.gram, j));
            det_worst = std::max(det_worst, std::abs(v - expected) / expected);
        }
    }
    out.flag("gram_trace_exact_5", trace_exact);
    out.le("four_centers_spread_max", center_worst, 1e-8);
    out.le("facet_determinant_relative_error_max", det_worst, 1e-8);

    const GramFamilyMember probe = four_coincident_centers_gram(-0.25 + 1e-6, tol);
    std::vector<double> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.push_back(probe.simplex.edge_length(i, j));
    out.le("near_regular_edge_spread", relative_spread(edges), 1e-4);
    Tolerance broad = tol;
    broad.rel = 1e-4;
    out.flag("near_regular_predicate", is_regular(probe.simplex, broad));

    out.flag("outside_interval_rejected", throws_invalid_argument([&] {
                 four_coincident_centers_gram(hi + 0.05, tol);
             }));

    VerificationRun run{"T4.1", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// An equiareal 4-simplex whose centroid, circumcenter and Fermat-Torricelli
// point are pairwise distinct.
VerificationRun suite_t43(std::uint64_t seed, int samples, const Tolerance& tol) {
    Suite out;
    const GramFamilyMember member = equiareal_distinct_centers_gram(tol);

    Eigen::SelfAdjointEigenSolver<Matrix> eigen(member.gram);
    const Vector lambda = eigen.eigenvalues();
    out.le("smallest_eigenvalue_abs", std::abs(lambda(0)), 1e-10);
    out.gt("second_eigenvalue_positive", lambda(1), 1e-8);

    const Simplex& s = member.simplex;
    const ClassificationReport c = classify(s, tol);
    out.flag("equiareal_predicate", c.equiareal);
    out.le("facet_volume_spread", c.facet_volume_spread, 1e-9);

    const double scale = 1.0 + circumsphere(s, tol).radius;
    const Vector g = centroid(s);
    const Vector circ = circumsphere(s, tol).center;
    const Vector f = fermat_torricelli(s, tol).point;
    out.gt("centroid_circumcenter_separation", (g - circ).norm(), 1e-4);
    out.gt("centroid_fermat_separation", (g - f).norm(), 1e-4);
    out.gt("circumcenter_fermat_separation", (circ - f).norm(), 1e-4);
    out.le("incenter_centroid_distance", (insphere(s).center - g).norm() / scale, 1e-8);

    VerificationRun run{"T4.3", seed, 1, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Centroid = circumcenter implies neither of the other two coincidences, and
// incenter = centroid implies neither of the other two.
VerificationRun suite_t44(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 50);
    Rng rng(seed);
    Suite out;

    double gc_worst = 0.0;
    double ci_min = std::numeric_limits<double>::infinity();
    double ig_min = ci_min;
    double volume_spread_min = ci_min;
    for (int i = 0; i < n; ++i) {
        const Simplex s = spherical_centered_simplex(4, rng);
        const Sphere circ = circumsphere(s, tol);
        const Sphere in = insphere(s);
        const Vector g = centroid(s);
        gc_worst = std::max(gc_worst, (g - circ.center).norm() / (1.0 + circ.radius));
        ci_min = std::min(ci_min, (circ.center - in.center).norm());
        ig_min = std::min(ig_min, (in.center - g).norm());
        volume_spread_min =
            std::min(volume_spread_min, classify(s, tol).facet_volume_spread);
    }
    out.le("centered_spherical_centroid_circumcenter_max", gc_worst, 1e-8);
    out.gt("centered_spherical_circumcenter_incenter_min", ci_min, 1e-6);
    out.gt("centered_spherical_incenter_centroid_min", ig_min, 1e-6);
    out.gt("centered_spherical_volume_spread_min", volume_spread_min, 1e-6);

    const Simplex s = equiareal_distinct_centers_gram(tol).simplex;
    const Sphere circ = circumsphere(s, tol);
    const Vector g = centroid(s);
    const Vector in = insphere(s).center;
    out.le("equiareal_incenter_centroid_distance",
           (in - g).norm() / (1.0 + circ.radius), 1e-8);
    out.gt("equiareal_centroid_circumcenter_separation", (g - circ.center).norm(), 1e-4);
    out.gt("equiareal_circumcenter_incenter_separation", (circ.center - in).norm(),
           1e-4);

    VerificationRun run{"T4.4", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Equiareal and equiradial without being equifacetal, in dimension 4.
VerificationRun suite_t46(std::uint64_t seed, int samples, const Tolerance& tol) {
    Suite out;
    const Simplex s = equiareal_equiradial_not_equifacetal(tol);

    std::vector<double> apex_edges;
    for (int i = 0; i < 4; ++i) apex_edges.push_back(s.edge_length(i, 4));
    out.le("apex_edge_spread", relative_spread(apex_edges), 1e-9);
    const double h =
        std::accumulate(apex_edges.begin(), apex_edges.end(), 0.0) / 4.0;

    const TriangleMetrics base = triangle_metrics(
        s.edge_length(0, 1), s.edge_length(1, 2), s.edge_length(0, 2));
    const double u = base.edge_square_sum;
    const double r2 = base.circumradius * base.circumradius;
    out.le("base_circumradius_vs_1", std::abs(base.circumradius - 1.0), 1e-10);
    out.le("u_vs_25_over_3", std::abs(u - 25.0 / 3.0), 1e-10);
    out.le("h_squared_vs_5_over_3", std::abs(h * h - 5.0 / 3.0), 1e-10);
    out.le("r_squared_vs_3u_over_25", std::abs(r2 - 3.0 * u / 25.0), 1e-10);
    out.le("equiareal_identity", std::abs(h * h - (2.0 * u - 15.0 * r2)), 1e-10);
    out.le("equiradial_identity",
           std::abs(2.0 * std::pow(h, 4) - u * (h * h - r2)), 1e-10);

    const ClassificationReport c = classify(s, tol);
    out.flag("equiareal_predicate", c.equiareal);
    out.flag("equiradial_predicate", c.equiradial);
    out.flag("equifacetal_false", !c.equifacetal);

    // Equal facet circumradii here do NOT force circumcenter = incenter: the
    // circumcenter of this simplex is equidistant from all five facet
    // hyperplanes but lies outside the simplex, on the far side of the base
    // facet. The incenter stays at the centroid (equiareal), so the simplex
    // is not well-distributed either.
    const Sphere circ = circumsphere(s, tol);
    const double scale = 1.0 + circ.radius;
    const Vector g = centroid(s);
    const Vector in = insphere(s).center;
    out.le("incenter_centroid_distance", (in - g).norm() / scale, 1e-8);
    out.flag("well_distributed_false", !c.well_distributed_edges);
    out.le("circumradius_oracle", std::abs(circ.radius - std::sqrt(10.0) / 3.0), 1e-9);
    out.le("centroid_circumcenter_oracle",
           std::abs((g - circ.center).norm() - 2.0 * std::sqrt(10.0) / 15.0), 1e-9);
    out.lt("circumcenter_exterior_min_weight",
           barycentric_coordinates(s, circ.center).minCoeff(), -1e-3);

    std::vector<double> hyperplane_distances;
    for (int j = 0; j < 5; ++j) {
        Matrix rest(4, 4);
        int col = 0;
        for (int i = 0; i < 5; ++i)
            if (i != j) rest.col(col++) = s.vertex(i);
        Matrix diffs(4, 3);
        for (int i = 1; i < 4; ++i)
            diffs.col(i - 1) = rest.col(i) - rest.col(0);
        const Vector rel = circ.center - rest.col(0);
        const Vector fitted = diffs.colPivHouseholderQr().solve(rel);
        hyperplane_distances.push_back((rel - diffs * fitted).norm());
    }
    out.le("facet_hyperplane_distance_spread",
           relative_spread(hyperplane_distances), 1e-9);

    VerificationRun run{"T4.6", seed, 1, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// For acute or right triangles, u/9 <= R^2 <= u/8, with equality for the
// equilateral and the right triangle; u = 8 R^2 (1 + cos A cos B cos C).
VerificationRun suite_l45(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 1000);
    Rng rng(seed);
    Suite out;

    double upper_violation = 0.0;
    double lower_violation = 0.0;
    double identity_worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const std::array<double, 3> abc = random_acute_triple(rng);
        const TriangleMetrics m = triangle_metrics(abc[0], abc[1], abc[2]);
        const double u = m.edge_square_sum;
        const double r2 = m.circumradius * m.circumradius;
        upper_violation = std::max(upper_violation, (r2 - u / 8.0) / u);
        lower_violation = std::max(lower_violation, (u / 9.0 - r2) / u);
        const double rhs =
            8.0 * r2 * (1.0 + std::cos(m.angle_a) * std::cos(m.angle_b) * std::cos(m.angle_c));
        identity_worst = std::max(identity_worst, std::abs(u - rhs) / u);
    }
    out.le("upper_bound_violation_max", upper_violation, 1e-12);
    out.le("lower_bound_violation_max", lower_violation, 1e-12);
    out.le("cosine_identity_relative_error_max", identity_worst, 1e-10);

    const TriangleMetrics right = triangle_metrics(3.0, 4.0, 5.0);
    out.le("right_triangle_attains_upper",
           std::abs(right.circumradius * right.circumradius -
                    right.edge_square_sum / 8.0),
           1e-12);
    const TriangleMetrics equilateral = triangle_metrics(1.0, 1.0, 1.0);
    out.le("equilateral_attains_lower",
           std::abs(equilateral.circumradius * equilateral.circumradius -
                    equilateral.edge_square_sum / 9.0),
           1e-12);

    VerificationRun run{"L4.5", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// The four equal-cevian characterizations agree on every sample.
VerificationRun suite_t51(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 500);
    const int constructed = std::max(50, n / 10);
    Rng rng(seed);
    Suite out;

    int inconsistent = 0;
    int positive_failures = 0;
    for (int i = 0; i < n; ++i) {
        const int d = 2 + i % 3;
        const Simplex s = random_simplex(d, 1.0, rng);
        const CevianEquivalence eq = cevian_center_equivalence(s, tol);
        if (!eq.consistent) ++inconsistent;
    }
    for (int i = 0; i < constructed; ++i) {
        const int d = 2 + i % 3;
        const Simplex s = spherical_centered_simplex(d, rng);
        const CevianEquivalence eq = cevian_center_equivalence(s, tol);
        if (!eq.consistent || !eq.centroid_equals_circumcenter ||
            !eq.equal_through_centroid)
            ++positive_failures;
    }
    out.flag("random_equivalence_consistent", inconsistent == 0, inconsistent);
    out.flag("constructed_equivalence_positive", positive_failures == 0,
             positive_failures);

    VerificationRun run{"T5.1", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Equal cevians through the circumcenter are equivalent to the two-block
// dependence relation with 0 <= r < (d+1)/2.
VerificationRun suite_l52(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 50);
    Rng rng(seed);
    Suite out;

    bool regular_ok = true;
    double regular_residual = 0.0;
    for (int d = 2; d <= 5; ++d) {
        const double edge = std::sqrt(2.0 * (d + 1.0) / d);
        const Simplex s = regular_simplex(d, edge);
        const auto st = equal_cevian_structure(s, tol);
        if (!st || st->r != 0 || !st->group.empty()) regular_ok = false;
        if (st) regular_residual = std::max(regular_residual, st->relation_residual);
    }
    out.flag("regular_structure_r0", regular_ok);
    out.le("regular_relation_residual_max", regular_residual, 1e-10);

    const Simplex ext = exterior_circumcenter_equal_cevians(4, 2, tol);
    const auto st = equal_cevian_structure(ext, tol);
    out.flag("exterior_structure_found", st.has_value());
    if (st) {
        out.eq("exterior_structure_r", st->r, 2.0);
        out.le("exterior_relation_residual", st->relation_residual, 1e-10);
        out.flag("structure_r_in_range", st->r >= 0 && 2 * st->r < 5);
    }

    int spurious = 0;
    int centered_failures = 0;
    for (int i = 0; i < n; ++i) {
        const int d = 2 + i % 3;
        if (equal_cevian_structure(random_unit_circumradius_simplex(d, 1.0, rng), tol))
            ++spurious;
        const Simplex c = spherical_centered_simplex(d, rng);
        const auto cs = equal_cevian_structure(c, tol);
        if (!cs || cs->r != 0) ++centered_failures;
    }
    out.flag("generic_structure_none", spurious == 0, spurious);
    out.flag("centered_structure_r0", centered_failures == 0, centered_failures);

    out.flag("off_sphere_rejected", throws_invalid_argument([&] {
                 equal_cevian_structure(random_simplex(3, 1.0, rng), tol);
             }));

    VerificationRun run{"L5.2", seed, n, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Equally inclined unit bases summing to t V exist for 0 < |t| < d.
VerificationRun suite_l53(std::uint64_t seed, int samples, const Tolerance& tol) {
    Rng rng(seed);
    Suite out;

    double norm_worst = 0.0;
    double sum_worst = 0.0;
    double inclination_worst = 0.0;
    double singular_min = std::numeric_limits<double>::infinity();
    for (int d : {2, 3, 5, 8}) {
        Vector v = random_translation(d, 1.0, rng);
        v.normalize();
        for (double t : {-0.5, 0.5, 1.0, d - 1.0, -(d - 1e-3), d - 1e-3}) {
            const std::vector<Vector> basis = equally_inclined_basis(v, t, d, tol);
            Vector sum = Vector::Zero(d);
            Matrix stacked(d, d);
            std::vector<double> dots;
            for (int j = 0; j < d; ++j) {
                norm_worst = std::max(norm_worst, std::abs(basis[j].norm() - 1.0));
                sum += basis[j];
                stacked.col(j) = basis[j];
                for (int k = j + 1; k < d; ++k)
                    dots.push_back(basis[j].dot(basis[k]));
            }
            sum_worst = std::max(sum_worst, (sum - t * v).norm());
            if (dots.size() > 1) {
                const auto [dmin, dmax] = std::minmax_element(dots.begin(), dots.end());
                inclination_worst = std::max(inclination_worst, *dmax - *dmin);
            }
            singular_min = std::min(
                singular_min,
                stacked.jacobiSvd().singularValues().minCoeff());
        }
    }
    out.le("unit_norm_error_max", norm_worst, 1e-12);
    out.le("sum_error_max", sum_worst, 1e-10);
    out.le("inclination_spread_max", inclination_worst, 1e-10);
    out.gt("basis_smallest_singular_value", singular_min, 1e-6);

    Vector up(2);
    up << 0.0, 1.0;
    const std::vector<Vector> planar = equally_inclined_basis(up, 1.0, 2, tol);
    Vector expected_a(2), expected_b(2);
    expected_a << std::sqrt(3.0) / 2.0, 0.5;
    expected_b << -std::sqrt(3.0) / 2.0, 0.5;
    const double match = std::min(
        (planar[0] - expected_a).norm() + (planar[1] - expected_b).norm(),
        (planar[0] - expected_b).norm() + (planar[1] - expected_a).norm());
    out.le("planar_example_match", match, 1e-12);

    Vector v3 = Vector::Zero(3);
    v3(0) = 1.0;
    out.flag("t_zero_rejected",
             throws_invalid_argument([&] { equally_inclined_basis(v3, 0.0, 3, tol); }));
    out.flag("t_at_d_rejected",
             throws_invalid_argument([&] { equally_inclined_basis(v3, 3.0, 3, tol); }));
    out.flag("t_beyond_d_rejected",
             throws_invalid_argument([&] { equally_inclined_basis(v3, -3.5, 3, tol); }));

    VerificationRun run{"L5.3", seed, 1, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Affinely independent unit vectors realizing a two-block linear relation.
VerificationRun suite_l54(std::uint64_t seed, int samples, const Tolerance& tol) {
    Suite out;

    struct Case {
        int d, r;
        double b, c;
    };
    const std::vector<Case> cases = {
        {4, 2, 5.0, -3.0}, {4, 2, 1.0, 1.0}, {5, 3, 2.0, -1.0},
        {6, 2, -7.0, 11.0}, {5, 4, 0.25, -8.0},
    };

    double norm_worst = 0.0;
    double relation_worst = 0.0;
    bool all_independent = true;
    for (const Case& kase : cases) {
        const std::vector<Vector> a =
            split_sum_unit_vectors(kase.b, kase.c, kase.r, kase.d, tol);
        Vector first = Vector::Zero(kase.d);
        Vector second = Vector::Zero(kase.d);
        Matrix stacked(kase.d, kase.d + 1);
        for (int j = 0; j <= kase.d; ++j) {
            norm_worst = std::max(norm_worst, std::abs(a[j].norm() - 1.0));
            stacked.col(j) = a[j];
            if (j < kase.r)
                first += a[j];
            else
                second += a[j];
        }
        relation_worst =
            std::max(relation_worst, (kase.b * first + kase.c * second).norm());
        if (!affinely_independent(stacked, tol)) all_independent = false;
    }
    out.le("unit_norm_error_max", norm_worst, 1e-12);
    out.le("relation_residual_max", relation_worst, 1e-10);
    out.flag("affinely_independent_all", all_independent);

    out.flag("r_one_rejected", throws_invalid_argument([&] {
                 split_sum_unit_vectors(2.0, -1.0, 1, 4, tol);
             }));
    out.flag("r_d_rejected", throws_invalid_argument([&] {
                 split_sum_unit_vectors(2.0, -1.0, 4, 4, tol);
             }));
    out.flag("zero_b_rejected", throws_invalid_argument([&] {
                 split_sum_unit_vectors(0.0, 1.0, 2, 4, tol);
             }));
    out.flag("zero_coefficient_sum_rejected", throws_invalid_argument([&] {
                 split_sum_unit_vectors(3.0, -2.0, 2, 4, tol);
             }));

    VerificationRun run{"L5.4", seed, 1, tol, true, out.checks};
    return run;
}

// ---------------------------------------------------------------------------
// Exterior circumcenters with equal cevians exist iff d >= 4.
VerificationRun suite_t55(std::uint64_t seed, int samples, const Tolerance& tol) {
    const int n = resolved(samples, 10000);
    Rng rng(seed);
    Suite out;

    for (const auto& [d, r] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}}) {
        const std::string prefix = "d" + std::to_string(d) + "_";
        const Simplex s = exterior_circumcenter_equal_cevians(d, r, tol);

        double norm_error = 0.0;
        for (int j = 0; j <= d; ++j)
            norm_error = std::max(norm_error, std::abs(s.vertex(j).norm() - 1.0));
        out.le(prefix + "vertex_norm_error", norm_error, 1e-12);
        out.le(prefix + "circumcenter_norm",
               circumsphere(s, tol).center.norm(), 1e-10);

        const Vector weights = barycentric_coordinates(s, Vector::Zero(d));
        out.le(prefix + "exterior_weight", weights.minCoeff(), -1e-3);

        const CevianReport cev = cevian_feet(s, Vector::Zero(d), tol);
        out.le(prefix + "cevian_length_spread", cev.length_spread, 1e-9);
        const double mean_length =
            std::accumulate(cev.lengths.begin(), cev.lengths.end(), 0.0) /
            cev.lengths.size();
        out.le(prefix + "cevian_length_vs_closed_form",
               std::abs(mean_length - (d + 1.0 - 2.0 * r) / d), 1e-10);

        const auto st = equal_cevian_structure(s, tol);
        out.flag(prefix + "structure_found", st.has_value() && st->r == r,
                 st ? st->r : -1);
    }

    out.flag("d3_r1_rejected", throws_invalid_argument([&] {
                 exterior_circumcenter_equal_cevians(3, 1, tol);
             }));
    out.flag("d3_r2_rejected", throws_invalid_argument([&] {
                 exterior_circumcenter_equal_cevians(3, 2, tol);
             }));

    int low_dimension_hits = 0;
    for (int i = 0; i < n; ++i) {
        const int d = 2 + i % 2;
        const Simplex s = random_unit_circumradius_simplex(d, 1.0, rng);
        const Vector weights = barycentric_coordinates(s, Vector::Zero(d));
        if (weights.minCoeff() >= -1e-6) continue;
        const CevianReport cev = cevian_feet(s, Vector::Zero(d), tol);
        if (cev.length_spread <= 1e-6) ++low_dimension_hits;
    }
    out.flag("low_dimension_no_instance", low_dimension_hits == 0, low_dimension_hits);

    VerificationRun run{"T5.5", seed, n, tol, true, out.checks};
    return run;
}

} // namespace

VerificationRun run_infrastructure_checks(std::uint64_t seed, int samples,
                                          const Tolerance& tol) {
    const int n = resolved(samples, 1000);
    Rng rng(seed);
    Suite out;

    double gram_worst = 0.0;
    double volume_worst = 0.0;
    double equivariance_worst = 0.0;
    double weiszfeld_worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const int d = 2 + i % 5;
        const double range = 0.5 + (i % 3);
        const Simplex s = random_simplex(d, range, rng);

        const Simplex rebuilt = simplex_from_gram(gram_matrix(s), tol);
        const Matrix da = s.distance_matrix();
        const Matrix db = rebuilt.distance_matrix();
        gram_worst = std::max(
            gram_worst, (da - db).cwiseAbs().maxCoeff() / da.maxCoeff());

        const double vol_det = volume(s);
        const double vol_cm = std::sqrt(cayley_menger_squared_volume(da, tol));
        volume_worst =
            std::max(volume_worst, std::abs(vol_det - vol_cm) / vol_det);

        const Matrix q = random_rotation(d, rng);
        const Vector shift = random_translation(d, 2.0, rng);
        const Simplex moved = s.transformed(q, shift);
        const double scale = 1.0 + circumsphere(s, tol).radius;
        std::vector<Vector> before = five_classical_centers(s, tol);
        before.push_back(complementary_one_centroid(s));
        std::vector<Vector> after = five_classical_centers(moved, tol);
        after.push_back(complementary_one_centroid(moved));
        for (std::size_t k = 0; k < before.size(); ++k)
            equivariance_worst =
                std::max(equivariance_worst,
                         (after[k] - (q * before[k] + shift)).norm() / scale);

        const FermatPoint f = fermat_torricelli(s, tol);
        if (f.mode == FermatMode::floating)
            weiszfeld_worst = std::max(weiszfeld_worst, f.residual);
    }
    out.le("gram_round_trip_relative_error_max", gram_worst, 1e-8);
    out.le("volume_agreement_relative_error_max", volume_worst, 1e-8);
    out.le("center_equivariance_error_max", equivariance_worst, 1e-8);
    out.le("fermat_residual_max", weiszfeld_worst, 1e-9);

    VerificationRun run{"infrastructure", seed, n, tol, false, out.checks};
    run.pass = std::all_of(run.checks.begin(), run.checks.end(),
                           [](const Check& c) { return c.passed; });
    return run;
}

const std::vector<std::string>& verification_ids() {
    static const std::vector<std::string> ids = {
        "T2.1", "T2.2", "T2.3", "T3.1", "T3.2", "T3.3", "T3.4", "T3.5", "T4.1",
        "T4.3", "T4.4", "T4.6", "L4.5", "T5.1", "L5.2", "L5.3", "L5.4", "T5.5",
    };
    return ids;
}

VerificationRun run_verification(const std::string& id, std::uint64_t seed,
                                 int samples, const Tolerance& tol) {
    using SuiteFn =
        VerificationRun (*)(std::uint64_t, int, const Tolerance&);
    static const std::map<std::string, SuiteFn> table = {
        {"T2.1", suite_t21}, {"T2.2", suite_t22}, {"T2.3", suite_t23},
        {"T3.1", suite_t31}, {"T3.2", suite_t32}, {"T3.3", suite_t33},
        {"T3.4", suite_t34}, {"T3.5", suite_t35}, {"T4.1", suite_t41},
        {"T4.3", suite_t43}, {"T4.4", suite_t44}, {"T4.6", suite_t46},
        {"L4.5", suite_l45}, {"T5.1", suite_t51}, {"L5.2", suite_l52},
        {"L5.3", suite_l53}, {"L5.4", suite_l54}, {"T5.5", suite_t55},
    };
    const auto found = table.find(id);
    if (found == table.end())
        throw std::invalid_argument("unknown verification id: " + id);
    VerificationRun run = found->second(seed, samples, tol);
    run.pass = std::all_of(run.checks.begin(), run.checks.end(),
                           [](const Check& c) { return c.passed; });
    return run;
}

} // namespace simplex

#include "simplex/cevians.hpp"

#include "simplex/centers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace simplex {

namespace {

std::string describe(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

Vector dependence_coefficients(const Simplex& s, const Vector& p, const Tolerance& tol) {
    const double scale = 1.0 + s.max_edge_length();
    for (int i = 0; i < s.vertex_count(); ++i)
        if ((p - s.vertex(i)).norm() <= tol.abs * scale)
            throw std::invalid_argument(
                "dependence_coefficients: point coincides with vertex " + std::to_string(i));
    Vector w = barycentric_coordinates(s, p);
    for (int k = 0; k < s.vertex_count(); ++k)
        if (std::abs(1.0 - w(k)) <= tol.abs)
            throw std::invalid_argument(
                "dependence_coefficients: cevian through vertex " + std::to_string(k) +
                " is undefined, complementary coefficient sum " + describe(1.0 - w(k)));
    return w;
}

CevianReport cevian_feet(const Simplex& s, const Vector& p, const Tolerance& tol) {
    CevianReport report;
    report.through = p;
    report.coefficients = dependence_coefficients(s, p, tol);
    const int n = s.vertex_count();
    report.feet.reserve(n);
    report.lengths.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double w = report.coefficients(j);
        const Vector foot = p - w * (s.vertex(j) - p) / (1.0 - w);
        report.feet.push_back(foot);
        report.lengths.push_back((s.vertex(j) - foot).norm());
    }
    const auto [lo, hi] = std::minmax_element(report.lengths.begin(), report.lengths.end());
    const double mean =
        std::accumulate(report.lengths.begin(), report.lengths.end(), 0.0) / n;
    report.length_spread = (*hi - *lo) / mean;
    report.equal = report.length_spread <= tol.rel;

    const Sphere circ = circumsphere(s, tol);
    if ((p - circ.center).norm() <= tol.abs * (1.0 + circ.radius)) {
        Simplex normalized = s.translated(-circ.center).scaled(1.0 / circ.radius);
        if (auto structure = equal_cevian_structure(normalized, tol))
            report.structure_r = structure->r;
    }
    return report;
}

std::optional<CevianStructure> equal_cevian_structure(const Simplex& s,
                                                      const Tolerance& tol) {
    const int n = s.vertex_count();
    const int d = s.dim();
    for (int i = 0; i < n; ++i)
        if (std::abs(s.vertex(i).norm() - 1.0) > 100.0 * tol.rel)
            throw std::invalid_argument(
                "equal_cevian_structure: vertex " + std::to_string(i) +
                " does not lie on the unit sphere, |A| = " + describe(s.vertex(i).norm()));

    const Vector w = barycentric_coordinates(s, Vector::Zero(d));
    std::vector<double> lengths(n);
    for (int j = 0; j < n; ++j) {
        const double t = 1.0 - w(j);
        if (std::abs(t) <= tol.abs) return std::nullopt; // cevian undefined
        lengths[j] = s.vertex(j).norm() / std::abs(t);
    }
    const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
    const double mean = std::accumulate(lengths.begin(), lengths.end(), 0.0) / n;
    if ((*hi - *lo) / mean > tol.rel) return std::nullopt;

    CevianStructure structure;
    std::vector<int> negatives, nonnegatives;
    for (int j = 0; j < n; ++j)
        (1.0 - w(j) < 0.0 ? negatives : nonnegatives).push_back(j);
    const auto& group = negatives.size() <= nonnegatives.size() ? negatives : nonnegatives;
    const auto& rest = negatives.size() <= nonnegatives.size() ? nonnegatives : negatives;
    structure.r = static_cast<int>(group.size());
    structure.group = group;

    Vector relation = Vector::Zero(d);
    for (int j : group) relation += (2.0 * d - 2.0 * structure.r + 1.0) * s.vertex(j);
    for (int j : rest) relation -= (2.0 * structure.r - 1.0) * s.vertex(j);
    structure.relation_residual = relation.norm();
    if (structure.relation_residual > std::sqrt(tol.abs) * n) return std::nullopt;
    return structure;
}

CevianEquivalence cevian_center_equivalence(const Simplex& s, const Tolerance& tol) {
    CevianEquivalence eq;
    const Vector g = centroid(s);
    const Sphere circ = circumsphere(s, tol);
    const double bound = tol.abs * (1.0 + circ.radius);

    eq.centroid_equals_circumcenter = (g - circ.center).norm() <= bound;
    eq.equal_through_centroid = cevian_feet(s, g, tol).equal;

    const FermatPoint fermat = fermat_torricelli(s, tol);
    eq.fermat_floating = fermat.mode == FermatMode::floating;
    if (eq.fermat_floating)
        eq.equal_through_fermat = cevian_feet(s, fermat.point, tol).equal;

    const Vector w = barycentric_coordinates(s, circ.center);
    const double band = 10.0 * tol.abs;
    eq.membership_decisive = w.minCoeff() < -band || w.minCoeff() > band;
    const bool inside = w.minCoeff() > 0.0;
    if (inside) {
        // The circumcenter is strictly interior, so every cevian through it
        // is defined.
        eq.circumcenter_inside_and_equal = cevian_feet(s, circ.center, tol).equal;
    } else {
        eq.circumcenter_inside_and_equal = false;
    }

    bool all_equal = true;
    const bool reference = eq.centroid_equals_circumcenter;
    if (eq.equal_through_centroid != reference) all_equal = false;
    if (eq.fermat_floating && eq.equal_through_fermat != reference) all_equal = false;
    if (eq.membership_decisive && eq.circumcenter_inside_and_equal != reference)
        all_equal = false;
    eq.consistent = all_equal;
    return eq;
}

} // namespace simplex

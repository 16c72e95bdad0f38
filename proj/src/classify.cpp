#include "simplex/classify.hpp"

#include "simplex/centers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace simplex {

namespace {

std::vector<double> edge_lengths_of(const Simplex& s) {
    std::vector<double> lengths;
    for (int i = 0; i < s.vertex_count(); ++i)
        for (int j = i + 1; j < s.vertex_count(); ++j)
            lengths.push_back(s.edge_length(i, j));
    return lengths;
}

std::vector<double> facet_values(const Simplex& s, double (*f)(const Simplex&)) {
    std::vector<double> values;
    values.reserve(s.vertex_count());
    for (int j = 0; j < s.vertex_count(); ++j)
        values.push_back(f(facet(s, j)));
    return values;
}

/// Smallest max-entry mismatch between dist and ref over all vertex
/// relabelings of dist, with an early exit below `good_enough`.
double best_relabeling_mismatch(const Matrix& ref, const Matrix& dist, double good_enough) {
    const int n = static_cast<int>(ref.rows());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (int i = 0; i < n && worst < best; ++i)
            for (int j = i + 1; j < n; ++j)
                worst = std::max(worst, std::abs(dist(perm[i], perm[j]) - ref(i, j)));
        best = std::min(best, worst);
        if (best <= good_enough) return best;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

double relative_spread(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                        static_cast<double>(values.size());
    if (mean == 0.0) return 0.0;
    return (*hi - *lo) / mean;
}

bool is_regular(const Simplex& s, const Tolerance& tol) {
    const auto lengths = edge_lengths_of(s);
    const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
    return *hi / *lo <= 1.0 + tol.rel;
}

bool is_equifacetal(const Simplex& s, const Tolerance& tol) {
    const int d = s.dim();
    if (d > 7)
        throw std::invalid_argument("is_equifacetal: permutation matching is limited to d <= 7");
    if (d == 2) return is_regular(s, tol); // facets are edges
    const double mean_edge =
        s.distance_matrix().sum() / (s.vertex_count() * (s.vertex_count() - 1));
    const double bound = tol.rel * mean_edge;
    const Matrix ref = facet(s, 0).distance_matrix();
    for (int j = 1; j <= d; ++j) {
        const Matrix other = facet(s, j).distance_matrix();
        // Prune: sorted edge multisets must already match.
        std::vector<double> a, b;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) {
                a.push_back(ref(p, q));
                b.push_back(other(p, q));
            }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (size_t k = 0; k < a.size(); ++k)
            if (std::abs(a[k] - b[k]) > bound) return false;
        if (best_relabeling_mismatch(ref, other, bound) > bound) return false;
    }
    return true;
}

bool is_equiareal(const Simplex& s, const Tolerance& tol) {
    std::vector<double> volumes;
    for (int j = 0; j < s.vertex_count(); ++j)
        volumes.push_back(facet_volume(s, j));
    return relative_spread(volumes) <= tol.rel;
}

bool is_equiradial(const Simplex& s, const Tolerance& tol) {
    const auto radii = facet_values(
        s, +[](const Simplex& f) { return circumsphere(f).radius; });
    return relative_spread(radii) <= tol.rel;
}

bool has_well_distributed_edges(const Simplex& s, const Tolerance& tol) {
    std::vector<double> sums;
    for (int j = 0; j < s.vertex_count(); ++j) {
        double total = 0.0;
        for (int i = 0; i < s.vertex_count(); ++i) {
            if (i == j) continue;
            for (int k = i + 1; k < s.vertex_count(); ++k) {
                if (k == j) continue;
                const double l = s.edge_length(i, k);
                total += l * l;
            }
        }
        sums.push_back(total);
    }
    return relative_spread(sums) <= tol.rel;
}

std::optional<int> isosceles_apex(const Simplex& s, const Tolerance& tol) {
    for (int i = 0; i < s.vertex_count(); ++i) {
        std::vector<double> incident;
        for (int j = 0; j < s.vertex_count(); ++j)
            if (j != i) incident.push_back(s.edge_length(i, j));
        if (relative_spread(incident) <= tol.rel) return i;
    }
    return std::nullopt;
}

bool is_orthocentric(const Simplex& s, const Tolerance& tol) {
    if (s.dim() == 3) {
        const double scale = s.max_edge_length();
        const double bound = tol.abs * (1.0 + scale * scale);
        const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& p : pairs) {
            const double dot = (s.vertex(p[1]) - s.vertex(p[0]))
                                   .dot(s.vertex(p[3]) - s.vertex(p[2]));
            if (std::abs(dot) > bound) return false;
        }
        return true;
    }
    return orthocenter(s, tol).has_value();
}

bool facet_inradii_equal(const Simplex& s, const Tolerance& tol) {
    if (s.dim() < 2)
        throw std::invalid_argument("facet_inradii_equal: requires dim >= 2");
    const auto radii = facet_values(
        s, +[](const Simplex& f) { return insphere(f).radius; });
    return relative_spread(radii) <= tol.rel;
}

ClassificationReport classify(const Simplex& s, const Tolerance& tol) {
    ClassificationReport r;
    r.dimension = s.dim();
    r.degenerate = volume(s) < tol.abs;

    r.edge_lengths = edge_lengths_of(s);
    r.edge_spread = relative_spread(r.edge_lengths);
    for (int j = 0; j < s.vertex_count(); ++j)
        r.facet_volumes.push_back(facet_volume(s, j));
    r.facet_volume_spread = relative_spread(r.facet_volumes);
    if (s.dim() >= 2) {
        r.facet_circumradii = facet_values(
            s, +[](const Simplex& f) { return circumsphere(f).radius; });
        r.facet_inradii = facet_values(
            s, +[](const Simplex& f) { return insphere(f).radius; });
        r.facet_circumradius_spread = relative_spread(r.facet_circumradii);
        r.facet_inradius_spread = relative_spread(r.facet_inradii);
    }
    for (int j = 0; j < s.vertex_count(); ++j) {
        double total = 0.0;
        for (int i = 0; i < s.vertex_count(); ++i) {
            if (i == j) continue;
            for (int k = i + 1; k < s.vertex_count(); ++k) {
                if (k == j) continue;
                const double l = s.edge_length(i, k);
                total += l * l;
            }
        }
        r.facet_edge_square_sums.push_back(total);
    }
    r.edge_square_sum_spread = relative_spread(r.facet_edge_square_sums);

    r.regular = is_regular(s, tol);
    r.equifacetal = s.dim() <= 7 ? is_equifacetal(s, tol) : false;
    r.equiareal = r.facet_volume_spread <= tol.rel;
    r.equiradial = s.dim() >= 2 && r.facet_circumradius_spread <= tol.rel;
    r.well_distributed_edges = r.edge_square_sum_spread <= tol.rel;
    r.isosceles_apex = isosceles_apex(s, tol);
    r.orthocentric = is_orthocentric(s, tol);
    r.facet_inradii_all_equal = s.dim() >= 2 && r.facet_inradius_spread <= tol.rel;

    if (s.dim() == 3) {
        const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& p : pairs)
            r.opposite_edge_pairs.emplace_back(s.edge_length(p[0], p[1]),
                                               s.edge_length(p[2], p[3]));
        for (int j = 0; j < 4; ++j) {
            double perimeter = 0.0;
            for (int i = 0; i < 4; ++i) {
                if (i == j) continue;
                for (int k = i + 1; k < 4; ++k)
                    if (k != j) perimeter += s.edge_length(i, k);
            }
            r.facet_perimeters.push_back(perimeter);
        }
    }

    if (s.dim() >= 3 && s.dim() <= 7) {
        // Equifacetal mismatch witness: worst best-relabeling deviation
        // against facet 0, relative to the mean edge.
        const double mean_edge =
            s.distance_matrix().sum() / (s.vertex_count() * (s.vertex_count() - 1));
        const Matrix ref = facet(s, 0).distance_matrix();
        double worst = 0.0;
        for (int j = 1; j <= s.dim(); ++j)
            worst = std::max(
                worst, best_relabeling_mismatch(ref, facet(s, j).distance_matrix(), 0.0));
        r.equifacetal_mismatch = worst / mean_edge;
    }
    return r;
}

} // namespace simplex

#ifndef SIMPLEX_CLASSIFY_HPP
#define SIMPLEX_CLASSIFY_HPP

#include "simplex/geometry.hpp"

#include <optional>
#include <vector>

namespace simplex {

/// Relative spread (max - min) / mean of a list of positive quantities.
/// Zero for an empty or constant list.
double relative_spread(const std::vector<double>& values);

/// All edges equal within tol.rel (max/min ratio within 1 + tol.rel).
bool is_regular(const Simplex& s, const Tolerance& tol = {});

/// All facets congruent: for each facet there is a vertex relabeling whose
/// distance matrix matches the first facet's entrywise within tol.rel of
/// the mean edge length. The permutation search is pruned by comparing
/// sorted edge multisets and is limited to d <= 7.
bool is_equifacetal(const Simplex& s, const Tolerance& tol = {});

/// All facet (d-1)-volumes equal within tol.rel.
bool is_equiareal(const Simplex& s, const Tolerance& tol = {});

/// All facet circumradii equal within tol.rel.
bool is_equiradial(const Simplex& s, const Tolerance& tol = {});

/// The sums of squared edge lengths taken per facet are equal within
/// tol.rel ("well-distributed edge lengths").
bool has_well_distributed_edges(const Simplex& s, const Tolerance& tol = {});

/// Index of an apex whose d incident edges are equal within tol.rel,
/// choosing the smallest such index; nullopt when none exists.
std::optional<int> isosceles_apex(const Simplex& s, const Tolerance& tol = {});

/// For d = 3: the three products of opposite edge directions vanish,
/// (A_i - A_k) . (A_j - A_l) = 0 in translation-invariant form. For other
/// dimensions: the altitudes concur (every triangle qualifies).
bool is_orthocentric(const Simplex& s, const Tolerance& tol = {});

/// All facet inradii equal within tol.rel.
bool facet_inradii_equal(const Simplex& s, const Tolerance& tol = {});

struct ClassificationReport {
    int dimension = 0;
    bool regular = false;
    bool equifacetal = false;
    bool equiareal = false;
    bool equiradial = false;
    bool well_distributed_edges = false;
    std::optional<int> isosceles_apex;
    bool orthocentric = false;
    bool facet_inradii_all_equal = false;
    /// Volume below tol.abs makes every predicate unreliable.
    bool degenerate = false;

    // Witnesses: the exact quantities the predicates compare.
    std::vector<double> edge_lengths;
    std::vector<double> facet_volumes;
    std::vector<double> facet_circumradii;
    std::vector<double> facet_inradii;
    std::vector<double> facet_edge_square_sums;
    double edge_spread = 0.0;
    double facet_volume_spread = 0.0;
    double facet_circumradius_spread = 0.0;
    double facet_inradius_spread = 0.0;
    double edge_square_sum_spread = 0.0;
    /// Entrywise mismatch of the best facet relabeling, relative to the
    /// mean edge (drives `equifacetal`).
    double equifacetal_mismatch = 0.0;

    // Tetrahedron-only witnesses (empty otherwise): the three pairs of
    // opposite edge lengths and the four facet perimeters.
    std::vector<std::pair<double, double>> opposite_edge_pairs;
    std::vector<double> facet_perimeters;
};

ClassificationReport classify(const Simplex& s, const Tolerance& tol = {});

} // namespace simplex

#endif

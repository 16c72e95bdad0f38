#ifndef SIMPLEX_CEVIANS_HPP
#define SIMPLEX_CEVIANS_HPP

#include "simplex/geometry.hpp"

#include <optional>
#include <vector>

namespace simplex {

/// Coefficients of the affine dependence expressing p through the vertices,
/// normalized to sum 1 (identical to the barycentric coordinates). Throws
/// when p is a vertex, or when the cevian through some vertex is undefined
/// because the complementary coefficient sum 1 - w_k vanishes within
/// tolerance (reported with the offending vertex).
Vector dependence_coefficients(const Simplex& s, const Vector& p,
                               const Tolerance& tol = {});

struct CevianReport {
    Vector through;                ///< the common interior point of the cevians
    Vector coefficients;           ///< dependence coefficients, sum 1
    std::vector<Vector> feet;      ///< intersection of cevian j with facet j's hull
    std::vector<double> lengths;   ///< |A_j - foot_j|
    double length_spread = 0.0;    ///< relative spread of the lengths
    bool equal = false;            ///< length_spread <= tol.rel
    /// Filled when `through` is the circumcenter: the partition size of the
    /// equal-cevian structure (see equal_cevian_structure).
    std::optional<int> structure_r;
};

/// The d+1 cevians through p: segments from each vertex to the affine hull
/// of the opposite facet along the line through p. Foot j equals
/// p - w_j (A_j - p) / (1 - w_j) and the length is |A_j - p| / |1 - w_j|.
CevianReport cevian_feet(const Simplex& s, const Vector& p, const Tolerance& tol = {});

struct CevianStructure {
    int r = 0;                        ///< size of the small group, r < (d+1)/2
    std::vector<int> group;           ///< vertex indices with coefficient b
    double relation_residual = 0.0;   ///< norm of the defining combination
};

/// For a simplex inscribed in the unit sphere centered at the origin:
/// detects whether the cevians through the origin have equal length, and if
/// so recovers the vertex partition realizing the split-sum structure
/// (2d - 2r + 1) * sum(group) - (2r - 1) * sum(rest) = 0. r = 0 means the
/// origin is the centroid. Returns nullopt when the cevian lengths differ.
/// Throws unless all vertex norms are 1 within tolerance.
std::optional<CevianStructure> equal_cevian_structure(const Simplex& s,
                                                      const Tolerance& tol = {});

struct CevianEquivalence {
    bool centroid_equals_circumcenter = false;
    bool equal_through_centroid = false;
    bool equal_through_fermat = false;        ///< valid only if fermat_floating
    bool circumcenter_inside_and_equal = false; ///< valid only if membership_decisive
    bool fermat_floating = false;
    bool membership_decisive = false;
    /// All four conditions agree (evaluated only over the valid ones when a
    /// flag disqualifies one).
    bool consistent = false;
};

/// Evaluates the four equivalent characterizations: centroid = circumcenter;
/// equal cevians through the centroid; equal cevians through the (floating)
/// Fermat-Torricelli point; circumcenter inside the simplex with equal
/// cevians through it.
CevianEquivalence cevian_center_equivalence(const Simplex& s, const Tolerance& tol = {});

} // namespace simplex

#endif

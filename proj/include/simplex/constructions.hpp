#ifndef SIMPLEX_CONSTRUCTIONS_HPP
#define SIMPLEX_CONSTRUCTIONS_HPP

#include "simplex/geometry.hpp"

#include <array>
#include <utility>
#include <vector>

namespace simplex {

struct TriangleMetrics {
    double a = 0, b = 0, c = 0;
    double area = 0;
    double circumradius = 0;
    double inradius = 0;
    double edge_square_sum = 0;       ///< u = a^2 + b^2 + c^2
    double sixteen_area_squared = 0;  ///< Q = 16 K^2
    bool acute = false;
    double angle_a = 0, angle_b = 0, angle_c = 0;
};

/// Heron-based metrics of a triangle with sides (a, b, c). Throws when the
/// strict triangle inequality fails.
TriangleMetrics triangle_metrics(double a, double b, double c);

/// Tetrahedron with five unit edges and one edge of length t in (0, sqrt 3),
/// obtained by folding two unit rhombus halves along the shared diagonal:
/// vertices A = (0,0,0), C = (1,0,0), B = (1/2, sqrt3/2, 0) and D at fold
/// angle theta with cos(theta) = 1 - 2 t^2 / 3. Edge BD has length t.
Simplex rhombus_fold_tetrahedron(double t);

/// The parameter t != 1 for which all four facet inradii of
/// rhombus_fold_tetrahedron(t) agree, found by bisection; equals
/// (3 + sqrt 33) / 6. The facets are then pairwise incongruent.
double equal_facet_inradius_parameter();

/// Tetrahedron with opposite edges pairwise equal and every facet congruent
/// to the acute triangle (a, b, c): vertices (+-p, +-q, +-s) with an even
/// number of minus signs, where p^2 = (-a^2+b^2+c^2)/8 and cyclically.
/// Centered so that centroid = circumcenter = origin; the squared
/// circumradius is u/8. Throws unless (a, b, c) is strictly acute.
Simplex equifacetal_tetrahedron(double a, double b, double c);

/// Appends an apex at height h above the circumcenter of `base` (which must
/// sit at the origin of its space). All apex edges equal
/// sqrt(h^2 + circumradius(base)^2).
Simplex isosceles_over(const Simplex& base, double height, const Tolerance& tol = {});

/// Circumradius of an isosceles simplex with apex edge h over a base of
/// circumradius r_base: h^2 / (2 sqrt(h^2 - r_base^2)). Requires h > r_base.
double isosceles_circumradius(double apex_edge, double base_circumradius);

/// d-simplex (d >= 4) whose facets share one circumradius but not one
/// volume: a regular (d-1)-simplex base of edge 1 with apex edge
/// h = r_f / sqrt(1 - r_f^2), where r_f is the circumradius of a regular
/// (d-2)-simplex of edge 1.
Simplex equiradial_not_equiareal(int dim);

/// Apex over the incenter of an equiareal base at height
/// inradius * sqrt(d^2 - 1), which makes every facet volume of the result
/// equal (d = base dim + 1). Grows an equiareal family in any dimension.
Simplex equiareal_over(const Simplex& base, const Tolerance& tol = {});

/// Isosceles extension of an equiradial base whose new facets reproduce the
/// base circumradius: apex edge h with h^2 = 2 R^2 +- 2 R sqrt(R^2 - r_f^2)
/// (R = base circumradius, r_f = common facet circumradius of the base).
/// `plus_root` selects the branch; the minus branch exists only when
/// r_f > (sqrt 3 / 2) R.
Simplex equiradial_over(const Simplex& base, bool plus_root, const Tolerance& tol = {});

/// 4-simplex whose incenter and Fermat-Torricelli point coincide while the
/// simplex is not equifacetal. The base equifacetal_tetrahedron(a, b, c)
/// must satisfy 3 r < R < sqrt(15) r; the apex height over the base
/// circumcenter is tuned by bisection until the incenter reaches the
/// Fermat-Torricelli height R / sqrt(15).
Simplex incenter_fermat_coincident(double a, double b, double c, const Tolerance& tol = {});

/// An (a, b, c) triple whose equifacetal tetrahedron falls inside the
/// success region of incenter_fermat_coincident, found by scanning
/// isosceles acute triples (1, 1, c).
std::array<double, 3> incenter_fermat_base_scan();

/// One-parameter family of 4-simplices on which centroid, circumcenter,
/// incenter and Fermat-Torricelli point all coincide: Gram matrix with unit
/// diagonal, zero row sums, and off-diagonal pattern built from x. Feasible
/// exactly when the matrix is positive semidefinite of rank 4; throws
/// outside that interval (reporting the eigenvalues). x = -1/4 gives the
/// regular simplex.
struct GramFamilyMember {
    Matrix gram;
    Simplex simplex;
};
GramFamilyMember four_coincident_centers_gram(double x, const Tolerance& tol = {});

/// Endpoints of the x-interval on which four_coincident_centers_gram is
/// feasible, located numerically by bisection on the rank-4 PSD test.
std::pair<double, double> four_coincident_feasible_interval(const Tolerance& tol = {});

/// A 4-simplex with all facet volumes equal (which forces the incenter onto
/// the centroid) whose circumcenter stays away from both: fixed Gram matrix
/// with unit diagonal and off-diagonal pattern in x = 4 - sqrt(17).
GramFamilyMember equiareal_distinct_centers_gram(const Tolerance& tol = {});

/// 4-simplex that is equiareal and equiradial but not equifacetal: an
/// isosceles acute triangle inscribed in a unit circle with edge square sum
/// u = 25/3 generates the base tetrahedron; the apex edge satisfies
/// h^2 = u/5. Found by bisection on the base apex angle.
Simplex equiareal_equiradial_not_equifacetal(const Tolerance& tol = {});

/// `dim` unit vectors B_j = (E_j + x V) / sqrt(1 + x^2) that are equally
/// inclined to the unit vector V and sum to t V, where the E_j form a
/// regular (dim-1)-simplex of circumradius 1 orthogonal to V and
/// dim * x / sqrt(1 + x^2) = t. Requires 0 < |t| < dim and 2 <= dim <=
/// ambient dimension.
std::vector<Vector> equally_inclined_basis(const Vector& v, double t, int dim,
                                           const Tolerance& tol = {});

/// d+1 unit vectors in R^d, affinely independent, satisfying
/// b (A_1 + ... + A_r) + c (A_{r+1} + ... + A_{d+1}) = 0: two equally
/// inclined families in complementary subspaces share the axis V, with
/// (b, c) rescaled into the feasible range with a 10% margin. Requires
/// 2 <= r <= d - 1, nonzero b and c, and b r + c (d + 1 - r) != 0.
std::vector<Vector> split_sum_unit_vectors(double b, double c, int r, int d,
                                           const Tolerance& tol = {});

/// d-simplex (d >= 4) inscribed in the unit sphere whose circumcenter lies
/// outside the simplex while all cevians through it have equal length:
/// split_sum_unit_vectors with b = 2d - 2r + 1, c = -(2r - 1). Requires
/// 2 <= r < (d + 1) / 2.
Simplex exterior_circumcenter_equal_cevians(int dim, int r, const Tolerance& tol = {});

} // namespace simplex

#endif

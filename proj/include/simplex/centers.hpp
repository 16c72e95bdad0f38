#ifndef SIMPLEX_CENTERS_HPP
#define SIMPLEX_CENTERS_HPP

#include "simplex/geometry.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace simplex {

struct Sphere {
    Vector center;
    double radius = 0.0;
};

enum class FermatMode { floating, absorbed };

struct FermatPoint {
    Vector point;
    FermatMode mode = FermatMode::floating;
    int absorbed_vertex = -1; ///< vertex index when mode == absorbed
    double residual = 0.0;    ///< norm of the unit-vector sum at the result
    int iterations = 0;
};

Vector centroid(const Simplex& s);

/// Unique point equidistant from all vertices, from the linear system
/// 2 (A_i - A_{d+1}) . C = |A_i|^2 - |A_{d+1}|^2.
Sphere circumsphere(const Simplex& s, const Tolerance& tol = {});

/// Incenter as the facet-volume weighted vertex mean, with inradius
/// r = d V / sum of facet volumes.
Sphere insphere(const Simplex& s);

/// Minimizer of the total vertex distance. A vertex whose outgoing unit
/// vectors sum to norm <= 1 (plus tolerance) absorbs the minimum; otherwise
/// Weiszfeld iteration from the centroid converges to the interior
/// ("floating") minimizer with first-order residual <= tol.abs.
FermatPoint fermat_torricelli(const Simplex& s, const Tolerance& tol = {});

/// Reflection of the circumcenter in the centroid, 2 G - C. For d = 3 this
/// is the common point of the six hyperplanes through the centroid of each
/// opposite vertex pair's complement perpendicular to that edge, and it
/// equals the orthocenter whenever one exists. (For d = 2 the reflection is
/// not the triangle orthocenter, which is 3 G - 2 C.)
Vector monge_point(const Simplex& s, const Tolerance& tol = {});

/// Common point of the d+1 altitude lines when they concur: the decision
/// uses pairwise line-line distances and the least-squares intersection
/// residual, both against tol.abs * (1 + circumradius). Generic simplices
/// with d >= 3 have no orthocenter.
std::optional<Vector> orthocenter(const Simplex& s, const Tolerance& tol = {});

/// Vertex mean weighted by the total edge length of the opposite facet
/// (for d = 3, the perimeter of the opposite triangle).
Vector complementary_one_centroid(const Simplex& s);

/// Center and radius of a sphere tangent to every edge line at interior
/// division points, when one exists. Tangent lengths come from the
/// least-squares solution of a_i + a_j = |A_i A_j|; the sphere center from
/// the perpendicular hyperplanes at the division points. Returns nullopt
/// when any residual exceeds tolerance. Every triangle has one (the
/// incircle); for d >= 3 existence is a strong constraint.
std::optional<Sphere> one_center(const Simplex& s, const Tolerance& tol = {});

struct CenterReport {
    Vector centroid;
    Sphere circumscribed;
    Sphere inscribed;
    FermatPoint fermat;
    Vector monge;
    std::optional<Vector> orthocenter;
    Vector complementary_one_centroid;
    std::optional<Sphere> one_center;
    /// Lexicographically sorted name pairs of centers that lie within
    /// tol.abs * (1 + circumradius) of each other.
    std::vector<std::pair<std::string, std::string>> coincidences;
};

CenterReport all_centers(const Simplex& s, const Tolerance& tol = {});

/// True when |x - y| <= tol.abs * (1 + circumradius of s).
bool centers_coincide(const Simplex& s, const Vector& x, const Vector& y,
                      const Tolerance& tol = {});

/// Translation taking the circumcenter to the origin.
Simplex recentered_at_circumcenter(const Simplex& s, const Tolerance& tol = {});

} // namespace simplex

#endif

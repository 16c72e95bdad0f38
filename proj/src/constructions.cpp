#include "simplex/constructions.hpp"

#include "simplex/centers.hpp"
#include "simplex/classify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace simplex {

namespace {

std::string describe(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

/// Bisection to an interval of width <= 1e-12 (at most 200 steps). f must
/// change sign on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::runtime_error("bisect: no sign change on [" + describe(lo) + ", " +
                                 describe(hi) + "]");
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = (lo + hi) / 2.0;
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

/// dim unit vectors summing to t*V inside span(V, frame columns), where the
/// frame columns are orthonormal and orthogonal to V.
std::vector<Vector> equally_inclined_in_frame(const Vector& v, const Matrix& frame,
                                              double t) {
    const int dim = static_cast<int>(frame.cols()) + 1;
    if (dim < 2)
        throw std::invalid_argument("equally_inclined: need at least two vectors");
    if (t == 0.0 || std::abs(t) >= dim)
        throw std::invalid_argument("equally_inclined: t = " + describe(t) +
                                    " outside (-dim, dim) \\ {0} for dim = " +
                                    std::to_string(dim));
    const double x = t / std::sqrt(static_cast<double>(dim) * dim - t * t);
    const double norm = std::sqrt(1.0 + x * x);
    // Regular (dim-1)-simplex with circumradius 1 in the frame subspace.
    const int k = dim - 1;
    const double unit_circumradius = std::sqrt(k / (2.0 * (k + 1)));
    const Simplex e = regular_simplex(k, 1.0 / unit_circumradius);
    std::vector<Vector> result;
    result.reserve(dim);
    for (int j = 0; j < dim; ++j)
        result.push_back((frame * e.vertex(j) + x * v) / norm);
    return result;
}

} // namespace

TriangleMetrics triangle_metrics(double a, double b, double c) {
    if (!(a > 0 && b > 0 && c > 0))
        throw std::invalid_argument("triangle_metrics: sides must be positive");
    const double margins[3] = {b + c - a, a + c - b, a + b - c};
    for (double m : margins)
        if (m <= 0.0)
            throw std::invalid_argument("triangle_metrics: triangle inequality violated (" +
                                        describe(a) + ", " + describe(b) + ", " +
                                        describe(c) + "), slack " + describe(m));
    TriangleMetrics t;
    t.a = a;
    t.b = b;
    t.c = c;
    const double s = (a + b + c) / 2.0;
    t.area = std::sqrt(s * (s - a) * (s - b) * (s - c));
    t.circumradius = a * b * c / (4.0 * t.area);
    t.inradius = t.area / s;
    t.edge_square_sum = a * a + b * b + c * c;
    t.sixteen_area_squared = 16.0 * t.area * t.area;
    t.acute = (a * a < b * b + c * c) && (b * b < a * a + c * c) && (c * c < a * a + b * b);
    t.angle_a = std::acos((b * b + c * c - a * a) / (2.0 * b * c));
    t.angle_b = std::acos((a * a + c * c - b * b) / (2.0 * a * c));
    t.angle_c = std::acos((a * a + b * b - c * c) / (2.0 * a * b));
    return t;
}

Simplex rhombus_fold_tetrahedron(double t) {
    if (!(t > 0.0 && t < std::sqrt(3.0)))
        throw std::invalid_argument("rhombus_fold_tetrahedron: t = " + describe(t) +
                                    " outside (0, sqrt 3)");
    const double cos_theta = 1.0 - 2.0 * t * t / 3.0;
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    Matrix v(3, 4);
    v.col(0) << 0.0, 0.0, 0.0;                                    // A
    v.col(1) << 0.5, half_sqrt3, 0.0;                             // B
    v.col(2) << 1.0, 0.0, 0.0;                                    // C
    v.col(3) << 0.5, half_sqrt3 * cos_theta, half_sqrt3 * sin_theta; // D
    return Simplex(std::move(v));
}

double equal_facet_inradius_parameter() {
    // Facet inradii of rhombus_fold_tetrahedron(t) agree exactly when
    // f(t) = t^2 (2 - t) / (t + 2) equals f(1) = 1/3 with t != 1.
    const auto f = [](double t) { return t * t * (2.0 - t) / (t + 2.0) - 1.0 / 3.0; };
    return bisect(f, 1.01, std::sqrt(3.0) - 1e-9);
}

Simplex equifacetal_tetrahedron(double a, double b, double c) {
    const TriangleMetrics m = triangle_metrics(a, b, c);
    if (!m.acute)
        throw std::invalid_argument("equifacetal_tetrahedron: (" + describe(a) + ", " +
                                    describe(b) + ", " + describe(c) +
                                    ") is not strictly acute");
    const double p2 = (-a * a + b * b + c * c) / 8.0;
    const double q2 = (a * a + b * b - c * c) / 8.0;
    const double s2 = (a * a - b * b + c * c) / 8.0;
    const double p = std::sqrt(p2), q = std::sqrt(q2), s = std::sqrt(s2);
    Matrix v(3, 4);
    v.col(0) << p, q, s;
    v.col(1) << p, -q, -s;
    v.col(2) << -p, q, -s;
    v.col(3) << -p, -q, s;
    return Simplex(std::move(v));
}

Simplex isosceles_over(const Simplex& base, double height, const Tolerance& tol) {
    if (height <= 0.0)
        throw std::invalid_argument("isosceles_over: height must be positive");
    const Sphere circ = circumsphere(base, tol);
    if (circ.center.norm() > tol.abs * (1.0 + circ.radius))
        throw std::invalid_argument(
            "isosceles_over: base circumcenter is not at the origin (offset " +
            describe(circ.center.norm()) + ")");
    const int d = base.dim() + 1;
    Matrix v = Matrix::Zero(d, d + 1);
    v.topLeftCorner(d - 1, d) = base.vertices();
    v(d - 1, d) = height;
    return Simplex(std::move(v));
}

double isosceles_circumradius(double apex_edge, double base_circumradius) {
    if (!(apex_edge > base_circumradius))
        throw std::invalid_argument("isosceles_circumradius: apex edge " +
                                    describe(apex_edge) +
                                    " must exceed the base circumradius " +
                                    describe(base_circumradius));
    const double h2 = apex_edge * apex_edge;
    return h2 / (2.0 * std::sqrt(h2 - base_circumradius * base_circumradius));
}

Simplex equiradial_not_equiareal(int dim) {
    if (dim < 4)
        throw std::invalid_argument("equiradial_not_equiareal: requires dim >= 4, got " +
                                    std::to_string(dim));
    const int k = dim - 2;
    const double r_f = std::sqrt(k / (2.0 * (k + 1)));
    const double h = r_f / std::sqrt(1.0 - r_f * r_f);
    const Simplex base = regular_simplex(dim - 1, 1.0);
    const double r_base = circumsphere(base).radius;
    if (!(h > r_base))
        throw std::invalid_argument("equiradial_not_equiareal: infeasible apex edge");
    const double height = std::sqrt(h * h - r_base * r_base);
    return isosceles_over(base, height);
}

Simplex equiareal_over(const Simplex& base, const Tolerance& tol) {
    if (!is_equiareal(base, tol))
        throw std::invalid_argument("equiareal_over: base is not equiareal (spread " +
                                    describe(relative_spread([&] {
                                        std::vector<double> v;
                                        for (int j = 0; j < base.vertex_count(); ++j)
                                            v.push_back(facet_volume(base, j));
                                        return v;
                                    }())) + ")");
    const Sphere in = insphere(base);
    const int d = base.dim() + 1;
    const double height = in.radius * std::sqrt(static_cast<double>(d) * d - 1.0);
    Matrix v = Matrix::Zero(d, d + 1);
    v.topLeftCorner(d - 1, d) = base.vertices();
    v.col(d).head(d - 1) = in.center;
    v(d - 1, d) = height;
    return Simplex(std::move(v));
}

Simplex equiradial_over(const Simplex& base, bool plus_root, const Tolerance& tol) {
    if (!is_equiradial(base, tol))
        throw std::invalid_argument("equiradial_over: base is not equiradial");
    const Simplex centered = recentered_at_circumcenter(base, tol);
    const double big_r = circumsphere(centered, tol).radius;
    const double r_f = circumsphere(facet(centered, 0)).radius;
    if (!(big_r > r_f))
        throw std::invalid_argument("equiradial_over: base circumradius " + describe(big_r) +
                                    " does not exceed its facet circumradius " +
                                    describe(r_f));
    const double root = big_r * std::sqrt(big_r * big_r - r_f * r_f);
    const double h2 = plus_root ? 2.0 * big_r * big_r + 2.0 * root
                                : 2.0 * big_r * big_r - 2.0 * root;
    if (!(h2 > big_r * big_r))
        throw std::invalid_argument(
            "equiradial_over: minus branch infeasible (needs facet circumradius > "
            "(sqrt 3 / 2) * base circumradius)");
    const double height = std::sqrt(h2 - big_r * big_r);
    return isosceles_over(centered, height, tol);
}

Simplex incenter_fermat_coincident(double a, double b, double c, const Tolerance& tol) {
    const Simplex base = equifacetal_tetrahedron(a, b, c);
    const double big_r = circumsphere(base, tol).radius;
    const double r = insphere(base).radius;
    const double sqrt15 = std::sqrt(15.0);
    if (!(big_r > 3.0 * r && big_r < sqrt15 * r))
        throw std::invalid_argument(
            "incenter_fermat_coincident: base ratio R/r = " + describe(big_r / r) +
            " outside (3, sqrt 15)");
    const double target = big_r / sqrt15; // Fermat-Torricelli height of the apex family

    const auto incenter_height = [&](double height) {
        return insphere(isosceles_over(base, height, tol)).center(3) - target;
    };
    double lo = target * (1.0 + 1e-6);
    double hi = std::max(1.0, 4.0 * target);
    int guard = 0;
    while (incenter_height(hi) < 0.0) {
        hi *= 2.0;
        if (++guard > 60)
            throw std::runtime_error("incenter_fermat_coincident: no bracketing height");
    }
    const double height = bisect(incenter_height, lo, hi);
    Simplex result = isosceles_over(base, height, tol);

    const Vector incenter = insphere(result).center;
    const Vector fermat = fermat_torricelli(result, tol).point;
    if ((incenter - fermat).norm() > 1e-8)
        throw std::runtime_error("incenter_fermat_coincident: centers failed to meet, gap " +
                                 describe((incenter - fermat).norm()));
    if (is_equifacetal(result, tol))
        throw std::runtime_error("incenter_fermat_coincident: result is equifacetal");
    return result;
}

std::array<double, 3> incenter_fermat_base_scan() {
    const double sqrt15 = std::sqrt(15.0);
    for (double c = 1.02; c < 1.40; c += 0.01) {
        const Simplex base = equifacetal_tetrahedron(1.0, 1.0, c);
        const double ratio = circumsphere(base).radius / insphere(base).radius;
        if (ratio > 3.05 && ratio < sqrt15 - 0.05) return {1.0, 1.0, c};
    }
    throw std::runtime_error("incenter_fermat_base_scan: no admissible triple found");
}

namespace {

Matrix four_coincident_gram_matrix(double x) {
    const double y = -0.5 - x;
    Matrix g(5, 5);
    g << 1, x, x, y, y,
         x, 1, y, x, y,
         x, y, 1, y, x,
         y, x, y, 1, x,
         y, y, x, x, 1;
    return g;
}

bool rank4_psd(const Matrix& g, const Tolerance& tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    const Vector& lambda = es.eigenvalues();
    const double cutoff = tol.abs * std::max(1.0, lambda(4));
    if (lambda(0) < -cutoff) return false;
    int rank = 0;
    for (int i = 0; i < 5; ++i)
        if (lambda(i) > cutoff) ++rank;
    return rank == 4;
}

} // namespace

GramFamilyMember four_coincident_centers_gram(double x, const Tolerance& tol) {
    Matrix g = four_coincident_gram_matrix(x);
    if (!rank4_psd(g, tol)) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(g);
        std::ostringstream os;
        os << "four_coincident_centers_gram: x = " << describe(x)
           << " outside the feasible interval, eigenvalues:";
        for (int i = 0; i < 5; ++i) os << " " << describe(es.eigenvalues()(i));
        throw std::invalid_argument(os.str());
    }
    return {g, simplex_from_gram(g, tol)};
}

std::pair<double, double> four_coincident_feasible_interval(const Tolerance& tol) {
    const auto feasible = [&](double x) {
        return rank4_psd(four_coincident_gram_matrix(x), tol) ? 1.0 : -1.0;
    };
    // The family is feasible at the regular point x = -1/4 and infeasible
    // beyond +-1; bracket each endpoint from there.
    const double inner = -0.25;
    const double lower = bisect(feasible, -1.0, inner);
    const double upper = bisect(feasible, inner, 1.0);
    return {lower, upper};
}

GramFamilyMember equiareal_distinct_centers_gram(const Tolerance& tol) {
    const double x = 4.0 - std::sqrt(17.0);
    Matrix g(5, 5);
    g << 1, x, x, -1 - 2 * x, x,
         x, 1, 5 * x, x, x,
         x, 5 * x, 1, x, x,
         -1 - 2 * x, x, x, 1, x,
         x, x, x, x, 1;
    return {g, simplex_from_gram(g, tol)};
}

Simplex equiareal_equiradial_not_equifacetal(const Tolerance& tol) {
    // Isosceles triangle inscribed in the unit circle with base angles
    // theta: sides (2 sin theta, 2 sin theta, 2 sin 2theta) and edge square
    // sum u(theta) = 4 (2 sin^2 theta + sin^2 2theta), increasing from 8 to
    // 9 on (pi/4, pi/3). The target u = 25/3 keeps the apex edge real.
    const double target_u = 25.0 / 3.0;
    const auto u_of = [](double theta) {
        const double s1 = std::sin(theta);
        const double s2 = std::sin(2.0 * theta);
        return 4.0 * (2.0 * s1 * s1 + s2 * s2);
    };
    const double pi = std::acos(-1.0);
    const double theta =
        bisect([&](double th) { return u_of(th) - target_u; }, pi / 4.0 + 1e-6, pi / 3.0);
    const double a = 2.0 * std::sin(theta);
    const double c = 2.0 * std::sin(2.0 * theta);
    const Simplex base = equifacetal_tetrahedron(a, a, c);
    const double u = u_of(theta);
    const double h2 = u / 5.0;
    const double r2 = circumsphere(base, tol).radius;
    const double height = std::sqrt(h2 - r2 * r2);
    return isosceles_over(base, height, tol);
}

std::vector<Vector> equally_inclined_basis(const Vector& v, double t, int dim,
                                           const Tolerance& tol) {
    const int n = static_cast<int>(v.size());
    if (dim < 2 || dim > n)
        throw std::invalid_argument("equally_inclined_basis: need 2 <= dim <= ambient, got dim " +
                                    std::to_string(dim) + " in R^" + std::to_string(n));
    if (std::abs(v.norm() - 1.0) > 100.0 * tol.rel)
        throw std::invalid_argument("equally_inclined_basis: V must be a unit vector, |V| = " +
                                    describe(v.norm()));
    Eigen::HouseholderQR<Matrix> qr{Matrix(v)};
    Matrix q = qr.householderQ();
    const Matrix frame = q.rightCols(n - 1).leftCols(dim - 1);
    return equally_inclined_in_frame(v, frame, t);
}

std::vector<Vector> split_sum_unit_vectors(double b, double c, int r, int d,
                                           const Tolerance& tol) {
    if (d < 3 || r < 2 || r > d - 1)
        throw std::invalid_argument("split_sum_unit_vectors: need 2 <= r <= d - 1, got r = " +
                                    std::to_string(r) + ", d = " + std::to_string(d));
    if (b == 0.0 || c == 0.0)
        throw std::invalid_argument("split_sum_unit_vectors: b and c must be nonzero");
    if (std::abs(b * r + c * (d + 1 - r)) <= tol.abs)
        throw std::invalid_argument("split_sum_unit_vectors: b r + c (d + 1 - r) = " +
                                    describe(b * r + c * (d + 1 - r)) +
                                    " must be nonzero");
    // Rescale (b, c) into the equally-inclined feasible range with margin.
    const double k = 1.1 * std::max(std::abs(c) / r, std::abs(b) / (d - r + 1));
    const double bs = b / k;
    const double cs = c / k;

    const Vector axis = Vector::Unit(d, r - 1);
    Matrix first_frame = Matrix::Zero(d, r - 1);
    for (int i = 0; i < r - 1; ++i) first_frame(i, i) = 1.0;
    Matrix second_frame = Matrix::Zero(d, d - r);
    for (int i = 0; i < d - r; ++i) second_frame(r + i, i) = 1.0;

    std::vector<Vector> vectors = equally_inclined_in_frame(axis, first_frame, -cs);
    std::vector<Vector> rest = equally_inclined_in_frame(axis, second_frame, bs);
    vectors.insert(vectors.end(), rest.begin(), rest.end());

    Vector relation = Vector::Zero(d);
    for (int i = 0; i < r; ++i) relation += b * vectors[i];
    for (int i = r; i <= d; ++i) relation += c * vectors[i];
    if (relation.norm() > 1e-10)
        throw std::runtime_error("split_sum_unit_vectors: relation residual " +
                                 describe(relation.norm()));
    Matrix m(d, d + 1);
    for (int i = 0; i <= d; ++i) m.col(i) = vectors[i];
    if (!affinely_independent(m, tol))
        throw std::runtime_error("split_sum_unit_vectors: vectors are affinely dependent");
    return vectors;
}

Simplex exterior_circumcenter_equal_cevians(int dim, int r, const Tolerance& tol) {
    if (dim < 4)
        throw std::invalid_argument(
            "exterior_circumcenter_equal_cevians: requires dim >= 4, got " +
            std::to_string(dim));
    if (r < 2 || 2 * r >= dim + 1)
        throw std::invalid_argument(
            "exterior_circumcenter_equal_cevians: requires 2 <= r < (dim + 1) / 2, got r = " +
            std::to_string(r));
    const double b = 2.0 * dim - 2.0 * r + 1.0;
    const double c = -(2.0 * r - 1.0);
    const auto vectors = split_sum_unit_vectors(b, c, r, dim, tol);
    Matrix m(dim, dim + 1);
    for (int i = 0; i <= dim; ++i) m.col(i) = vectors[i];
    Simplex s(std::move(m), tol);
    const Sphere circ = circumsphere(s, tol);
    if (circ.center.norm() > tol.abs * (1.0 + circ.radius))
        throw std::runtime_error(
            "exterior_circumcenter_equal_cevians: circumcenter drifted from the origin by " +
            describe(circ.center.norm()));
    return s;
}

} // namespace simplex

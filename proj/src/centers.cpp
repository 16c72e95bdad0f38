#include "simplex/centers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace simplex {

namespace {

std::string describe(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

/// Sum of unit vectors from vertex i toward the other vertices.
Vector vertex_unit_sum(const Simplex& s, int i) {
    Vector f = Vector::Zero(s.dim());
    for (int j = 0; j < s.vertex_count(); ++j) {
        if (j == i) continue;
        Vector diff = s.vertex(j) - s.vertex(i);
        f += diff / diff.norm();
    }
    return f;
}

double distance_sum(const Simplex& s, const Vector& p) {
    double total = 0.0;
    for (int i = 0; i < s.vertex_count(); ++i)
        total += (p - s.vertex(i)).norm();
    return total;
}

/// Norm of the gradient direction sum at p; the first-order optimality
/// residual of the Fermat-Torricelli objective.
double weiszfeld_residual(const Simplex& s, const Vector& p) {
    Vector g = Vector::Zero(s.dim());
    for (int i = 0; i < s.vertex_count(); ++i) {
        Vector diff = p - s.vertex(i);
        g += diff / diff.norm();
    }
    return g.norm();
}

struct Line {
    Vector point;
    Vector direction; // unit
};

double line_line_distance(const Line& a, const Line& b) {
    const Vector w = b.point - a.point;
    const double uu = 1.0, vv = 1.0;
    const double uv = a.direction.dot(b.direction);
    const double det = uu * vv - uv * uv;
    if (det < 1e-14) { // near parallel: point-to-line distance
        Vector r = w - w.dot(a.direction) * a.direction;
        return r.norm();
    }
    const double wu = w.dot(a.direction);
    const double wv = w.dot(b.direction);
    const double t1 = (wu - uv * wv) / det;
    const double t2 = (uv * wu - wv) / det;
    return (w + t2 * b.direction - t1 * a.direction).norm();
}

double point_line_distance(const Vector& p, const Line& l) {
    Vector r = p - l.point;
    r -= r.dot(l.direction) * l.direction;
    return r.norm();
}

/// Unit normal of the affine hull of the facet opposite vertex j.
Vector facet_normal(const Simplex& s, int j) {
    const int d = s.dim();
    Matrix rest(d, d);
    int c = 0;
    for (int i = 0; i <= d; ++i)
        if (i != j) rest.col(c++) = s.vertex(i);
    Matrix diffs(d, d - 1);
    for (int i = 1; i < d; ++i)
        diffs.col(i - 1) = rest.col(i) - rest.col(0);
    Eigen::HouseholderQR<Matrix> qr(diffs);
    Matrix q = qr.householderQ();
    return q.col(d - 1); // orthogonal complement of the facet directions
}

} // namespace

Vector centroid(const Simplex& s) {
    return s.vertices().rowwise().mean();
}

Sphere circumsphere(const Simplex& s, const Tolerance& tol) {
    const int d = s.dim();
    Matrix m(d, d);
    Vector rhs(d);
    const Vector last = s.vertex(d);
    const double last_sq = last.squaredNorm();
    for (int i = 0; i < d; ++i) {
        m.row(i) = 2.0 * (s.vertex(i) - last).transpose();
        rhs(i) = s.vertex(i).squaredNorm() - last_sq;
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(m);
    Vector c = qr.solve(rhs);
    const double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
    const double residual = (m * c - rhs).cwiseAbs().maxCoeff();
    if (residual > 1e4 * tol.abs * scale)
        throw std::runtime_error("circumsphere: ill-conditioned system, residual " +
                                 describe(residual));
    double r = 0.0;
    for (int i = 0; i <= d; ++i)
        r += (c - s.vertex(i)).norm();
    return {c, r / (d + 1)};
}

Sphere insphere(const Simplex& s) {
    const int n = s.vertex_count();
    Vector a(n);
    for (int j = 0; j < n; ++j)
        a(j) = facet_volume(s, j);
    const double total = a.sum();
    Vector center = s.vertices() * (a / total);
    const double r = s.dim() * volume(s) / total;
    return {center, r};
}

FermatPoint fermat_torricelli(const Simplex& s, const Tolerance& tol) {
    const int n = s.vertex_count();
    for (int i = 0; i < n; ++i) {
        const double norm = vertex_unit_sum(s, i).norm();
        if (norm <= 1.0 + tol.abs)
            return {s.vertex(i), FermatMode::absorbed, i, norm, 0};
    }

    const int max_iterations = 100000;
    std::mt19937_64 offset_rng(0x5eed);
    Vector p = centroid(s);
    double obj = distance_sum(s, p);
    for (int iter = 1; iter <= max_iterations; ++iter) {
        Vector num = Vector::Zero(s.dim());
        double den = 0.0;
        bool restepped = false;
        for (int i = 0; i < n; ++i) {
            const double dist = (p - s.vertex(i)).norm();
            if (dist < tol.abs) {
                // Iterate collided with a non-absorbing vertex: restep with a
                // small deterministic offset.
                Vector dir(s.dim());
                std::normal_distribution<double> gauss(0.0, 1.0);
                for (int k = 0; k < s.dim(); ++k) dir(k) = gauss(offset_rng);
                p += 1e-6 * dir / dir.norm();
                obj = distance_sum(s, p);
                restepped = true;
                break;
            }
            num += s.vertex(i) / dist;
            den += 1.0 / dist;
        }
        if (restepped) continue;
        Vector next = num / den;
        double next_obj = distance_sum(s, next);
        int halvings = 0;
        while (next_obj > obj && halvings < 60) {
            next = (next + p) / 2.0;
            next_obj = distance_sum(s, next);
            ++halvings;
        }
        p = next;
        obj = next_obj;
        double residual = weiszfeld_residual(s, p);
        if (residual <= tol.abs)
            return {p, FermatMode::floating, -1, residual, iter};

        // Weiszfeld converges linearly and can stall just above tolerance on
        // elongated simplices; once near the minimizer, Newton steps on the
        // gradient finish the job quadratically.
        if (residual <= 1e-4) {
            for (int polish = 0; polish < 50; ++polish) {
                Vector grad = Vector::Zero(s.dim());
                Matrix hess = Matrix::Zero(s.dim(), s.dim());
                bool near_vertex = false;
                for (int i = 0; i < n; ++i) {
                    const Vector diff = p - s.vertex(i);
                    const double dist = diff.norm();
                    if (dist < tol.abs) {
                        near_vertex = true;
                        break;
                    }
                    const Vector u = diff / dist;
                    grad += u;
                    hess += (Matrix::Identity(s.dim(), s.dim()) -
                             u * u.transpose()) / dist;
                }
                if (near_vertex) break;
                const Vector step = hess.ldlt().solve(-grad);
                // Near the minimizer the objective is flat to machine
                // precision, so progress is judged on the optimality residual.
                Vector candidate = p + step;
                double candidate_residual = weiszfeld_residual(s, candidate);
                int backtracks = 0;
                double damping = 1.0;
                while (!(candidate_residual < residual) && backtracks < 40) {
                    damping /= 2.0;
                    candidate = p + damping * step;
                    candidate_residual = weiszfeld_residual(s, candidate);
                    ++backtracks;
                }
                if (!(candidate_residual < residual)) break;
                p = candidate;
                residual = candidate_residual;
                if (residual <= tol.abs)
                    return {p, FermatMode::floating, -1, residual, iter};
            }
            obj = distance_sum(s, p);
        }
    }
    throw std::runtime_error("fermat_torricelli: no convergence after " +
                             std::to_string(max_iterations) + " iterations, residual " +
                             describe(weiszfeld_residual(s, p)));
}

Vector monge_point(const Simplex& s, const Tolerance& tol) {
    return 2.0 * centroid(s) - circumsphere(s, tol).center;
}

std::optional<Vector> orthocenter(const Simplex& s, const Tolerance& tol) {
    const int d = s.dim();
    const double bound = tol.abs * (1.0 + circumsphere(s, tol).radius);
    std::vector<Line> altitudes;
    altitudes.reserve(d + 1);
    for (int j = 0; j <= d; ++j)
        altitudes.push_back({s.vertex(j), facet_normal(s, j)});
    for (size_t a = 0; a < altitudes.size(); ++a)
        for (size_t b = a + 1; b < altitudes.size(); ++b)
            if (line_line_distance(altitudes[a], altitudes[b]) > bound)
                return std::nullopt;
    Matrix m = Matrix::Zero(d, d);
    Vector rhs = Vector::Zero(d);
    for (const Line& l : altitudes) {
        Matrix proj = Matrix::Identity(d, d) - l.direction * l.direction.transpose();
        m += proj;
        rhs += proj * l.point;
    }
    Vector x = m.ldlt().solve(rhs);
    for (const Line& l : altitudes)
        if (point_line_distance(x, l) > bound)
            return std::nullopt;
    return x;
}

Vector complementary_one_centroid(const Simplex& s) {
    const int n = s.vertex_count();
    Vector w(n);
    for (int j = 0; j < n; ++j) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            for (int k = i + 1; k < n; ++k) {
                if (k == j) continue;
                total += s.edge_length(i, k);
            }
        }
        w(j) = total;
    }
    return s.vertices() * (w / w.sum());
}

std::optional<Sphere> one_center(const Simplex& s, const Tolerance& tol) {
    const int n = s.vertex_count();
    const int d = s.dim();
    const int m = n * (n - 1) / 2;
    Matrix e = Matrix::Zero(m, n);
    Vector lengths(m);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++row) {
            e(row, i) = 1.0;
            e(row, j) = 1.0;
            lengths(row) = s.edge_length(i, j);
            edges.emplace_back(i, j);
        }
    Vector a = e.colPivHouseholderQr().solve(lengths);
    const double scale = 1.0 + lengths.mean();
    if ((e * a - lengths).cwiseAbs().maxCoeff() > tol.abs * scale)
        return std::nullopt;
    if (a.minCoeff() < -tol.abs * scale)
        return std::nullopt; // a tangent point would fall outside its edge

    Matrix lhs = Matrix::Zero(d, d);
    Vector rhs = Vector::Zero(d);
    std::vector<Vector> tangent_points;
    std::vector<Vector> directions;
    tangent_points.reserve(m);
    directions.reserve(m);
    for (int k = 0; k < m; ++k) {
        const auto [i, j] = edges[k];
        Vector u = (s.vertex(j) - s.vertex(i)) / lengths(k);
        Vector t = s.vertex(i) + a(i) * u;
        Matrix proj = u * u.transpose();
        lhs += proj;
        rhs += proj * t;
        tangent_points.push_back(std::move(t));
        directions.push_back(std::move(u));
    }
    Vector x = lhs.ldlt().solve(rhs);

    double radius = 0.0;
    for (int k = 0; k < m; ++k) {
        const Vector v = x - tangent_points[k];
        if (std::abs(v.dot(directions[k])) > tol.abs * scale)
            return std::nullopt;
        radius += v.norm();
    }
    radius /= m;
    for (int k = 0; k < m; ++k)
        if (std::abs((x - tangent_points[k]).norm() - radius) > tol.abs * scale)
            return std::nullopt;
    return Sphere{x, radius};
}

bool centers_coincide(const Simplex& s, const Vector& x, const Vector& y,
                      const Tolerance& tol) {
    return (x - y).norm() <= tol.abs * (1.0 + circumsphere(s, tol).radius);
}

CenterReport all_centers(const Simplex& s, const Tolerance& tol) {
    CenterReport report;
    report.centroid = centroid(s);
    report.circumscribed = circumsphere(s, tol);
    report.inscribed = insphere(s);
    report.fermat = fermat_torricelli(s, tol);
    report.monge = 2.0 * report.centroid - report.circumscribed.center;
    report.orthocenter = orthocenter(s, tol);
    report.complementary_one_centroid = complementary_one_centroid(s);
    report.one_center = one_center(s, tol);

    std::vector<std::pair<std::string, Vector>> named = {
        {"centroid", report.centroid},
        {"circumcenter", report.circumscribed.center},
        {"incenter", report.inscribed.center},
        {"fermat_torricelli", report.fermat.point},
        {"monge", report.monge},
        {"complementary_1_centroid", report.complementary_one_centroid},
    };
    if (report.orthocenter)
        named.emplace_back("orthocenter", *report.orthocenter);
    if (report.one_center)
        named.emplace_back("one_center", report.one_center->center);

    const double bound = tol.abs * (1.0 + report.circumscribed.radius);
    for (size_t i = 0; i < named.size(); ++i)
        for (size_t j = i + 1; j < named.size(); ++j)
            if ((named[i].second - named[j].second).norm() <= bound) {
                auto pair = std::minmax(named[i].first, named[j].first);
                report.coincidences.emplace_back(pair.first, pair.second);
            }
    std::sort(report.coincidences.begin(), report.coincidences.end());
    return report;
}

Simplex recentered_at_circumcenter(const Simplex& s, const Tolerance& tol) {
    return s.translated(-circumsphere(s, tol).center);
}

} // namespace simplex

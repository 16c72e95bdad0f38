#include "simplex/corpus.hpp"

#include "simplex/centers.hpp"
#include "simplex/constructions.hpp"

#include <cmath>

namespace simplex {

CorpusConstraint corpus_constraint_from_string(const std::string& name) {
    if (name == "none" || name.empty()) return CorpusConstraint::none;
    if (name == "unit-circumradius") return CorpusConstraint::unit_circumradius;
    if (name == "centered") return CorpusConstraint::centered;
    if (name == "acute-base") return CorpusConstraint::acute_base;
    throw std::invalid_argument("unknown corpus constraint '" + name + "'");
}

std::string to_string(CorpusConstraint c) {
    switch (c) {
        case CorpusConstraint::none: return "none";
        case CorpusConstraint::unit_circumradius: return "unit-circumradius";
        case CorpusConstraint::centered: return "centered";
        case CorpusConstraint::acute_base: return "acute-base";
    }
    return "none";
}

Simplex random_simplex(int dim, double range, Rng& rng) {
    if (dim < 1)
        throw std::invalid_argument("random_simplex: dim must be >= 1");
    if (range <= 0.0)
        throw std::invalid_argument("random_simplex: range must be positive");
    std::uniform_real_distribution<double> coord(-range, range);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix v(dim, dim + 1);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j <= dim; ++j)
                v(i, j) = coord(rng);
        Matrix diffs(dim, dim);
        for (int i = 0; i < dim; ++i)
            diffs.col(i) = v.col(i) - v.col(dim);
        Eigen::JacobiSVD<Matrix> svd(diffs);
        const auto& sv = svd.singularValues();
        if (sv.minCoeff() >= 1e-4 * sv.maxCoeff())
            return Simplex(std::move(v));
    }
    throw std::runtime_error("random_simplex: 1000 draws rejected for bad conditioning");
}

Simplex random_unit_circumradius_simplex(int dim, double range, Rng& rng) {
    const Simplex s = random_simplex(dim, range, rng);
    const Sphere circ = circumsphere(s);
    return s.translated(-circ.center).scaled(1.0 / circ.radius);
}

Simplex random_centered_simplex(int dim, double range, Rng& rng) {
    const Simplex s = random_simplex(dim, range, rng);
    return s.translated(-centroid(s));
}

std::array<double, 3> random_acute_triple(Rng& rng) {
    const double pi = std::acos(-1.0);
    std::uniform_real_distribution<double> angle(0.05, pi / 2.0 - 0.05);
    std::uniform_real_distribution<double> diameter(1.0, 3.0);
    for (;;) {
        const double alpha = angle(rng);
        const double beta = angle(rng);
        const double gamma = pi - alpha - beta;
        if (gamma < 0.05 || gamma > pi / 2.0 - 0.05) continue;
        const double d = diameter(rng);
        return {d * std::sin(alpha), d * std::sin(beta), d * std::sin(gamma)};
    }
}

Simplex random_equifacetal_tetrahedron(Rng& rng) {
    const auto [a, b, c] = random_acute_triple(rng);
    return equifacetal_tetrahedron(a, b, c);
}

Simplex spherical_centered_simplex(int dim, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Matrix v = random_simplex(dim, 1.0, rng).vertices();
        bool converged = false;
        for (int iter = 0; iter < 5000; ++iter) {
            const Vector mean = v.rowwise().mean();
            v.colwise() -= mean;
            for (int j = 0; j <= dim; ++j)
                v.col(j) /= v.col(j).norm();
            if (v.rowwise().mean().norm() <= 1e-14) {
                converged = true;
                break;
            }
        }
        if (!converged) continue;
        if (!affinely_independent(v)) continue;
        Matrix diffs(dim, dim);
        for (int i = 0; i < dim; ++i)
            diffs.col(i) = v.col(i) - v.col(dim);
        Eigen::JacobiSVD<Matrix> svd(diffs);
        const auto& sv = svd.singularValues();
        if (sv.minCoeff() < 1e-4 * sv.maxCoeff()) continue;
        return Simplex(std::move(v));
    }
    throw std::runtime_error("spherical_centered_simplex: alternating projection failed");
}

Simplex draw(const RandomCorpusSpec& spec, Rng& rng) {
    switch (spec.constraint) {
        case CorpusConstraint::none:
            return random_simplex(spec.dimension, spec.range, rng);
        case CorpusConstraint::unit_circumradius:
            return random_unit_circumradius_simplex(spec.dimension, spec.range, rng);
        case CorpusConstraint::centered:
            return random_centered_simplex(spec.dimension, spec.range, rng);
        case CorpusConstraint::acute_base:
            if (spec.dimension != 3)
                throw std::invalid_argument(
                    "corpus: the acute-base constraint requires dimension 3");
            return random_equifacetal_tetrahedron(rng);
    }
    throw std::logic_error("corpus: unhandled constraint");
}

Matrix random_rotation(int dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = gauss(rng);
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ();
    // Fix the sign convention so the distribution is Haar.
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i)
        if (r(i, i) < 0.0) q.col(i) = -q.col(i);
    return q;
}

Vector random_translation(int dim, double range, Rng& rng) {
    std::uniform_real_distribution<double> coord(-range, range);
    Vector t(dim);
    for (int i = 0; i < dim; ++i) t(i) = coord(rng);
    return t;
}

} // namespace simplex

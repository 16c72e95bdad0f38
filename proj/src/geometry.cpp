#include "simplex/geometry.hpp"

#include <cmath>
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

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool within_scaled(double a, double b, double tol, double scale) {
    return std::abs(a - b) <= tol * (1.0 + scale);
}

Simplex::Simplex(Matrix vertices, const Tolerance& tol) : vertices_(std::move(vertices)) {
    const Eigen::Index d = vertices_.rows();
    if (d < 1 || vertices_.cols() != d + 1)
        throw std::invalid_argument("Simplex: expected d x (d+1) vertex matrix, got " +
                                    std::to_string(vertices_.rows()) + " x " +
                                    std::to_string(vertices_.cols()));
    if (!vertices_.allFinite())
        throw std::invalid_argument("Simplex: vertex coordinates must be finite");
    if (!affinely_independent(vertices_, tol)) {
        Matrix diffs(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            diffs.col(i) = vertices_.col(i) - vertices_.col(d);
        Eigen::JacobiSVD<Matrix> svd(diffs);
        throw std::invalid_argument(
            "Simplex: vertices are affinely dependent (smallest singular value " +
            describe(svd.singularValues().minCoeff()) + ")");
    }
}

Simplex Simplex::from_vertex_list(const std::vector<Vector>& vertices, const Tolerance& tol) {
    if (vertices.empty())
        throw std::invalid_argument("Simplex: empty vertex list");
    const Eigen::Index d = vertices.front().size();
    Matrix m(d, static_cast<Eigen::Index>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].size() != d)
            throw std::invalid_argument("Simplex: vertices of mixed dimension");
        m.col(static_cast<Eigen::Index>(i)) = vertices[i];
    }
    return Simplex(std::move(m), tol);
}

Matrix Simplex::distance_matrix() const {
    const int n = vertex_count();
    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d(i, j) = d(j, i) = edge_length(i, j);
    return d;
}

double Simplex::max_edge_length() const {
    double m = 0.0;
    for (int i = 0; i < vertex_count(); ++i)
        for (int j = i + 1; j < vertex_count(); ++j)
            m = std::max(m, edge_length(i, j));
    return m;
}

Simplex Simplex::translated(const Vector& offset) const {
    Matrix v = vertices_;
    v.colwise() += offset;
    return Simplex(std::move(v));
}

Simplex Simplex::transformed(const Matrix& map, const Vector& offset) const {
    Matrix v = map * vertices_;
    v.colwise() += offset;
    return Simplex(std::move(v));
}

Simplex Simplex::scaled(double factor) const {
    if (factor <= 0.0)
        throw std::invalid_argument("Simplex::scaled: factor must be positive");
    return Simplex(factor * vertices_);
}

bool affinely_independent(const Matrix& points, const Tolerance& tol) {
    const Eigen::Index m = points.cols();
    if (m < 2) return m == 1;
    if (points.rows() < m - 1) return false;
    Matrix diffs(points.rows(), m - 1);
    for (Eigen::Index i = 0; i + 1 < m; ++i)
        diffs.col(i) = points.col(i) - points.col(m - 1);
    Eigen::JacobiSVD<Matrix> svd(diffs);
    const auto& sv = svd.singularValues();
    return sv.minCoeff() > tol.abs * std::max(1.0, sv.maxCoeff());
}

void validate_distance_matrix(const Matrix& d, const Tolerance& tol) {
    const Eigen::Index n = d.rows();
    if (n < 2 || d.cols() != n)
        throw std::invalid_argument("distance matrix: expected square matrix of order >= 2");
    if (!d.allFinite())
        throw std::invalid_argument("distance matrix: entries must be finite");
    const double scale = d.maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(d(i, i)) > tol.abs * (1.0 + scale))
            throw std::invalid_argument("distance matrix: nonzero diagonal entry at index " +
                                        std::to_string(i));
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (std::abs(d(i, j) - d(j, i)) > tol.abs * (1.0 + scale))
                throw std::invalid_argument("distance matrix: asymmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            "), difference " + describe(std::abs(d(i, j) - d(j, i))));
            if (d(i, j) <= 0.0)
                throw std::invalid_argument("distance matrix: nonpositive distance at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (d(i, k) > d(i, j) + d(j, k) + tol.abs * (1.0 + scale))
                    throw std::invalid_argument(
                        "distance matrix: triangle inequality violated on (" +
                        std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                        "), excess " + describe(d(i, k) - d(i, j) - d(j, k)));
            }
}

double cayley_menger_squared_volume(const Matrix& distances, const Tolerance& tol) {
    validate_distance_matrix(distances, tol);
    const Eigen::Index n = distances.rows(); // k+1 points
    const int k = static_cast<int>(n) - 1;
    Matrix b = Matrix::Zero(n + 1, n + 1);
    b.row(0).tail(n).setOnes();
    b.col(0).tail(n).setOnes();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            b(i + 1, j + 1) = distances(i, j) * distances(i, j);
    const double det = b.determinant();
    const double sign = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^(k+1)
    const double denom = std::pow(2.0, k) * factorial(k) * factorial(k);
    const double v2 = sign * det / denom;
    if (v2 < 0.0) {
        const double characteristic = std::pow(distances.maxCoeff(), 2 * k) /
                                      (factorial(k) * factorial(k));
        if (v2 < -std::max(tol.abs, tol.rel * characteristic))
            throw std::invalid_argument(
                "cayley_menger_squared_volume: matrix is not embeddable (V^2 = " +
                describe(v2) + ")");
        return 0.0;
    }
    return v2;
}

double volume(const Simplex& s) {
    const int d = s.dim();
    Matrix diffs(d, d);
    for (int i = 0; i < d; ++i)
        diffs.col(i) = s.vertex(i) - s.vertex(d);
    return std::abs(diffs.determinant()) / factorial(d);
}

Simplex facet(const Simplex& s, int j) {
    const int d = s.dim();
    if (d < 2)
        throw std::invalid_argument("facet: requires dim >= 2");
    if (j < 0 || j > d)
        throw std::invalid_argument("facet: vertex index " + std::to_string(j) +
                                    " out of range");
    Matrix rest(d, d);
    int c = 0;
    for (int i = 0; i <= d; ++i)
        if (i != j) rest.col(c++) = s.vertex(i);
    Matrix diffs(d, d - 1);
    for (int i = 1; i < d; ++i)
        diffs.col(i - 1) = rest.col(i) - rest.col(0);
    Eigen::HouseholderQR<Matrix> qr(diffs);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d - 1);
    Matrix coords(d - 1, d);
    for (int i = 0; i < d; ++i)
        coords.col(i) = q.transpose() * (rest.col(i) - rest.col(0));
    return Simplex(std::move(coords));
}

double facet_volume(const Simplex& s, int j) {
    if (s.dim() == 1) {
        if (j < 0 || j > 1)
            throw std::invalid_argument("facet_volume: vertex index out of range");
        return 1.0;
    }
    return volume(facet(s, j));
}

Matrix gram_matrix(const Simplex& s) {
    Matrix g = s.vertices().transpose() * s.vertices();
    return (g + g.transpose()) / 2.0;
}

Matrix distances_from_gram(const Matrix& gram, const Tolerance& tol) {
    const Eigen::Index n = gram.rows();
    if (n < 2 || gram.cols() != n)
        throw std::invalid_argument("distances_from_gram: expected square matrix of order >= 2");
    const double scale = gram.diagonal().cwiseAbs().maxCoeff();
    Matrix d = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double sq = gram(i, i) + gram(j, j) - 2.0 * gram(i, j);
            if (sq < -tol.abs * (1.0 + scale))
                throw std::invalid_argument(
                    "distances_from_gram: negative squared distance " + describe(sq) +
                    " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            d(i, j) = d(j, i) = std::sqrt(std::max(sq, 0.0));
        }
    return d;
}

Simplex simplex_from_gram(const Matrix& gram, const Tolerance& tol) {
    const Eigen::Index n = gram.rows();
    if (n < 2 || gram.cols() != n)
        throw std::invalid_argument("simplex_from_gram: expected square matrix of order >= 2");
    const double scale = gram.cwiseAbs().maxCoeff();
    if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > tol.abs * (1.0 + scale))
        throw std::invalid_argument("simplex_from_gram: matrix is not symmetric");
    Matrix g = (gram + gram.transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("simplex_from_gram: eigendecomposition failed");
    const Vector& lambda = es.eigenvalues(); // ascending
    const double cutoff = tol.abs * std::max(1.0, lambda(n - 1));
    if (lambda(0) < -cutoff) {
        std::ostringstream os;
        os << "simplex_from_gram: matrix is not positive semidefinite, eigenvalues:";
        for (Eigen::Index i = 0; i < n; ++i) os << " " << describe(lambda(i));
        throw std::invalid_argument(os.str());
    }
    int rank = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (lambda(i) > cutoff) ++rank;
    if (rank != n - 1) {
        std::ostringstream os;
        os << "simplex_from_gram: numerical rank " << rank << ", expected " << (n - 1)
           << ", eigenvalues:";
        for (Eigen::Index i = 0; i < n; ++i) os << " " << describe(lambda(i));
        throw std::invalid_argument(os.str());
    }
    // Vertices as rows of U * sqrt(Lambda), largest eigenvalue first for a
    // deterministic embedding.
    Matrix coords(n - 1, n);
    for (Eigen::Index r = 0; r < n - 1; ++r) {
        const Eigen::Index src = n - 1 - r;
        coords.row(r) = std::sqrt(lambda(src)) * es.eigenvectors().col(src).transpose();
    }
    return Simplex(std::move(coords), tol);
}

Vector barycentric_coordinates(const Simplex& s, const Vector& p) {
    const int d = s.dim();
    if (p.size() != d)
        throw std::invalid_argument("barycentric_coordinates: point has dimension " +
                                    std::to_string(p.size()) + ", expected " +
                                    std::to_string(d));
    Matrix a(d + 1, d + 1);
    a.topRows(d) = s.vertices();
    a.row(d).setOnes();
    Vector rhs(d + 1);
    rhs.head(d) = p;
    rhs(d) = 1.0;
    return a.partialPivLu().solve(rhs);
}

Vector point_from_barycentric(const Simplex& s, const Vector& weights) {
    if (weights.size() != s.vertex_count())
        throw std::invalid_argument("point_from_barycentric: expected " +
                                    std::to_string(s.vertex_count()) + " weights");
    if (std::abs(weights.sum() - 1.0) > 1e-12 * (1.0 + weights.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("point_from_barycentric: weights must sum to 1, got " +
                                    describe(weights.sum()));
    return s.vertices() * weights;
}

Simplex regular_simplex(int dim, double edge) {
    if (dim < 1)
        throw std::invalid_argument("regular_simplex: dim must be >= 1");
    if (edge <= 0.0)
        throw std::invalid_argument("regular_simplex: edge must be positive");
    // Standard basis vectors of R^(dim+1) are a regular simplex with edge
    // sqrt(2); express them in an orthonormal basis of the hyperplane
    // orthogonal to (1,...,1) after centering.
    const int n = dim + 1;
    Matrix ones(n, 1);
    ones.setOnes();
    Eigen::HouseholderQR<Matrix> qr(ones);
    Matrix q = qr.householderQ();          // first column is parallel to ones
    Matrix basis = q.rightCols(dim);       // orthonormal complement
    Matrix coords(dim, n);
    const double center = 1.0 / n;
    for (int i = 0; i < n; ++i) {
        Vector e = Vector::Zero(n);
        e(i) = 1.0;
        e.array() -= center;
        coords.col(i) = basis.transpose() * e;
    }
    coords *= edge / std::sqrt(2.0);
    return Simplex(std::move(coords));
}

} // namespace simplex

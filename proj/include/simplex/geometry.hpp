#ifndef SIMPLEX_GEOMETRY_HPP
#define SIMPLEX_GEOMETRY_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace simplex {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Absolute tolerance is used for residuals and coincidence tests,
/// relative tolerance for dimensionless spreads of compared quantities.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-8;
};

/// A nondegenerate d-simplex in E^d, d >= 1. Vertices are stored as the
/// columns of a d x (d+1) matrix. The constructor rejects inputs whose
/// difference vectors are not of full rank, so every instance represents
/// a simplex with positive volume.
class Simplex {
  public:
    explicit Simplex(Matrix vertices, const Tolerance& tol = {});

    static Simplex from_vertex_list(const std::vector<Vector>& vertices,
                                    const Tolerance& tol = {});

    int dim() const { return static_cast<int>(vertices_.rows()); }
    int vertex_count() const { return static_cast<int>(vertices_.cols()); }
    const Matrix& vertices() const { return vertices_; }
    Vector vertex(int i) const { return vertices_.col(i); }

    double edge_length(int i, int j) const {
        return (vertices_.col(i) - vertices_.col(j)).norm();
    }

    /// (d+1) x (d+1) matrix of pairwise vertex distances.
    Matrix distance_matrix() const;

    /// Longest edge, used to scale tolerances.
    double max_edge_length() const;

    Simplex translated(const Vector& offset) const;
    Simplex transformed(const Matrix& map, const Vector& offset) const;
    Simplex scaled(double factor) const;

  private:
    Matrix vertices_;
};

/// True when the columns of `points` (m points in R^n) span an affine
/// subspace of dimension m-1, tested through the singular values of the
/// difference matrix.
bool affinely_independent(const Matrix& points, const Tolerance& tol = {});

/// Validates symmetry, zero diagonal, positive off-diagonal entries and the
/// triangle inequality. Throws std::invalid_argument with the offending
/// entry otherwise.
void validate_distance_matrix(const Matrix& distances, const Tolerance& tol = {});

/// Squared k-volume of the simplex realizing a (k+1) x (k+1) distance
/// matrix, computed from the bordered determinant of squared distances.
/// A squared volume below -tol signals a non-embeddable matrix and throws;
/// small negative round-off is clamped to zero.
double cayley_menger_squared_volume(const Matrix& distances,
                                    const Tolerance& tol = {});

/// d-volume from the determinant of the difference matrix.
double volume(const Simplex& s);

/// The facet opposite vertex j as a (d-1)-simplex, re-expressed in an
/// orthonormal basis of its affine hull. Edge lengths are preserved.
Simplex facet(const Simplex& s, int j);

/// (d-1)-volume of the facet opposite vertex j. For d = 1 the facets are
/// points and their 0-volume is 1 by convention.
double facet_volume(const Simplex& s, int j);

/// (d+1) x (d+1) matrix of vertex inner products. Positive semidefinite of
/// rank d because the vertices span E^d.
Matrix gram_matrix(const Simplex& s);

/// Pairwise distances |A_i - A_j| = sqrt(G_ii + G_jj - 2 G_ij). Throws when
/// a squared distance is negative beyond tolerance.
Matrix distances_from_gram(const Matrix& gram, const Tolerance& tol = {});

/// Recovers vertex coordinates from an (d+1) x (d+1) Gram matrix through a
/// symmetric eigendecomposition (the matrix is singular, so a Cholesky
/// factorization would be unstable). Requires the matrix to be positive
/// semidefinite with numerical rank exactly d; throws with the offending
/// eigenvalues otherwise. The result reproduces the encoded distances; the
/// embedding is unique up to isometry.
Simplex simplex_from_gram(const Matrix& gram, const Tolerance& tol = {});

/// Barycentric coordinates of p with respect to s: the unique weights with
/// sum 1 and sum w_i A_i = p. Negative entries flag points outside the
/// simplex.
Vector barycentric_coordinates(const Simplex& s, const Vector& p);

/// Inverse of barycentric_coordinates for weights summing to 1.
Vector point_from_barycentric(const Simplex& s, const Vector& weights);

/// Regular d-simplex with the given edge length, centered so that its
/// circumcenter (= centroid) is the origin.
Simplex regular_simplex(int dim, double edge = 1.0);

/// max(1, scale)-weighted absolute comparison used throughout:
/// |a - b| <= tol * (1 + scale).
bool within_scaled(double a, double b, double tol, double scale);

double factorial(int n);

} // namespace simplex

#endif

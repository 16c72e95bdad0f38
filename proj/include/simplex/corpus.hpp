#ifndef SIMPLEX_CORPUS_HPP
#define SIMPLEX_CORPUS_HPP

#include "simplex/geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace simplex {

using Rng = std::mt19937_64;

enum class CorpusConstraint { none, unit_circumradius, centered, acute_base };

struct RandomCorpusSpec {
    int dimension = 3;
    int count = 1;
    double range = 1.0; ///< coordinates drawn uniformly from [-range, range]
    CorpusConstraint constraint = CorpusConstraint::none;
    std::uint64_t seed = 0;
};

CorpusConstraint corpus_constraint_from_string(const std::string& name);
std::string to_string(CorpusConstraint c);

/// Simplex with i.i.d. uniform coordinates, rejecting draws whose difference
/// matrix has smallest singular value below 1e-4 times the largest. Throws
/// after 1000 rejected draws.
Simplex random_simplex(int dim, double range, Rng& rng);

/// random_simplex normalized so the circumcenter is the origin and the
/// circumradius is 1.
Simplex random_unit_circumradius_simplex(int dim, double range, Rng& rng);

/// random_simplex translated so the centroid is the origin.
Simplex random_centered_simplex(int dim, double range, Rng& rng);

/// Sides of a strictly acute triangle: angles drawn uniformly inside the
/// acute region, sides by the law of sines with a random circumdiameter.
std::array<double, 3> random_acute_triple(Rng& rng);

/// Random equifacetal tetrahedron built on a random acute triple
/// (the "acute-base" corpus constraint; requires dim == 3).
Simplex random_equifacetal_tetrahedron(Rng& rng);

/// d+1 unit vectors summing to zero (alternating projection between the
/// centering and normalization constraints), giving a simplex whose
/// centroid and circumcenter are both the origin.
Simplex spherical_centered_simplex(int dim, Rng& rng);

/// Applies `spec.constraint` to draw one simplex.
Simplex draw(const RandomCorpusSpec& spec, Rng& rng);

/// Uniformly random rotation (Haar measure via QR of a Gaussian matrix)
/// and translation with coordinates in [-range, range].
Matrix random_rotation(int dim, Rng& rng);
Vector random_translation(int dim, double range, Rng& rng);

} // namespace simplex

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "simplex/corpus.hpp"
#include "simplex/geometry.hpp"

#include <cmath>
#include <stdexcept>

using namespace simplex;

namespace {

Simplex corner_tetrahedron() {
    Matrix v(3, 4);
    v << 0, 1, 0, 0,
         0, 0, 1, 0,
         0, 0, 0, 1;
    return Simplex(v);
}

Simplex right_triangle() {
    Matrix v(2, 3);
    v << 0, 1, 0,
         0, 0, 1;
    return Simplex(v);
}

} // namespace

TEST_CASE("constructor rejects degenerate input") {
    SUBCASE("collinear points") {
        Matrix v(2, 3);
        v << 0, 1, 2,
             0, 1, 2;
        CHECK_THROWS_AS(Simplex{v}, std::invalid_argument);
    }
    SUBCASE("wrong column count") {
        Matrix v = Matrix::Identity(3, 3);
        CHECK_THROWS_AS(Simplex{v}, std::invalid_argument);
    }
    SUBCASE("non-finite coordinate") {
        Matrix v(2, 3);
        v << 0, 1, 0,
             0, 0, std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(Simplex{v}, std::invalid_argument);
    }
    SUBCASE("repeated vertex") {
        Matrix v(2, 3);
        v << 0, 1, 1,
             0, 0, 0;
        CHECK_THROWS_AS(Simplex{v}, std::invalid_argument);
    }
}

TEST_CASE("affine independence test") {
    Matrix good(3, 4);
    good << 0, 1, 0, 0,
            0, 0, 1, 0,
            0, 0, 0, 1;
    CHECK(affinely_independent(good));
    Matrix bad(3, 3);
    bad << 0, 1, 2,
           0, 1, 2,
           0, 1, 2;
    CHECK_FALSE(affinely_independent(bad));
}

TEST_CASE("volumes of reference simplices") {
    const Simplex corner = corner_tetrahedron();
    CHECK(volume(corner) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(volume(right_triangle()) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(volume(regular_simplex(2)) == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
    CHECK(volume(regular_simplex(3)) == doctest::Approx(1.0 / (6.0 * std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("distance-matrix volume agrees with the coordinate determinant") {
    const Simplex corner = corner_tetrahedron();
    const double sq = cayley_menger_squared_volume(corner.distance_matrix());
    CHECK(std::sqrt(sq) == doctest::Approx(volume(corner)).epsilon(1e-12));

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(trial % 4);
        const Simplex s = random_simplex(d, 1.5, rng);
        const double direct = volume(s);
        const double bordered = std::sqrt(cayley_menger_squared_volume(s.distance_matrix()));
        CHECK(std::abs(direct - bordered) <= 1e-10 * (1.0 + direct));
    }
}

TEST_CASE("distance matrix validation") {
    Matrix ok(3, 3);
    ok << 0, 1, 1,
          1, 0, 1,
          1, 1, 0;
    CHECK_NOTHROW(validate_distance_matrix(ok));

    SUBCASE("asymmetric") {
        Matrix m = ok;
        m(0, 1) = 1.5;
        CHECK_THROWS_AS(validate_distance_matrix(m), std::invalid_argument);
    }
    SUBCASE("nonzero diagonal") {
        Matrix m = ok;
        m(1, 1) = 0.2;
        CHECK_THROWS_AS(validate_distance_matrix(m), std::invalid_argument);
    }
    SUBCASE("nonpositive off-diagonal") {
        Matrix m = ok;
        m(0, 2) = m(2, 0) = 0.0;
        CHECK_THROWS_AS(validate_distance_matrix(m), std::invalid_argument);
    }
    SUBCASE("triangle inequality violated") {
        Matrix m(3, 3);
        m << 0, 1, 3,
             1, 0, 1,
             3, 1, 0;
        CHECK_THROWS_AS(validate_distance_matrix(m), std::invalid_argument);
    }
}

TEST_CASE("facets preserve edge lengths") {
    const Simplex corner = corner_tetrahedron();
    const Simplex opposite_corner = facet(corner, 0);
    CHECK(opposite_corner.dim() == 2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(opposite_corner.edge_length(i, j) ==
                  doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

    const Simplex reg = regular_simplex(3);
    for (int j = 0; j < 4; ++j) {
        const Simplex f = facet(reg, j);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                CHECK(f.edge_length(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("facet volumes of the corner tetrahedron") {
    const Simplex corner = corner_tetrahedron();
    CHECK(facet_volume(corner, 0) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    for (int j = 1; j < 4; ++j)
        CHECK(facet_volume(corner, j) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gram matrix round trip") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + static_cast<int>(trial % 4);
        const Simplex s = random_centered_simplex(d, 2.0, rng);
        const Simplex back = simplex_from_gram(gram_matrix(s));
        const Matrix da = s.distance_matrix();
        const Matrix db = back.distance_matrix();
        CHECK((da - db).cwiseAbs().maxCoeff() <= 1e-9 * (1.0 + da.maxCoeff()));
    }
}

TEST_CASE("gram matrix of the centered regular simplex") {
    const Simplex s = regular_simplex(4, std::sqrt(2.5));
    const Matrix g = gram_matrix(s);
    for (int i = 0; i < 5; ++i) {
        CHECK(g(i, i) == doctest::Approx(1.0).epsilon(1e-12));
        for (int j = 0; j < 5; ++j)
            if (j != i)
                CHECK(g(i, j) == doctest::Approx(-0.25).epsilon(1e-12));
    }
}

TEST_CASE("distances from a gram matrix") {
    const Matrix d = distances_from_gram(Matrix::Identity(2, 2));
    CHECK(d(0, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(d(0, 0) == 0.0);
}

TEST_CASE("gram factorization rejects invalid matrices") {
    SUBCASE("rank too low") {
        CHECK_THROWS_AS(simplex_from_gram(Matrix::Ones(3, 3)), std::invalid_argument);
    }
    SUBCASE("not positive semidefinite") {
        CHECK_THROWS_AS(simplex_from_gram(-Matrix::Identity(3, 3)), std::invalid_argument);
    }
    SUBCASE("asymmetric") {
        Matrix m = Matrix::Identity(3, 3);
        m(0, 1) = 0.5;
        CHECK_THROWS_AS(simplex_from_gram(m), std::invalid_argument);
    }
    SUBCASE("full rank") {
        CHECK_THROWS_AS(simplex_from_gram(Matrix::Identity(3, 3)), std::invalid_argument);
    }
}

TEST_CASE("barycentric coordinates") {
    const Simplex corner = corner_tetrahedron();

    SUBCASE("centroid weights are uniform") {
        Vector g = Vector::Zero(3);
        for (int i = 0; i < 4; ++i) g += corner.vertex(i);
        g /= 4.0;
        const Vector w = barycentric_coordinates(corner, g);
        for (int i = 0; i < 4; ++i)
            CHECK(w(i) == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("vertices map to unit weight vectors") {
        for (int i = 0; i < 4; ++i) {
            const Vector w = barycentric_coordinates(corner, corner.vertex(i));
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(w(j) - (i == j ? 1.0 : 0.0)) <= 1e-12);
        }
    }
    SUBCASE("round trip through point_from_barycentric") {
        Rng rng(5);
        const Simplex s = random_simplex(4, 1.0, rng);
        Vector p(4);
        p << 0.3, -0.1, 0.2, 0.05;
        const Vector w = barycentric_coordinates(s, p);
        CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((point_from_barycentric(s, w) - p).norm() <= 1e-10);
    }
    SUBCASE("weights must sum to one") {
        Vector w(4);
        w << 0.5, 0.5, 0.5, 0.5;
        CHECK_THROWS_AS(point_from_barycentric(corner, w), std::invalid_argument);
    }
}

TEST_CASE("regular simplex metrics") {
    for (int d = 2; d <= 6; ++d) {
        const Simplex s = regular_simplex(d);
        for (int i = 0; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                CHECK(s.edge_length(i, j) == doctest::Approx(1.0).epsilon(1e-12));
        Vector g = Vector::Zero(d);
        for (int i = 0; i <= d; ++i) g += s.vertex(i);
        CHECK(g.norm() <= 1e-12);
        const double circumradius = s.vertex(0).norm();
        CHECK(circumradius == doctest::Approx(std::sqrt(d / (2.0 * (d + 1)))).epsilon(1e-12));
    }
}

TEST_CASE("rigid motions preserve the metric data") {
    Rng rng(31);
    const Simplex s = random_simplex(3, 1.0, rng);
    const Matrix q = random_rotation(3, rng);
    const Vector t = random_translation(3, 2.0, rng);
    const Simplex moved = s.transformed(q, t);
    CHECK((moved.distance_matrix() - s.distance_matrix()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(volume(moved) == doctest::Approx(volume(s)).epsilon(1e-12));

    const Simplex shifted = s.translated(t);
    CHECK((shifted.vertex(0) - s.vertex(0) - t).norm() <= 1e-14);

    const Simplex grown = s.scaled(2.0);
    CHECK(volume(grown) == doctest::Approx(8.0 * volume(s)).epsilon(1e-12));
}

TEST_CASE("scalar helpers") {
    CHECK(within_scaled(1.0, 1.0 + 5e-10, 1e-9, 0.0));
    CHECK_FALSE(within_scaled(1.0, 1.1, 1e-9, 1.0));
    CHECK(within_scaled(100.0, 100.0 + 5e-8, 1e-9, 100.0));
    CHECK(factorial(0) == 1.0);
    CHECK(factorial(5) == 120.0);
}

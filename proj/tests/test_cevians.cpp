#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "simplex/cevians.hpp"
#include "simplex/constructions.hpp"
#include "simplex/corpus.hpp"
#include "simplex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace simplex;

TEST_CASE("dependence coefficients match barycentric coordinates") {
    Rng rng(101);
    const Simplex s = random_simplex(3, 1.0, rng);
    Vector p(3);
    p << 0.1, -0.2, 0.3;
    const Vector dep = dependence_coefficients(s, p);
    const Vector bar = barycentric_coordinates(s, p);
    CHECK((dep - bar).norm() <= 1e-11);
    CHECK(dep.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dependence coefficients reject undefined configurations") {
    Matrix v(3, 4);
    v << 0, 1, 0, 0,
         0, 0, 1, 0,
         0, 0, 0, 1;
    const Simplex corner(v);

    SUBCASE("p equal to a vertex") {
        CHECK_THROWS_AS(dependence_coefficients(corner, corner.vertex(2)),
                        std::invalid_argument);
    }
    SUBCASE("complementary coefficient sum vanishes") {
        Vector p(3);
        p << 1, -1, 0;
        CHECK_THROWS_WITH_AS(dependence_coefficients(corner, p),
                             doctest::Contains("vertex 0"), std::invalid_argument);
    }
}

TEST_CASE("medians of the equilateral triangle") {
    const Simplex s = regular_simplex(2);
    const Vector origin = Vector::Zero(2);
    const CevianReport report = cevian_feet(s, origin);
    REQUIRE(report.feet.size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(report.coefficients(j) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(report.lengths[j] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    }
    CHECK(report.length_spread <= 1e-12);
    CHECK(report.equal);
}

TEST_CASE("cevian feet land on the opposite facet hull") {
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const int d = 2 + trial % 3;
        const Simplex s = random_simplex(d, 1.0, rng);
        Vector p = Vector::Zero(d);
        for (int i = 0; i <= d; ++i) p += s.vertex(i);
        p /= (d + 1.0);
        p(0) += 0.05;
        const CevianReport report = cevian_feet(s, p);
        for (int j = 0; j <= d; ++j) {
            const Vector& foot = report.feet[j];
            const Vector w = barycentric_coordinates(s, foot);
            CHECK(std::abs(w(j)) <= 1e-9);

            const Vector leg = p - s.vertex(j);
            const Vector to_foot = foot - s.vertex(j);
            const double along = to_foot.dot(leg) / leg.squaredNorm();
            CHECK((to_foot - along * leg).norm() <= 1e-9);

            CHECK(report.lengths[j] ==
                  doctest::Approx((s.vertex(j) - foot).norm()).epsilon(1e-10));
        }
    }
}

TEST_CASE("equal cevian structure on the unit sphere") {
    SUBCASE("centered regular simplex has the trivial structure") {
        const Simplex s = regular_simplex(3, std::sqrt(8.0 / 3.0));
        const auto structure = equal_cevian_structure(s);
        REQUIRE(structure.has_value());
        CHECK(structure->r == 0);
        CHECK(structure->group.empty());
        CHECK(structure->relation_residual <= 1e-10);
    }
    SUBCASE("exterior circumcenter family has a two-vertex group") {
        const Simplex s = exterior_circumcenter_equal_cevians(4, 2);
        const auto structure = equal_cevian_structure(s);
        REQUIRE(structure.has_value());
        CHECK(structure->r == 2);
        REQUIRE(structure->group.size() == 2);
        CHECK(structure->group[0] == 0);
        CHECK(structure->group[1] == 1);
        CHECK(structure->relation_residual <= 1e-8);

        const CevianReport report = cevian_feet(s, Vector::Zero(4));
        for (double len : report.lengths)
            CHECK(len == doctest::Approx(0.25).epsilon(1e-9));
        REQUIRE(report.structure_r.has_value());
        CHECK(*report.structure_r == 2);
    }
    SUBCASE("generic inscribed simplex has unequal cevians") {
        Rng rng(71);
        const Simplex s = random_unit_circumradius_simplex(3, 1.0, rng);
        CHECK_FALSE(equal_cevian_structure(s).has_value());
    }
    SUBCASE("vertices must lie on the unit sphere") {
        Rng rng(73);
        const Simplex s = random_simplex(3, 1.0, rng);
        CHECK_THROWS_AS(equal_cevian_structure(s), std::invalid_argument);
    }
}

TEST_CASE("four equivalent center characterizations") {
    SUBCASE("generic simplex satisfies none of them") {
        Rng rng(11);
        const Simplex s = random_simplex(4, 1.0, rng);
        const CevianEquivalence eq = cevian_center_equivalence(s);
        CHECK_FALSE(eq.centroid_equals_circumcenter);
        CHECK_FALSE(eq.equal_through_centroid);
        CHECK_FALSE(eq.equal_through_fermat);
        CHECK_FALSE(eq.circumcenter_inside_and_equal);
        CHECK(eq.consistent);
    }
    SUBCASE("coincident centroid and circumcenter satisfies all of them") {
        Rng rng(13);
        const Simplex s = spherical_centered_simplex(4, rng);
        const CevianEquivalence eq = cevian_center_equivalence(s);
        CHECK(eq.centroid_equals_circumcenter);
        CHECK(eq.equal_through_centroid);
        CHECK(eq.equal_through_fermat);
        CHECK(eq.circumcenter_inside_and_equal);
        CHECK(eq.fermat_floating);
        CHECK(eq.membership_decisive);
        CHECK(eq.consistent);
    }
}

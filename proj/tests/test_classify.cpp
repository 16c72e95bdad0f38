#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "simplex/classify.hpp"
#include "simplex/constructions.hpp"
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

} // namespace

TEST_CASE("relative spread") {
    CHECK(relative_spread({}) == 0.0);
    CHECK(relative_spread({2.0}) == 0.0);
    CHECK(relative_spread({1.0, 1.0, 1.0}) == 0.0);
    CHECK(relative_spread({1.0, 2.0, 3.0}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("regular tetrahedron satisfies every predicate") {
    const Simplex s = regular_simplex(3);
    CHECK(is_regular(s));
    CHECK(is_equifacetal(s));
    CHECK(is_equiareal(s));
    CHECK(is_equiradial(s));
    CHECK(has_well_distributed_edges(s));
    CHECK(facet_inradii_equal(s));
    CHECK(is_orthocentric(s));
    const auto apex = isosceles_apex(s);
    REQUIRE(apex.has_value());
    CHECK(*apex == 0);
}

TEST_CASE("corner tetrahedron classification") {
    const Simplex s = corner_tetrahedron();
    CHECK_FALSE(is_regular(s));
    CHECK_FALSE(is_equifacetal(s));
    CHECK_FALSE(is_equiareal(s));
    CHECK_FALSE(is_equiradial(s));
    CHECK_FALSE(has_well_distributed_edges(s));
    CHECK(is_orthocentric(s));
    const auto apex = isosceles_apex(s);
    REQUIRE(apex.has_value());
    CHECK(*apex == 0);

    const ClassificationReport report = classify(s);
    CHECK(report.dimension == 3);
    CHECK(report.orthocentric);
    CHECK_FALSE(report.degenerate);
    REQUIRE(report.opposite_edge_pairs.size() == 3);
    for (const auto& pair : report.opposite_edge_pairs) {
        const double lo = std::min(pair.first, pair.second);
        const double hi = std::max(pair.first, pair.second);
        CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(hi == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
    REQUIRE(report.facet_edge_square_sums.size() == 4);
    CHECK(report.facet_edge_square_sums[0] == doctest::Approx(6.0).epsilon(1e-12));
    for (int j = 1; j < 4; ++j)
        CHECK(report.facet_edge_square_sums[j] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("right triangle classification") {
    Matrix v(2, 3);
    v << 0, 1, 0,
         0, 0, 1;
    const Simplex s(v);
    CHECK_FALSE(is_regular(s));
    CHECK(is_orthocentric(s));
    const auto apex = isosceles_apex(s);
    REQUIRE(apex.has_value());
    CHECK(*apex == 0);
}

TEST_CASE("congruent facets without regularity") {
    const Simplex s = equifacetal_tetrahedron(1.0, 1.1, 1.2);
    CHECK(is_equifacetal(s));
    CHECK(is_equiareal(s));
    CHECK(is_equiradial(s));
    CHECK(has_well_distributed_edges(s));
    CHECK(facet_inradii_equal(s));
    CHECK_FALSE(is_regular(s));
    CHECK_FALSE(isosceles_apex(s).has_value());

    const ClassificationReport report = classify(s);
    CHECK(report.equifacetal);
    CHECK(report.equifacetal_mismatch <= 1e-10);
    REQUIRE(report.facet_perimeters.size() == 4);
    for (double p : report.facet_perimeters)
        CHECK(p == doctest::Approx(3.3).epsilon(1e-12));
}

TEST_CASE("equiareal is weaker than equifacetal") {
    const Simplex s = equiareal_equiradial_not_equifacetal();
    CHECK(is_equiareal(s));
    CHECK(is_equiradial(s));
    CHECK_FALSE(is_equifacetal(s));
}

TEST_CASE("congruence search dimension limit") {
    const Simplex s = regular_simplex(8);
    CHECK_THROWS_AS(is_equifacetal(s), std::invalid_argument);
    const ClassificationReport report = classify(s);
    CHECK(report.regular);
    CHECK_FALSE(report.equifacetal);
    CHECK(report.equiareal);
}

TEST_CASE("random tetrahedra are generically unstructured") {
    Rng rng(19);
    const Simplex s = random_simplex(3, 1.0, rng);
    CHECK_FALSE(is_regular(s));
    CHECK_FALSE(is_equifacetal(s));
    CHECK_FALSE(is_equiareal(s));
    CHECK_FALSE(is_orthocentric(s));
    CHECK_FALSE(isosceles_apex(s).has_value());
}

TEST_CASE("classification witnesses are populated") {
    const ClassificationReport report = classify(regular_simplex(3));
    CHECK(report.edge_lengths.size() == 6);
    CHECK(report.facet_volumes.size() == 4);
    CHECK(report.facet_circumradii.size() == 4);
    CHECK(report.facet_inradii.size() == 4);
    CHECK(report.edge_spread <= 1e-12);
    CHECK(report.facet_volume_spread <= 1e-12);
    CHECK(report.facet_circumradius_spread <= 1e-12);
    for (double r : report.facet_circumradii)
        CHECK(r == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

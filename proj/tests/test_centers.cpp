#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "simplex/centers.hpp"
#include "simplex/constructions.hpp"
#include "simplex/corpus.hpp"
#include "simplex/geometry.hpp"

#include <algorithm>
#include <cmath>

using namespace simplex;

namespace {

Simplex right_triangle() {
    Matrix v(2, 3);
    v << 0, 1, 0,
         0, 0, 1;
    return Simplex(v);
}

Simplex corner_tetrahedron() {
    Matrix v(3, 4);
    v << 0, 1, 0, 0,
         0, 0, 1, 0,
         0, 0, 0, 1;
    return Simplex(v);
}

} // namespace

TEST_CASE("right triangle centers") {
    const Simplex s = right_triangle();

    const Vector g = centroid(s);
    CHECK((g - Vector::Constant(2, 1.0 / 3.0)).norm() <= 1e-14);

    const Sphere c = circumsphere(s);
    CHECK((c.center - Vector::Constant(2, 0.5)).norm() <= 1e-12);
    CHECK(c.radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));

    const Sphere in = insphere(s);
    const double r = (2.0 - std::sqrt(2.0)) / 2.0;
    CHECK((in.center - Vector::Constant(2, r)).norm() <= 1e-12);
    CHECK(in.radius == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("equilateral triangle centers coincide") {
    const Simplex s = regular_simplex(2);
    const Vector g = centroid(s);
    CHECK(g.norm() <= 1e-12);

    const Sphere in = insphere(s);
    CHECK((in.center - g).norm() <= 1e-12);
    CHECK(in.radius == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-12));

    const FermatPoint f = fermat_torricelli(s);
    CHECK(f.mode == FermatMode::floating);
    CHECK((f.point - g).norm() <= 1e-9);

    const auto edge_sphere = one_center(s);
    REQUIRE(edge_sphere.has_value());
    CHECK((edge_sphere->center - g).norm() <= 1e-9);
    CHECK(edge_sphere->radius == doctest::Approx(in.radius).epsilon(1e-9));
}

TEST_CASE("regular tetrahedron radii") {
    const Simplex s = regular_simplex(3);
    const Sphere c = circumsphere(s);
    CHECK(c.radius == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-12));
    const Sphere in = insphere(s);
    CHECK(in.radius == doctest::Approx(c.radius / 3.0).epsilon(1e-12));
    const auto edge_sphere = one_center(s);
    REQUIRE(edge_sphere.has_value());
    CHECK(edge_sphere->radius == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-10));
    CHECK(edge_sphere->center.norm() <= 1e-9);
}

TEST_CASE("corner tetrahedron centers") {
    const Simplex s = corner_tetrahedron();

    const Sphere c = circumsphere(s);
    CHECK((c.center - Vector::Constant(3, 0.5)).norm() <= 1e-12);
    CHECK(c.radius == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-13));

    SUBCASE("orthocenter sits at the right-angle corner") {
        const auto o = orthocenter(s);
        REQUIRE(o.has_value());
        CHECK(o->norm() <= 1e-9);
        const Vector m = monge_point(s);
        CHECK((m - *o).norm() <= 1e-9);
    }
    SUBCASE("edge-tangent sphere") {
        const auto edge_sphere = one_center(s);
        REQUIRE(edge_sphere.has_value());
        CHECK(edge_sphere->radius == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-9));
        const double t = 1.0 - std::sqrt(0.5);
        CHECK((edge_sphere->center - t * Vector::Ones(3)).norm() <= 1e-9);
    }
}

TEST_CASE("reflection point is 2G - C") {
    Rng rng(17);
    for (int d = 2; d <= 5; ++d) {
        const Simplex s = random_simplex(d, 1.0, rng);
        const Vector m = monge_point(s);
        const Vector expected = 2.0 * centroid(s) - circumsphere(s).center;
        CHECK((m - expected).norm() <= 1e-10);
    }
}

TEST_CASE("triangle reflection point differs from the orthocenter") {
    const Simplex s = right_triangle();
    const Vector m = monge_point(s);
    CHECK((m - Vector::Constant(2, 1.0 / 6.0)).norm() <= 1e-12);
    const auto o = orthocenter(s);
    REQUIRE(o.has_value());
    CHECK(o->norm() <= 1e-9);
    CHECK((m - *o).norm() > 0.1);
}

TEST_CASE("tetrahedron reflection point lies on all edge midplanes") {
    Rng rng(7);
    const Simplex s = random_simplex(3, 1.0, rng);
    const Vector m = monge_point(s);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Vector opposite_mid = Vector::Zero(3);
            for (int k = 0; k < 4; ++k)
                if (k != i && k != j) opposite_mid += s.vertex(k);
            opposite_mid /= 2.0;
            const double offset = (m - opposite_mid).dot(s.vertex(i) - s.vertex(j));
            CHECK(std::abs(offset) <= 1e-9);
        }
}

TEST_CASE("generic tetrahedron has no orthocenter") {
    Rng rng(41);
    const Simplex s = random_simplex(3, 1.0, rng);
    CHECK_FALSE(orthocenter(s).has_value());
}

TEST_CASE("total vertex distance minimizer") {
    SUBCASE("absorbed at a wide-angle vertex") {
        Matrix v(2, 3);
        v << 0, 1, 2,
             0, 0.05, 0;
        const FermatPoint f = fermat_torricelli(Simplex(v));
        CHECK(f.mode == FermatMode::absorbed);
        CHECK(f.absorbed_vertex == 1);
        CHECK((f.point - Simplex(v).vertex(1)).norm() == 0.0);
    }
    SUBCASE("floating for regular simplices") {
        for (int d = 2; d <= 5; ++d) {
            const FermatPoint f = fermat_torricelli(regular_simplex(d));
            CHECK(f.mode == FermatMode::floating);
            CHECK(f.point.norm() <= 1e-8);
            CHECK(f.residual <= 1e-9);
        }
    }
    SUBCASE("first-order residual meets the tolerance on random input") {
        Rng rng(3);
        for (int trial = 0; trial < 25; ++trial) {
            const Simplex s = random_simplex(3, 1.0, rng);
            const FermatPoint f = fermat_torricelli(s);
            if (f.mode == FermatMode::floating) CHECK(f.residual <= 1e-9);
        }
    }
}

TEST_CASE("facet-perimeter weighted vertex mean") {
    const Simplex reg = regular_simplex(3);
    CHECK(complementary_one_centroid(reg).norm() <= 1e-12);

    Rng rng(13);
    const Simplex s = random_simplex(3, 1.0, rng);
    std::vector<double> weights(4);
    for (int j = 0; j < 4; ++j) {
        const Simplex f = facet(s, j);
        double perimeter = 0.0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) perimeter += f.edge_length(a, b);
        weights[j] = perimeter;
    }
    Vector expected = Vector::Zero(3);
    double total = 0.0;
    for (int j = 0; j < 4; ++j) {
        expected += weights[j] * s.vertex(j);
        total += weights[j];
    }
    expected /= total;
    CHECK((complementary_one_centroid(s) - expected).norm() <= 1e-10);
}

TEST_CASE("edge-tangent sphere existence is restrictive") {
    CHECK_FALSE(one_center(equifacetal_tetrahedron(1.0, 1.1, 1.2)).has_value());

    Rng rng(29);
    const Simplex triangle = random_simplex(2, 1.0, rng);
    const auto incircle = one_center(triangle);
    REQUIRE(incircle.has_value());
    const Sphere in = insphere(triangle);
    CHECK((incircle->center - in.center).norm() <= 1e-8);
    CHECK(incircle->radius == doctest::Approx(in.radius).epsilon(1e-8));
}

TEST_CASE("center report of the regular 4-simplex") {
    const Simplex s = regular_simplex(4);
    const CenterReport report = all_centers(s);
    CHECK(report.centroid.norm() <= 1e-12);
    CHECK(report.circumscribed.center.norm() <= 1e-10);
    CHECK(report.inscribed.center.norm() <= 1e-10);
    CHECK(report.monge.norm() <= 1e-10);
    REQUIRE(report.orthocenter.has_value());
    REQUIRE(report.one_center.has_value());
    CHECK(report.coincidences.size() == 28);
    for (const auto& pair : report.coincidences) CHECK(pair.first < pair.second);
}

TEST_CASE("coincidence detection is scale aware") {
    const Simplex s = regular_simplex(3);
    CHECK(centers_coincide(s, centroid(s), circumsphere(s).center));
    Vector off = centroid(s);
    off(0) += 1e-3;
    CHECK_FALSE(centers_coincide(s, centroid(s), off));
}

TEST_CASE("recentering moves the circumcenter to the origin") {
    Rng rng(37);
    const Simplex s = random_simplex(4, 1.0, rng);
    const Simplex centered = recentered_at_circumcenter(s);
    CHECK(circumsphere(centered).center.norm() <= 1e-9);
    CHECK((centered.distance_matrix() - s.distance_matrix()).cwiseAbs().maxCoeff() <= 1e-12);
}

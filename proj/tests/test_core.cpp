#include <random>

#include "catch_amalgamated.hpp"
#include "sphaerica/sphaerica.hpp"
#include "support/generators.hpp"

using namespace sphaerica;
using Catch::Approx;

TEST_CASE("Angle rejects non-finite values and converts degrees") {
    CHECK_THROWS_AS(Angle(std::numeric_limits<double>::quiet_NaN()), InvalidInput);
    CHECK_THROWS_AS(Angle(std::numeric_limits<double>::infinity()), InvalidInput);
    CHECK(Angle::from_degrees(180.0).radians() == Approx(kPi));
    CHECK(Angle(kPi / 3).degrees() == Approx(60.0));
    CHECK(Angle(0.5).is_triangle_element());
    CHECK_FALSE(Angle(0.0).is_triangle_element());
    CHECK_FALSE(Angle(kPi).is_triangle_element());
}

TEST_CASE("SpherePoint enforces unit length") {
    CHECK_THROWS_AS(SpherePoint(1.0, 1.0, 0.0), InvalidInput);
    CHECK_THROWS_AS(SpherePoint::normalized(0.0, 0.0, 0.0), InvalidInput);
    SpherePoint p = SpherePoint::normalized(3.0, 4.0, 0.0);
    CHECK(p.x() == Approx(0.6));
    CHECK(p.y() == Approx(0.8));
}

TEST_CASE("Tolerances must be positive") {
    Tolerances t;
    CHECK_NOTHROW(t.validate());
    t.abs_eps = 0.0;
    CHECK_THROWS_AS(t.validate(), InvalidInput);
}

TEST_CASE("angular_distance basic values") {
    SpherePoint x(1, 0, 0), y(0, 1, 0);
    CHECK(angular_distance(x, x).radians() == 0.0);
    CHECK(angular_distance(x, x.antipode()).radians() == Approx(kPi));
    CHECK(angular_distance(x, y).radians() == Approx(kPi / 2));
}

TEST_CASE("angular_distance is symmetric and satisfies the triangle inequality") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        SpherePoint p = SpherePoint::normalized(testgen::random_unit_vector(rng));
        SpherePoint q = SpherePoint::normalized(testgen::random_unit_vector(rng));
        SpherePoint r = SpherePoint::normalized(testgen::random_unit_vector(rng));
        double pq = angular_distance(p, q).radians();
        double qp = angular_distance(q, p).radians();
        double qr = angular_distance(q, r).radians();
        double pr = angular_distance(p, r).radians();
        CHECK(std::fabs(pq - qp) <= 1e-12);
        CHECK(pr <= pq + qr + 1e-12);
    }
}

TEST_CASE("great_circle_through examples and orientation") {
    GreatCircle eq = great_circle_through(SpherePoint(1, 0, 0), SpherePoint(0, 1, 0));
    CHECK(eq.pole.z() == Approx(1.0));

    CHECK_THROWS_AS(great_circle_through(SpherePoint(1, 0, 0), SpherePoint(1, 0, 0)),
                    DegenerateInput);
    CHECK_THROWS_AS(
        great_circle_through(SpherePoint(1, 0, 0), SpherePoint(-1, 0, 0)),
        DegenerateInput);

    // pole = p x q, order-sensitive
    GreatCircle m = great_circle_through(SpherePoint(0, 0, 1), SpherePoint(0, 1, 0));
    CHECK(m.pole.x() == Approx(-1.0));
}

TEST_CASE("great_circle_through pole is orthogonal to both points") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        SpherePoint p = SpherePoint::normalized(testgen::random_unit_vector(rng));
        SpherePoint q = SpherePoint::normalized(testgen::random_unit_vector(rng));
        if (norm(cross(p.vec(), q.vec())) < 1e-3) continue;
        GreatCircle gc = great_circle_through(p, q);
        CHECK(std::fabs(dot(gc.pole, p)) <= 1e-12);
        CHECK(std::fabs(dot(gc.pole, q)) <= 1e-12);
    }
}

TEST_CASE("small_circle_contains examples") {
    SmallCircle equator{SpherePoint(0, 0, 1), Angle(kPi / 2)};
    CHECK(small_circle_contains(equator, SpherePoint(1, 0, 0), 1e-12));
    CHECK_FALSE(small_circle_contains(equator, SpherePoint(0, 0, 1), 1e-12));

    SmallCircle c{SpherePoint(0, 0, 1), Angle(kPi / 3)};
    CHECK(small_circle_contains(
        c, SpherePoint(std::sin(kPi / 3), 0.0, std::cos(kPi / 3)), 1e-12));
    CHECK_THROWS_AS(small_circle_contains(c, SpherePoint(1, 0, 0), 0.0), InvalidInput);
}

TEST_CASE("radius pi/2 small circle agrees with the pole's great circle") {
    std::mt19937 rng(13);
    SpherePoint pole = SpherePoint::normalized(0.3, -0.5, 0.9);
    SmallCircle sc{pole, Angle(kPi / 2)};
    GreatCircle gc{pole};
    for (int i = 0; i < 1000; ++i) {
        SpherePoint p = SpherePoint::normalized(testgen::random_unit_vector(rng));
        CHECK(small_circle_contains(sc, p, 1e-9) == great_circle_contains(gc, p, 1e-9));
    }
}

TEST_CASE("SmallCircle rejects radii outside (0, pi)") {
    CHECK_THROWS_AS((SmallCircle{SpherePoint(0, 0, 1), Angle(0.0)}), InvalidInput);
    CHECK_THROWS_AS((SmallCircle{SpherePoint(0, 0, 1), Angle(kPi)}), InvalidInput);
}

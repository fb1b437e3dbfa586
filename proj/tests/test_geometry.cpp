#include <doctest.h>

#include <random>

#include "cak/error.hpp"
#include "cak/geometry.hpp"
#include "support.hpp"

using namespace cak;
using namespace testing;

namespace {

Polygon square(long x0, long y0, long s = 1) {
    return validate_polygon({pt(x0, y0), pt(x0 + s, y0), pt(x0 + s, y0 + s), pt(x0, y0 + s)}, true);
}

}  // namespace

TEST_CASE("validate_polygon") {
    CHECK(validate_polygon({pt(0, 0)}).size() == 1);
    const Polygon sq = validate_polygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    CHECK(sq.vertices() == std::vector<Point2>{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    const Polygon tri = validate_polygon({pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1)});
    CHECK(tri.vertices() == std::vector<Point2>{pt(0, 0), pt(2, 0), pt(1, 1)});
    CHECK(validate_polygon({pt(0, 0), pt(1, 1), pt(2, 2)}).size() == 2);
    CHECK(validate_polygon({pt(3, 3), pt(3, 3)}).size() == 1);
    CHECK_THROWS_AS(validate_polygon({}), Error);
    CHECK_THROWS_AS(validate_polygon({pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1)}, true), Error);
    CHECK_THROWS_AS(validate_polygon({pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)}, true), Error);  // clockwise
    CHECK_NOTHROW(validate_polygon({pt(1, 1), pt(0, 1), pt(0, 0), pt(1, 0)}, true));           // rotated start
}

TEST_CASE("support values and faces") {
    const Polygon sq = square(0, 0);
    CHECK(support_value(sq, Direction(1, 0)) == 1);
    CHECK(support_value(validate_polygon({pt(2, 3)}), Direction(0, 2)) == 3);  // primitive (0,1)
    const Polygon tri = validate_polygon({pt(0, 0), pt(2, 0), pt(1, 1)});
    CHECK(support_value(tri, Direction(-1, -1)) == 0);

    auto at = [&](const std::vector<size_t>& idx) {
        std::vector<Point2> v;
        for (size_t i : idx) v.push_back(sq.vertices()[i]);
        return v;
    };
    CHECK(at(support_argmax(sq, Direction(1, 1))) == std::vector<Point2>{pt(1, 1)});
    CHECK(at(support_argmax(sq, Direction(1, 0))) == std::vector<Point2>{pt(1, 0), pt(1, 1)});
    CHECK(at(support_argmax(sq, Direction(0, -1))) == std::vector<Point2>{pt(0, 0), pt(1, 0)});
    CHECK(at(support_argmax(sq, Direction(-1, 0))) == std::vector<Point2>{pt(0, 1), pt(0, 0)});
    CHECK(support_argmax(validate_polygon({pt(5, 5)}), Direction(3, 1)) == std::vector<size_t>{0});
}

TEST_CASE("common tangents of two points") {
    const auto cs = common_tangents(validate_polygon({pt(0, 0)}), validate_polygon({pt(1, 0)}), "a", "b");
    REQUIRE(cs.size() == 2);
    CHECK(crossing_keys(cs) == crossing_keys({{"a", "b", Direction(0, -1)}, {"b", "a", Direction(0, 1)}}));
}

TEST_CASE("common tangents of disjoint and crossing squares") {
    CHECK(common_tangents(square(0, 0), square(3, 1), "a", "b").size() == 2);
    // A square and its rotation by 45 degrees about the same centre: four one-sided tangents.
    const Polygon s = validate_polygon({pt(-2, -2), pt(2, -2), pt(2, 2), pt(-2, 2)});
    const Polygon d = validate_polygon({pt(3, 0), pt(0, 3), pt(-3, 0), pt(0, -3)});
    const auto cs = common_tangents(s, d, "a", "b");
    CHECK(cs.size() == 8);
    CHECK(crossing_keys(cs) == crossing_keys(brute_force_tangents(s, d, "a", "b")));
    const Polygon wide = validate_polygon({pt(-5, -1), pt(5, -1), pt(5, 1), pt(-5, 1)});
    const Polygon tall = validate_polygon({pt(-1, -5), pt(1, -5), pt(1, 5), pt(-1, 5)});
    CHECK(common_tangents(wide, tall, "a", "b").size() == 4);
}

TEST_CASE("common tangents agree with the brute-force oracle on random polygons") {
    std::mt19937 rng(2024);
    int nested = 0, disjoint = 0, crossing = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Polygon a = random_polygon(rng, 1 + trial % 6, pt(0, 0));
        const Polygon b = random_polygon(rng, 1 + (trial / 6) % 6, Point2{random_rational(rng, 3), random_rational(rng, 3)});
        std::vector<Crossing> fast;
        try {
            fast = common_tangents(a, b, "a", "b");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Genericity);
            continue;
        }
        CHECK(crossing_keys(fast) == crossing_keys(brute_force_tangents(a, b, "a", "b")));
        CHECK(fast.size() % 2 == 0);
        if (fast.empty()) ++nested;
        if (fast.size() == 2) ++disjoint;
        if (fast.size() >= 4) ++crossing;
    }
    CHECK(nested > 0);
    CHECK(disjoint > 0);
    CHECK(crossing > 0);
}

TEST_CASE("transversality: the first body is above just before its crossing") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Polygon a = random_polygon(rng, 4, pt(0, 0));
        const Polygon b = random_polygon(rng, 4, pt(0, 0));
        std::vector<Crossing> cs;
        try {
            cs = common_tangents(a, b, "a", "b");
        } catch (const Error&) {
            continue;
        }
        for (const auto& c : cs) {
            const Polygon& first = c.first == "a" ? a : b;
            const Polygon& second = c.first == "a" ? b : a;
            // Rotate the normal slightly either way (by atan(1/1000)).
            const Integer big(1000);
            const Direction before(big * c.dir.dx() + c.dir.dy(), big * c.dir.dy() - c.dir.dx());
            const Direction after(big * c.dir.dx() - c.dir.dy(), big * c.dir.dy() + c.dir.dx());
            CHECK(support_value(first, c.dir) == support_value(second, c.dir));
            CHECK(support_value(first, before) > support_value(second, before));
            CHECK(support_value(first, after) < support_value(second, after));
        }
    }
}

TEST_CASE("genericity errors") {
    // Shared vertex.
    CHECK_THROWS_AS(common_tangents(square(0, 0), square(1, 1), "a", "b"), Error);
    // Collinear edges on a common tangent.
    try {
        common_tangents(square(0, 0), square(3, 0), "a", "b");
        FAIL("expected a genericity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Genericity);
    }
    // Three points on a line: three bodies share a tangent.
    Arrangement arr;
    arr.bodies.emplace("a", validate_polygon({pt(0, 0)}));
    arr.bodies.emplace("b", validate_polygon({pt(1, 1)}));
    arr.bodies.emplace("c", validate_polygon({pt(2, 2)}));
    CHECK_THROWS_AS(support_configuration(arr), Error);
}

TEST_CASE("support configuration of points") {
    Arrangement arr = as_arrangement({{"1", pt(0, 0)}, {"2", pt(1, 0)}, {"3", pt(0, 1)}});
    const auto cfg = support_configuration(arr);
    CHECK(cfg.crossings.size() == 6);
    for (size_t i = 0; i + 1 < cfg.crossings.size(); ++i) CHECK(cmp_angle(cfg.crossings[i].dir, cfg.crossings[i + 1].dir) <= 0);
    Arrangement one;
    one.bodies.emplace("x", square(0, 0));
    CHECK(support_configuration(one).crossings.empty());
    const SwapPair sp = swap_pair_of(one);
    CHECK(sp.rho == std::vector<Label>{"x"});
    CHECK(sp.sigma.empty());

    std::mt19937 rng(8);
    for (size_t n = 3; n <= 7; ++n) {
        const auto pts = random_points(rng, n);
        const auto a = as_arrangement(pts);
        CHECK(support_configuration(a).crossings.size() == n * (n - 1));
        CHECK(swap_pair_of(a).N() == n * (n - 1));
    }
}

TEST_CASE("swap pair of two points") {
    const auto sp = swap_pair_of(as_arrangement({{"a", pt(0, 0)}, {"b", pt(0, 1)}}));
    CHECK(sp.N() == 2);
    CHECK(sp.sigma == std::vector<int>{1, 1});
    // At angle 0+ both have value 0; b has the larger y.
    CHECK(sp.rho == std::vector<Label>{"a", "b"});
}

TEST_CASE("swap pair of a disk-point-triangle arrangement") {
    // A rational octagon standing in for a disk, a point and a triangle.
    Arrangement arr;
    arr.bodies.emplace("disk", validate_polygon({pt(5, 0), pt(4, 3), pt(0, 5), pt(-3, 4), pt(-5, 0), pt(-4, -3), pt(0, -5),
                                                 pt(3, -4)}));
    arr.bodies.emplace("point", validate_polygon({pt(9, 7)}));
    arr.bodies.emplace("tri", validate_polygon({pt(10, -6), pt(14, -5), pt(11, -2)}));
    const auto cfg = support_configuration(arr);
    CHECK(cfg.crossings.size() == 6);
    const SwapPair sp = swap_pair_of(arr, cfg);
    CHECK(sp.N() == 6);
    for (const auto& [x, y] : {std::pair<Label, Label>{"disk", "point"}, {"disk", "tri"}, {"point", "tri"}})
        CHECK(crossing_count(sp, x, y) == 2);
}

TEST_CASE("vertex chirotope") {
    Arrangement tri;
    tri.bodies.emplace("1", validate_polygon({pt(0, 0), pt(1, 0), pt(0, 1)}));
    CHECK(vertex_chirotope(tri).sign("1:1", "1:2", "1:3") == 1);

    Arrangement segs;
    segs.bodies.emplace("a", validate_polygon({pt(0, 0), pt(4, 0)}));
    segs.bodies.emplace("b", validate_polygon({pt(1, 3), pt(3, 4)}));
    const Chirotope chi = vertex_chirotope(segs);
    std::map<Label, Point2> named{{"a:1", pt(0, 0)}, {"a:2", pt(4, 0)}, {"b:1", pt(1, 3)}, {"b:2", pt(3, 4)}};
    for (const auto& [x, px] : named)
        for (const auto& [y, py] : named)
            for (const auto& [z, pz] : named)
                if (x < y && y < z) CHECK(chi.sign(x, y, z) == orient(px, py, pz));

    Arrangement bad;
    bad.bodies.emplace("a", square(0, 0, 2));
    bad.bodies.emplace("b", validate_polygon({pt(1, 0), pt(5, 5)}));
    CHECK_THROWS_AS(vertex_chirotope(bad), Error);
}

TEST_CASE("hausdorff distance") {
    Arrangement a, b, p, q;
    a.bodies.emplace("x", square(0, 0));
    b.bodies.emplace("x", square(1, 0));
    p.bodies.emplace("x", validate_polygon({pt(0, 0)}));
    q.bodies.emplace("x", validate_polygon({pt(0, 3)}));
    CHECK(hausdorff_distance(a, a) == doctest::Approx(0));
    CHECK(hausdorff_distance(a, b) == doctest::Approx(1));
    CHECK(hausdorff_distance(p, q) == doctest::Approx(3));
    Arrangement other;
    other.bodies.emplace("y", square(0, 0));
    CHECK_THROWS_AS(hausdorff_distance(a, other), Error);
}

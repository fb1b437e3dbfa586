#include <doctest.h>

#include <random>

#include "cak/error.hpp"
#include "cak/order_types.hpp"
#include "cak/realization.hpp"
#include "support.hpp"

using namespace cak;
using namespace testing;

namespace {

const PointSet kTriangle{{"1", pt(0, 0)}, {"2", pt(1, 0)}, {"3", pt(0, 1)}};

SwapPair dual(const PointSet& pts) { return swap_pair_of(as_arrangement(pts)); }

// Random points relabeled so that "a" is the lowest point and the others are
// named in counter-clockwise order of their rays from it.
PointSet fan_labeled(std::mt19937& rng, size_t n) {
    const PointSet raw = random_points(rng, n);
    std::vector<Point2> v;
    for (const auto& kv : raw) v.push_back(kv.second);
    std::sort(v.begin(), v.end(), [](const Point2& p, const Point2& q) { return p.y < q.y || (p.y == q.y && p.x < q.x); });
    const Point2 d = v.front();
    std::sort(v.begin() + 1, v.end(), [&](const Point2& p, const Point2& q) { return orient(d, p, q) > 0; });
    PointSet out;
    for (size_t i = 0; i < n; ++i) out[std::string(1, static_cast<char>('a' + i))] = v[i];
    return out;
}

// All Knuth axioms checked directly on ordered tuples.
std::string naive_cc(const Chirotope& chi) {
    const size_t n = chi.size();
    auto s = [&](size_t a, size_t b, size_t c) { return chi.sign_at(a, b, c) > 0; };
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            for (size_t r = 0; r < n; ++r)
                for (size_t t = 0; t < n; ++t) {
                    if (std::set<size_t>{p, q, r, t}.size() < 4) continue;
                    if (s(t, q, r) && s(p, t, r) && s(p, q, t) && !s(p, q, r)) return "interiority";
                }
    for (size_t t = 0; t < n; ++t)
        for (size_t u = 0; u < n; ++u)
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q)
                    for (size_t r = 0; r < n; ++r) {
                        if (std::set<size_t>{t, u, p, q, r}.size() < 5) continue;
                        if (s(t, u, p) && s(t, u, q) && s(t, u, r) && s(t, p, q) && s(t, q, r) && !s(t, p, r))
                            return "transitivity";
                    }
    return "";
}

}  // namespace

TEST_CASE("triple types of three points") {
    const SwapPair sp = dual(kTriangle);
    CHECK(triple_type(sp, "1", "2", "3") == TripleType::Positive);
    CHECK(triple_type(sp, "1", "3", "2") == TripleType::Negative);
    CHECK(triple_type(sp, "2", "3", "1") == TripleType::Positive);
    CHECK(triple_type(dual({{"1", pt(0, 0)}, {"2", pt(0, 1)}, {"3", pt(1, 0)}}), "1", "2", "3") == TripleType::Negative);
    CHECK_THROWS_AS(triple_type(sp, "1", "2", "x"), Error);
    CHECK_THROWS_AS(triple_type(sp, "1", "1", "2"), Error);
}

TEST_CASE("triple types are alternating") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const SwapPair sp = random_swap_pair(rng, 3, 10);
        const TripleType t = triple_type(sp, "a", "b", "c");
        const TripleType flipped = t == TripleType::Positive   ? TripleType::Negative
                                   : t == TripleType::Negative ? TripleType::Positive
                                                               : t;
        CHECK(triple_type(sp, "b", "c", "a") == t);
        CHECK(triple_type(sp, "b", "a", "c") == flipped);
        CHECK(triple_type(sp, "c", "b", "a") == flipped);
    }
}

TEST_CASE("a pair crossing four times makes the triple non-orientable") {
    Arrangement arr;
    arr.bodies.emplace("a", validate_polygon({pt(-5, -1), pt(5, -1), pt(5, 1), pt(-5, 1)}));
    arr.bodies.emplace("b", validate_polygon({pt(-1, -5), pt(1, -5), pt(1, 5), pt(-1, 5)}));
    arr.bodies.emplace("c", validate_polygon({pt(20, 23)}));
    const SwapPair sp = swap_pair_of(arr);
    CHECK(crossing_count(sp, "a", "b") == 4);
    CHECK(triple_type(sp, "a", "b", "c") == TripleType::NonOrientable);
    try {
        chirotope_of(sp);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Inconsistent);
        CHECK(e.detail() == "non_orientable:a,b,c");
    }
}

TEST_CASE("a body between two others is non-orientable although every pair crosses twice") {
    // Octagon standing in for a disk, with a point on either side.
    Arrangement arr;
    arr.bodies.emplace("b", validate_polygon({pt(10, 0), pt(7, 7), pt(0, 10), pt(-7, 7), pt(-10, 0), pt(-7, -7), pt(0, -10),
                                              pt(7, -7)}));
    arr.bodies.emplace("a", validate_polygon({pt(-20, 1)}));
    arr.bodies.emplace("c", validate_polygon({pt(20, 2)}));
    const SwapPair sp = swap_pair_of(arr);
    for (const auto& [x, y] : {std::pair<Label, Label>{"a", "b"}, {"a", "c"}, {"b", "c"}}) CHECK(crossing_count(sp, x, y) == 2);
    CHECK(triple_type(sp, "a", "b", "c") == TripleType::NonOrientable);
}

TEST_CASE("chirotopes of points") {
    const Chirotope chi = chirotope_of_points(kTriangle);
    CHECK(chi.sign("1", "2", "3") == 1);
    CHECK(chi.sign("2", "1", "3") == -1);
    CHECK_THROWS_AS(chirotope_of_points({{"1", pt(0, 0)}, {"2", pt(1, 1)}, {"3", pt(3, 3)}}), Error);

    std::mt19937 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const PointSet pts = random_points(rng, 6);
        PointSet moved;
        const Point2 shift{random_rational(rng, 99), random_rational(rng, 99)};
        for (const auto& [l, p] : pts) moved[l] = p + shift;
        CHECK(chirotope_of_points(pts) == chirotope_of_points(moved));
    }

    const PointSet generic{{"1", pt(0, 0)}, {"2", pt(3, 0)}, {"3", pt(4, 3)}, {"4", pt(0, 2)}};
    const Chirotope convex = chirotope_of(dual(generic));
    for (const auto& [a, b, c] : std::vector<std::array<Label, 3>>{{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}})
        CHECK(convex.sign(a, b, c) == 1);
}

TEST_CASE("duality: chirotope of the dual system equals the determinant chirotope") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t n = 3 + static_cast<size_t>(trial) % 5;
        const PointSet pts = random_points(rng, n);
        const SwapPair sp = dual(pts);
        CHECK(sp.N() == n * (n - 1));
        CHECK(chirotope_of(sp) == chirotope_of_points(pts));
    }
}

TEST_CASE("cc_check") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const CCResult r = cc_check(chirotope_of_points(random_points(rng, 3 + static_cast<size_t>(trial) % 5)));
        CHECK(r.ok);
        CHECK(r.axiom.empty());
    }
    CHECK(cc_check(chirotope_of_points(kTriangle)).ok);

    // Every sign map on four elements against the direct check.
    int violators = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
        Chirotope chi({"1", "2", "3", "4"}, [](const Label&, const Label&, const Label&) { return 1; });
        size_t bit = 0;
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j)
                for (size_t k = j + 1; k < 4; ++k) chi.set_sign_sorted(i, j, k, (mask >> bit++) & 1 ? 1 : -1);
        const std::string want = naive_cc(chi);
        const CCResult r = cc_check(chi);
        CHECK(r.ok == want.empty());
        CHECK(r.axiom == want);
        if (!r.ok) {
            ++violators;
            CHECK(r.witness.size() == 4);
        }
    }
    CHECK(violators > 0);

    // Five elements: random sign maps, including transitivity violations.
    int transitivity = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<int> coin(0, 1);
        const Chirotope chi({"1", "2", "3", "4", "5"},
                            [&](const Label&, const Label&, const Label&) { return coin(rng) ? 1 : -1; });
        const std::string want = naive_cc(chi);
        CHECK(cc_check(chi).axiom == want);
        transitivity += want == "transitivity";
    }
    CHECK(transitivity > 0);
}

TEST_CASE("allowable sequences") {
    const PathSystem two = allowable_sequence({{"a", pt(0, 0)}, {"b", pt(1, 3)}});
    CHECK(two.swaps == std::vector<int>{1});
    const PathSystem tri = allowable_sequence(kTriangle);
    CHECK(tri.swaps.size() == 3);
    CHECK(final_order(tri) == std::vector<Label>(tri.initial.rbegin(), tri.initial.rend()));
    CHECK(tri.initial == std::vector<Label>{"1", "3", "2"});

    std::mt19937 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t n = 2 + static_cast<size_t>(trial) % 6;
        const PointSet pts = random_points(rng, n);
        const PathSystem L = allowable_sequence(pts);
        CHECK(L.swaps.size() == n * (n - 1) / 2);
        CHECK(final_order(L) == std::vector<Label>(L.initial.rbegin(), L.initial.rend()));
        if (n >= 3) CHECK(chirotope_of(swap_pair_from_half(L)) == chirotope_of_points(pts));
    }
    CHECK_THROWS_AS(allowable_sequence({{"a", pt(0, 0)}, {"b", pt(1, 1)}, {"c", pt(2, 2)}}), Error);
    // Parallel connecting lines on disjoint pairs swap at different heights.
    const PointSet square{{"a", pt(0, 0)}, {"b", pt(1, 0)}, {"c", pt(1, 1)}, {"d", pt(0, 1)}};
    const PathSystem S = allowable_sequence(square);
    CHECK(S.swaps.size() == 6);
    CHECK(chirotope_of(swap_pair_from_half(S)) == chirotope_of_points(square));
}

TEST_CASE("swap_pair_from_half") {
    const SwapPair sp = swap_pair_from_half(validate_path_system({"a", "b"}, {1}));
    CHECK(sp.rho == std::vector<Label>{"a", "b"});
    CHECK(sp.sigma == std::vector<int>{1, 1});
    CHECK(canonical_form(sp) == canonical_form(validate_swap_pair({"a", "b"}, {1, 1})));
}

TEST_CASE("firstpath representations") {
    // b, c counter-clockwise around a.
    const PointSet tri{{"a", pt(0, 0)}, {"b", pt(1, 0)}, {"c", pt(0, 1)}};
    const PathSystem L = firstpath_representation(tri, "a");
    REQUIRE(L.swaps.size() == 3);
    CHECK(L.initial.back() == "a");
    CHECK(L.swaps[0] == 2);
    CHECK(L.swaps[1] == 1);
    CHECK(chirotope_of(swap_pair_from_half(L)) == chirotope_of_points(tri));

    try {
        firstpath_representation({{"a", pt(0, 0)}, {"b", pt(0, 1)}, {"c", pt(1, 0)}}, "a");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.detail() == "local_sequence");
    }
    try {
        firstpath_representation({{"a", pt(1, 1)}, {"b", pt(0, 0)}, {"c", pt(4, 0)}, {"d", pt(0, 4)}}, "a");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.detail() == "interior");
    }

    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t n = 3 + static_cast<size_t>(trial) % 5;
        const PointSet pts = fan_labeled(rng, n);
        const PathSystem F = firstpath_representation(pts, "a");
        CHECK(F.initial.back() == "a");
        for (size_t i = 0; i + 1 < n; ++i) CHECK(F.swaps[i] == static_cast<int>(n - 1 - i));
        CHECK(F.swaps.size() == n * (n - 1) / 2);
        CHECK(chirotope_of(swap_pair_from_half(F)) == chirotope_of_points(pts));
        CHECK(equivalent(swap_pair_from_half(F), swap_pair_from_half(allowable_sequence(pts))));
    }
}

#include <doctest.h>

#include <chrono>
#include <map>

#include "cak/order_types.hpp"
#include "cak/realization.hpp"
#include "nonpappus_fixture.hpp"
#include "support.hpp"

using namespace cak;
using namespace fixtures;

namespace {

PointSet pappus_points() {
    PointSet out;
    for (const auto& p : kPappusPerturbed) out[p.label] = Point2{parse_rational(p.x), parse_rational(p.y)};
    return out;
}

PathSystem half(const std::vector<int>& swaps) {
    return validate_path_system(std::vector<Label>(kNonPappusInitial.begin(), kNonPappusInitial.end()), swaps);
}

// True when the weighted inequalities hold under `chi` and their exponents
// cancel, which no realization can satisfy.
bool certifies_non_realizable(const Chirotope& chi) {
    std::map<std::vector<Label>, long> exponent;
    for (const auto& g : kNonPappusCertificate) {
        const Label a = g.labels[0], b = g.labels[1], c = g.labels[2], d = g.labels[3], e = g.labels[4];
        const std::array<std::array<std::array<Label, 3>, 2>, 3> terms{{
            {{{a, b, c}, {a, d, e}}},
            {{{a, b, d}, {a, c, e}}},
            {{{a, b, e}, {a, c, d}}},
        }};
        const std::array<int, 3> coeff{1, -1, 1};
        std::array<int, 3> sign{};
        for (int t = 0; t < 3; ++t) {
            const auto& [x, y] = terms[static_cast<size_t>(t)];
            sign[static_cast<size_t>(t)] =
                coeff[static_cast<size_t>(t)] * chi.sign(x[0], x[1], x[2]) * chi.sign(y[0], y[1], y[2]);
        }
        const auto big = static_cast<size_t>(g.big), small = static_cast<size_t>(g.small);
        if (big == small || big > 2 || small > 2 || g.weight <= 0) return false;
        for (size_t t = 0; t < 3; ++t)
            if (t != big && sign[t] == sign[big]) return false;
        auto add = [&](const std::array<Label, 3>& br, long w) {
            std::vector<Label> key(br.begin(), br.end());
            std::sort(key.begin(), key.end());
            exponent[key] += w;
        };
        for (const auto& br : terms[big]) add(br, g.weight);
        for (const auto& br : terms[small]) add(br, -g.weight);
    }
    if (kNonPappusCertificate.empty()) return false;
    for (const auto& [k, v] : exponent)
        if (v != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("the perturbed Pappus configuration matches its wiring diagram") {
    const PathSystem L = allowable_sequence(pappus_points());
    CHECK(L == half(kPappusSwaps));
    CHECK(chirotope_of(swap_pair_from_half(L)) == chirotope_of_points(pappus_points()));
}

TEST_CASE("non-Pappus differs from Pappus in one triple") {
    Chirotope expected = chirotope_of_points(pappus_points());
    const auto& ls = expected.labels();
    const auto at = [&](const char* l) {
        return static_cast<size_t>(std::find(ls.begin(), ls.end(), Label(l)) - ls.begin());
    };
    expected.set_sign_sorted(at("C1"), at("C2"), at("C3"), -expected.sign("C1", "C2", "C3"));
    const SwapPair sp = swap_pair_from_half(half(kNonPappusSwaps));
    CHECK(sp.N() == 72);
    const Chirotope chi = chirotope_of(sp);
    CHECK(chi == expected);
    CHECK(cc_check(chi).ok);
}

TEST_CASE("the certificate rules out a point realization") {
    CHECK(certifies_non_realizable(chirotope_of(swap_pair_from_half(half(kNonPappusSwaps)))));
    CHECK_FALSE(certifies_non_realizable(chirotope_of_points(pappus_points())));
}

TEST_CASE("non-Pappus is realized by convex polygons") {
    const SwapPair sp = swap_pair_from_half(half(kNonPappusSwaps));
    const auto t0 = std::chrono::steady_clock::now();
    int retries = -1;
    const Arrangement arr = realize_ngons(sp, {}, &retries);
    CHECK(retries >= 0);
    CHECK(retries <= 3);
    const SwapPair back = swap_pair_of(arr);
    CHECK(equivalent(back, sp));
    for (const auto& [l, body] : arr.bodies) CHECK(body.size() <= 72);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE("non-Pappus round trip: " << secs << " s, " << retries << " retries");
}

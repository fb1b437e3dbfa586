#pragma once

// Random generators and brute-force oracles shared by the test binaries.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cak/combinatorics.hpp"
#include "cak/error.hpp"
#include "cak/geometry.hpp"
#include "cak/order_types.hpp"
#include "cak/realization.hpp"

namespace testing {

using namespace cak;

inline Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

inline Point2 ptq(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

inline std::vector<Label> labels_of(size_t n) {
    std::vector<Label> out;
    for (size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

inline SwapPair four_label_type() { return validate_swap_pair({"a", "b", "c", "d"}, {1, 2, 2, 3, 1, 3}); }

/// Random rational in [-1, 1] with numerator and denominator at most `bound`.
inline Rational random_rational(std::mt19937& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    Rational q(Integer(num(rng)), Integer(den(rng)));
    q.canonicalize();
    return q;
}

/// n points in general position (no three collinear, distinct).
inline PointSet random_points(std::mt19937& rng, size_t n, long bound = 1000) {
    for (;;) {
        PointSet out;
        for (size_t i = 0; i < n; ++i) out[std::to_string(i + 1)] = {random_rational(rng, bound), random_rational(rng, bound)};
        bool ok = out.size() == n;
        std::vector<Point2> v;
        for (auto& kv : out) v.push_back(kv.second);
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = i + 1; j < n && ok; ++j) {
                ok = !(v[i] == v[j]);
                for (size_t k = j + 1; k < n && ok; ++k) ok = orient(v[i], v[j], v[k]) != 0;
            }
        if (ok) return out;
    }
}

inline Arrangement as_arrangement(const PointSet& points) {
    Arrangement arr;
    for (const auto& [l, p] : points) arr.bodies.emplace(l, validate_polygon({p}));
    return arr;
}

/// Random valid swap pair: a random prefix of swaps closed up by bubble sort.
inline SwapPair random_swap_pair(std::mt19937& rng, size_t n, size_t max_N) {
    const auto labels = labels_of(n);
    for (;;) {
        std::vector<int> perm(n);
        for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
        std::vector<int> sigma;
        std::uniform_int_distribution<size_t> len(0, max_N);
        std::uniform_int_distribution<int> h(1, static_cast<int>(n) - 1);
        const size_t prefix = n < 2 ? 0 : len(rng);
        for (size_t t = 0; t < prefix; ++t) {
            const int x = h(rng);
            sigma.push_back(x);
            std::swap(perm[static_cast<size_t>(x - 1)], perm[static_cast<size_t>(x)]);
        }
        for (bool again = true; again;) {
            again = false;
            for (size_t i = 0; i + 1 < n; ++i)
                if (perm[i] > perm[i + 1]) {
                    std::swap(perm[i], perm[i + 1]);
                    sigma.push_back(static_cast<int>(i + 1));
                    again = true;
                }
        }
        if (sigma.size() > max_N) continue;
        std::vector<Label> rho = labels;
        std::shuffle(rho.begin(), rho.end(), rng);
        return validate_swap_pair(rho, sigma);
    }
}

/// A random elementary operation (cyclic shift or a legal independent transposition).
inline SwapPair random_elementary(std::mt19937& rng, const SwapPair& sp) {
    if (sp.N() == 0) return sp;
    std::vector<size_t> legal;
    for (size_t i = 1; i < sp.N(); ++i)
        if (std::abs(sp.sigma[i - 1] - sp.sigma[i]) > 1) legal.push_back(i);
    std::uniform_int_distribution<int> coin(0, 1);
    if (legal.empty() || coin(rng) == 0) return cyclic_shift(sp);
    std::uniform_int_distribution<size_t> pick(0, legal.size() - 1);
    return independent_transposition(sp, legal[pick(rng)]);
}

/// Oracle for a bump class: tableaux of every swap pair reachable by cyclic
/// shifts and independent transpositions.
inline std::set<std::pair<std::vector<Label>, std::vector<std::vector<Label>>>> elementary_class(const SwapPair& sp) {
    using Key = std::pair<std::vector<Label>, std::vector<std::vector<Label>>>;
    auto key = [](const Tableau& t) {
        Key k{t.order, {}};
        for (const auto& kv : t.rows) k.second.push_back(kv.second);
        return k;
    };
    std::set<std::pair<std::vector<Label>, std::vector<int>>> seen{{sp.rho, sp.sigma}};
    std::vector<SwapPair> todo{sp};
    std::set<Key> out;
    while (!todo.empty()) {
        const SwapPair x = todo.back();
        todo.pop_back();
        out.insert(key(tableau_of(x)));
        if (x.N() == 0) continue;
        std::vector<SwapPair> next{cyclic_shift(x)};
        for (size_t i = 1; i < x.N(); ++i)
            if (std::abs(x.sigma[i - 1] - x.sigma[i]) > 1) next.push_back(independent_transposition(x, i));
        for (auto& y : next)
            if (seen.insert({y.rho, y.sigma}).second) todo.push_back(std::move(y));
    }
    return out;
}

/// Oracle for enumerate_canonical: every (rho, sigma) by brute force, grouped
/// into elementary-operation classes. Returns one class (as a set of tableaux) per type.
inline std::vector<std::set<std::pair<std::vector<Label>, std::vector<std::vector<Label>>>>> brute_force_classes(
    size_t n, size_t N, std::optional<size_t> pair_crossings) {
    std::vector<Label> labels;
    for (size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::set<std::pair<std::vector<Label>, std::vector<std::vector<Label>>>>> classes;
    std::vector<Label> rho = labels;
    do {
        std::vector<int> sigma(N, 1);
        for (;;) {
            bool ok = true;
            SwapPair sp;
            try {
                sp = validate_swap_pair(rho, sigma);
            } catch (const Error&) {
                ok = false;
            }
            if (ok && pair_crossings)
                for (size_t i = 0; i < n && ok; ++i)
                    for (size_t j = i + 1; j < n && ok; ++j) ok = crossing_count(sp, labels[i], labels[j]) == *pair_crossings;
            if (ok) {
                const Tableau t = tableau_of(sp);
                std::vector<std::vector<Label>> rows;
                for (const auto& kv : t.rows) rows.push_back(kv.second);
                bool known = false;
                for (const auto& c : classes) known = known || c.count({t.order, rows});
                if (!known) classes.push_back(elementary_class(sp));
            }
            size_t pos = 0;
            while (pos < N && sigma[pos] == static_cast<int>(n) - 1) sigma[pos++] = 1;
            if (pos == N) break;
            ++sigma[pos];
        }
    } while (std::next_permutation(rho.begin(), rho.end()));
    return classes;
}

/// Convex polygon from random points (hull of k random points).
inline Polygon random_polygon(std::mt19937& rng, size_t k, const Point2& centre, long bound = 50) {
    std::vector<Point2> v;
    for (size_t i = 0; i < k; ++i) v.push_back(centre + Point2{random_rational(rng, bound), random_rational(rng, bound)});
    return validate_polygon(v);
}

/// Tangent oracle: every ordered vertex pair whose directed line has all other
/// vertices of both polygons strictly on its left.
inline std::vector<Crossing> brute_force_tangents(const Polygon& a, const Polygon& b, const Label& la, const Label& lb) {
    std::vector<Crossing> out;
    auto scan = [&](const Polygon& x, const Polygon& y, const Label& lx, const Label& ly) {
        for (const auto& p : x.vertices())
            for (const auto& q : y.vertices()) {
                bool ok = true;
                for (const Polygon* poly : {&x, &y})
                    for (const auto& r : poly->vertices())
                        if (!(r == p) && !(r == q) && orient(p, q, r) <= 0) ok = false;
                if (ok) out.push_back({lx, ly, Direction::of((q - p).y, -(q - p).x)});
            }
    };
    scan(a, b, la, lb);
    scan(b, a, lb, la);
    return out;
}

/// Canonical key of a crossing list, independent of order.
inline std::vector<std::string> crossing_keys(const std::vector<Crossing>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.first + ">" + c.second + "@" + c.dir.dx().get_str() + "," + c.dir.dy().get_str());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testing

#include "cak/order_types.hpp"

#include <algorithm>
#include <set>

#include "cak/combinatorics.hpp"
#include "cak/error.hpp"
#include "cak/geometry.hpp"

namespace cak {

std::string_view to_string(TripleType t) {
    switch (t) {
    case TripleType::Positive: return "+";
    case TripleType::Negative: return "-";
    case TripleType::NonOrientable: return "non-orientable";
    }
    return "?";
}

TripleType triple_type(const SwapPair& sp, const Label& i, const Label& j, const Label& k) {
    if (i == j || j == k || i == k) fail(ErrorKind::InvalidInput, "triple labels must be distinct");
    const SwapPair r = restrict(sp, {i, j, k});
    for (const auto& [x, y] : {std::pair{i, j}, std::pair{j, k}, std::pair{i, k}})
        if (crossing_count(r, x, y) != 2) return TripleType::NonOrientable;
    // Topmost curve on each arc between consecutive crossings, cyclically.
    std::vector<Label> order = r.rho;
    std::vector<Label> tops;
    for (int h : r.sigma) {
        std::swap(order[h - 1], order[h]);
        tops.push_back(order[2]);
    }
    std::vector<Label> arcs;
    for (size_t t = 0; t < tops.size(); ++t)
        if (tops[t] != tops[(t + tops.size() - 1) % tops.size()]) arcs.push_back(tops[t]);
    if (arcs.size() != 3 || std::set<Label>(arcs.begin(), arcs.end()).size() != 3) return TripleType::NonOrientable;
    for (size_t s = 0; s < 3; ++s)
        if (arcs[s] == i) return arcs[(s + 1) % 3] == j ? TripleType::Positive : TripleType::Negative;
    return TripleType::NonOrientable;
}

Chirotope chirotope_of(const SwapPair& sp) {
    if (sp.n() < 3) fail(ErrorKind::InvalidInput, "a chirotope needs at least three labels");
    return Chirotope(sp.rho, [&](const Label& a, const Label& b, const Label& c) {
        const TripleType t = triple_type(sp, a, b, c);
        if (t == TripleType::NonOrientable)
            fail(ErrorKind::Inconsistent, "triple (" + a + "," + b + "," + c + ") is not orientable",
                 "non_orientable:" + a + "," + b + "," + c);
        return t == TripleType::Positive ? 1 : -1;
    });
}

CCResult cc_check(const Chirotope& chi) {
    const size_t n = chi.size();
    const auto& L = chi.labels();
    auto violation = [&](std::string axiom, std::initializer_list<size_t> idx) {
        CCResult r{false, std::move(axiom), {}};
        for (size_t i : idx) r.witness.push_back(L[i]);
        return r;
    };
    auto s = [&](size_t a, size_t b, size_t c) { return chi.sign_at(a, b, c); };
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            for (size_t r = 0; r < n; ++r) {
                if (p == q || q == r || p == r) continue;
                if (s(p, q, r) != s(q, r, p)) return violation("cyclic symmetry", {p, q, r});
                if (s(p, q, r) != -s(p, r, q)) return violation("antisymmetry", {p, q, r});
                if (s(p, q, r) == 0) return violation("nondegeneracy", {p, q, r});
            }
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            for (size_t r = 0; r < n; ++r)
                for (size_t t = 0; t < n; ++t) {
                    if (p == q || p == r || p == t || q == r || q == t || r == t) continue;
                    if (s(t, q, r) > 0 && s(p, t, r) > 0 && s(p, q, t) > 0 && s(p, q, r) < 0)
                        return violation("interiority", {p, q, r, t});
                }
    for (size_t t = 0; t < n; ++t)
        for (size_t u = 0; u < n; ++u) {
            if (u == t) continue;
            for (size_t p = 0; p < n; ++p) {
                if (p == t || p == u || s(t, u, p) < 0) continue;
                for (size_t q = 0; q < n; ++q) {
                    if (q == t || q == u || q == p || s(t, u, q) < 0 || s(t, p, q) < 0) continue;
                    for (size_t r = 0; r < n; ++r) {
                        if (r == t || r == u || r == p || r == q) continue;
                        if (s(t, u, r) > 0 && s(t, q, r) > 0 && s(t, p, r) < 0)
                            return violation("transitivity", {t, u, p, q, r});
                    }
                }
            }
        }
    return {};
}

Chirotope chirotope_of_points(const PointSet& points) {
    std::vector<Label> labels;
    for (const auto& kv : points) labels.push_back(kv.first);
    return Chirotope(labels, [&](const Label& a, const Label& b, const Label& c) {
        const int o = orient(points.at(a), points.at(b), points.at(c));
        if (o == 0)
            fail(ErrorKind::Genericity, "non-simple point set: " + a + ", " + b + ", " + c + " are collinear",
                 "collinear:" + a + "," + b + "," + c);
        return o;
    });
}

namespace {

void check_general_position(const PointSet& points) {
    if (points.size() >= 3) chirotope_of_points(points);
    for (auto i = points.begin(); i != points.end(); ++i)
        for (auto j = std::next(i); j != points.end(); ++j)
            if (i->second == j->second) fail(ErrorKind::Genericity, "points " + i->first + " and " + j->first + " coincide");
}

}  // namespace

PathSystem allowable_sequence(const PointSet& points) {
    if (points.empty()) fail(ErrorKind::InvalidInput, "empty point set");
    check_general_position(points);
    std::vector<Label> initial;
    for (const auto& kv : points) initial.push_back(kv.first);
    std::sort(initial.begin(), initial.end(), [&](const Label& a, const Label& b) {
        const Point2& p = points.at(a);
        const Point2& q = points.at(b);
        return p.x != q.x ? p.x < q.x : p.y < q.y;
    });
    struct Event {
        Label upper, lower;
        Direction dir;
        Rational value;
    };
    std::vector<Event> events;
    for (auto i = points.begin(); i != points.end(); ++i)
        for (auto j = std::next(i); j != points.end(); ++j) {
            const Point2 d = j->second - i->second;
            Direction n = Direction::of(d.y, -d.x);
            if (cmp_angle(n, Direction(-1, 0)) > 0) n = Direction(-n.dx(), -n.dy());
            // Before the crossing the larger value belongs to the point behind the normal turn.
            Label hi = i->first, lo = j->first;
            const Direction before(n.dx() + n.dy(), n.dy() - n.dx());  // n rotated back by 45 degrees
            if (dot(before, j->second) > dot(before, i->second)) std::swap(hi, lo);
            events.push_back({hi, lo, n, dot(n, i->second)});
        }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        const auto o = cmp_angle(a.dir, b.dir);
        if (o != 0) return o < 0;
        return a.value < b.value;
    });
    for (size_t i = 0; i + 1 < events.size(); ++i)
        if (cmp_angle(events[i].dir, events[i + 1].dir) == 0 && events[i].value == events[i + 1].value)
            fail(ErrorKind::Genericity, "connecting lines coincide");
    std::vector<Label> order = initial;
    std::map<Label, size_t> pos;
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    PathSystem out{initial, {}};
    for (const auto& e : events) {
        const size_t lo = pos[e.lower], hi = pos[e.upper];
        if (hi != lo + 1)
            fail(ErrorKind::Genericity, "swap " + e.upper + "," + e.lower + " is between non-adjacent paths");
        std::swap(order[lo], order[hi]);
        pos[order[lo]] = lo;
        pos[order[hi]] = hi;
        out.swaps.push_back(static_cast<int>(lo + 1));
    }
    if (!std::equal(order.begin(), order.end(), initial.rbegin()))
        fail(ErrorKind::Internal, "allowable sequence does not reverse the initial order");
    return out;
}

PathSystem firstpath_representation(const PointSet& points, const Label& d) {
    if (!points.count(d)) fail(ErrorKind::InvalidInput, "distinguished label '" + d + "' is not a point");
    check_general_position(points);
    const size_t n = points.size();
    if (n < 2) fail(ErrorKind::InvalidInput, "firstpath representation needs at least two points");

    std::vector<Point2> all;
    for (const auto& kv : points) all.push_back(kv.second);
    const Polygon hull = validate_polygon(all);
    const Point2& pd = points.at(d);
    if (std::find(hull.vertices().begin(), hull.vertices().end(), pd) == hull.vertices().end())
        fail(ErrorKind::InvalidInput, "distinguished point '" + d + "' is not on the convex boundary", "interior");

    std::vector<Label> others;
    for (const auto& kv : points)
        if (kv.first != d) others.push_back(kv.first);
    std::vector<Label> rays = others;
    std::sort(rays.begin(), rays.end(),
              [&](const Label& a, const Label& b) { return orient(pd, points.at(a), points.at(b)) > 0; });
    if (rays != others)
        fail(ErrorKind::InvalidInput,
             "rays from '" + d + "' are not in counter-clockwise label order", "local_sequence");

    Arrangement arr;
    for (const auto& [l, p] : points) arr.bodies.emplace(l, validate_polygon({p}));
    const Tableau full = tableau_of(swap_pair_of(arr));

    std::vector<Label> target(others.rbegin(), others.rend());
    target.push_back(d);
    auto accept = [&](const Tableau& t) {
        if (t.order != target) return false;
        const auto& row = t.rows.at(d);
        if (!std::equal(others.begin(), others.end(), row.begin())) return false;
        for (const auto& l : others)
            if (t.rows.at(l).front() != d) return false;
        return true;
    };
    const auto found = find_in_closure(full, accept);
    if (!found) fail(ErrorKind::Internal, "no cut with the distinguished path first");

    // First half of every row, swept with the distinguished crossings first.
    std::map<Label, std::vector<Label>> half;
    for (const auto& [l, row] : found->rows) half[l].assign(row.begin(), row.begin() + static_cast<long>(n - 1));
    std::map<Label, size_t> cursor;
    for (const auto& kv : half) cursor[kv.first] = 0;
    std::vector<Label> order = target;
    PathSystem out{target, {}};
    auto execute = [&](size_t i) {
        ++cursor[order[i]];
        ++cursor[order[i + 1]];
        std::swap(order[i], order[i + 1]);
        out.swaps.push_back(static_cast<int>(i + 1));
    };
    for (size_t h = n - 1; h >= 1; --h) execute(h - 1);
    auto first = [&](const Label& l) -> const Label* {
        const size_t c = cursor[l];
        return c < half[l].size() ? &half[l][c] : nullptr;
    };
    for (size_t left = n * (n - 1) / 2 - (n - 1); left > 0; --left) {
        bool moved = false;
        for (size_t i = 0; i + 1 < n && !moved; ++i) {
            const Label* a = first(order[i]);
            const Label* b = first(order[i + 1]);
            if (a && b && *a == order[i + 1] && *b == order[i]) {
                execute(i);
                moved = true;
            }
        }
        if (!moved) fail(ErrorKind::Internal, "firstpath half cannot be swept");
    }
    if (!std::equal(order.begin(), order.end(), target.rbegin()))
        fail(ErrorKind::Internal, "firstpath representation does not reverse the order");
    return out;
}

SwapPair swap_pair_from_half(const PathSystem& half) {
    const int n = static_cast<int>(half.n());
    std::vector<int> sigma = half.swaps;
    for (int h : half.swaps) sigma.push_back(n - h);
    return validate_swap_pair(half.initial, std::move(sigma));
}

}  // namespace cak

#include "cak/realization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cak/combinatorics.hpp"
#include "cak/error.hpp"

namespace cak {

// ---------------------------------------------------------------- path systems

PathSystem validate_path_system(std::vector<Label> initial, std::vector<int> swaps) {
    {
        std::vector<Label> sorted = initial;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorKind::InvalidInput, "duplicate label in path system");
    }
    const int n = static_cast<int>(initial.size());
    for (int h : swaps)
        if (h < 1 || h > n - 1) fail(ErrorKind::InvalidInput, "path system swap height " + std::to_string(h) + " out of range");
    return PathSystem{std::move(initial), std::move(swaps)};
}

std::vector<Label> final_order(const PathSystem& L) {
    std::vector<Label> order = L.initial;
    for (int h : L.swaps) std::swap(order[h - 1], order[h]);
    return order;
}

PathSystem concat(const PathSystem& L1, const PathSystem& L2) {
    if (final_order(L1) != L2.initial) fail(ErrorKind::InvalidInput, "path systems do not match at the seam");
    PathSystem out = L1;
    out.swaps.insert(out.swaps.end(), L2.swaps.begin(), L2.swaps.end());
    return out;
}

PathSystem vflip(const PathSystem& L) {
    PathSystem out{std::vector<Label>(L.initial.rbegin(), L.initial.rend()), {}};
    const int n = static_cast<int>(L.n());
    for (int h : L.swaps) out.swaps.push_back(n - h);
    return out;
}

SwapPair cyclecat(const PathSystem& L) {
    if (final_order(L) != L.initial) fail(ErrorKind::InvalidInput, "path system ends in a different order than it starts");
    return validate_swap_pair(L.initial, L.swaps);
}

PathSystem u_block(const std::vector<Label>& order) {
    if (order.empty()) fail(ErrorKind::InvalidInput, "empty path system");
    PathSystem out{order, {}};
    for (int i = 2; i <= static_cast<int>(order.size()); ++i)
        for (int h = i - 1; h >= 1; --h) out.swaps.push_back(h);
    return out;
}

// ---------------------------------------------------------------- N-gons

Point2 rational_unit_point(double turns, double tolerance) {
    turns -= std::floor(turns);
    // Rotate into [-1/8, 1/8] and parametrize by tan of the half angle.
    const long q4 = std::lround(turns * 4);
    const int quarter = static_cast<int>(q4 % 4);
    const double rest = turns - static_cast<double>(q4) / 4.0;
    const double tan_half = std::tan(rest * std::numbers::pi);
    for (long den = 8;; den *= 2) {
        const Integer b(den);
        const Integer a(static_cast<long>(std::lround(tan_half * static_cast<double>(den))));
        const Integer c = a * a + b * b;
        Rational x = make_rational(b * b - a * a, c), y = make_rational(2 * a * b, c);
        const double got = std::atan2(y.get_d(), x.get_d()) / (2 * std::numbers::pi);
        if (std::abs(got - rest) <= tolerance) {
            for (int q = 0; q < quarter; ++q) {
                Rational t = -y;
                y = x;
                x = t;
            }
            return {x, y};
        }
        if (den > (1L << 40)) fail(ErrorKind::Internal, "no rational circle point within tolerance");
    }
}

std::vector<Direction> rational_circle_directions(size_t N, const Rational& max_deviation) {
    if (N == 0) fail(ErrorKind::InvalidInput, "rational_circle_directions needs N >= 1");
    const double dev = std::min(max_deviation.get_d(), 1.0 / (4.0 * static_cast<double>(N)));
    if (!(dev > 0)) fail(ErrorKind::InvalidInput, "maximum deviation must be positive");
    // Distinct offsets per index keep pairs away from being antipodal.
    const double step = dev / static_cast<double>(N + 1);
    std::vector<Direction> out;
    for (size_t t = 1; t <= N; ++t) {
        const double target = static_cast<double>(t) / static_cast<double>(N) - step * static_cast<double>(t);
        const Point2 p = rational_unit_point(target, step / 4);
        out.push_back(Direction::of(p.x, p.y));
    }
    for (size_t t = 0; t + 1 < out.size(); ++t)
        if (cmp_angle(out[t], out[t + 1]) >= 0) fail(ErrorKind::Internal, "circle directions are not increasing");
    for (size_t s = 0; s < out.size(); ++s)
        for (size_t t = s + 1; t < out.size(); ++t)
            if (out[s].dx() == -out[t].dx() && out[s].dy() == -out[t].dy())
                fail(ErrorKind::Internal, "circle directions contain an antipodal pair");
    return out;
}

namespace {

Arrangement nested_triangles(const SwapPair& sp, const Rational& r) {
    Arrangement arr;
    const std::vector<Point2> tri{{Rational(1), Rational(0)}, {Rational(-1), Rational(1)}, {Rational(-1), Rational(-1)}};
    for (size_t i = 0; i < sp.n(); ++i) {
        const Rational s = r + Rational(static_cast<long>(i + 1));
        std::vector<Point2> v;
        for (const auto& p : tri) v.push_back(s * p);
        arr.bodies.emplace(sp.rho[i], validate_polygon(v, true));
    }
    return arr;
}

}  // namespace

Arrangement realize_ngons(const SwapPair& sp, const RealizeOptions& options, int* retries_used) {
    validate_swap_pair(sp.rho, sp.sigma);
    if (options.radius_scale < 1) fail(ErrorKind::InvalidInput, "radius scale must be at least 1");
    const size_t N = sp.N();
    if (retries_used) *retries_used = 0;

    Rational r;
    if (N == 0) {
        r = options.radius_scale;
        return nested_triangles(sp, r);
    }
    // Fewer than three directions leave only nearly antipodal segments, so pad
    // with directions after the last swap that keep the final order.
    const size_t M = std::max<size_t>(N, 3);
    const double base = 1.0 / (1.0 - std::cos(2 * std::numbers::pi / static_cast<double>(M)));
    r = options.radius_scale * Rational(static_cast<long>(std::ceil(base))) * 2;
    Rational deviation = make_rational(1, Integer(static_cast<unsigned long>(4 * M)));

    // Rank of every label after each prefix of the sweep.
    std::vector<std::map<Label, long>> rank(M);
    {
        std::vector<Label> order = sp.rho;
        for (size_t t = 0; t < M; ++t) {
            if (t < N) std::swap(order[sp.sigma[t] - 1], order[sp.sigma[t]]);
            for (size_t i = 0; i < order.size(); ++i) rank[t][order[i]] = static_cast<long>(i + 1);
        }
    }

    for (int attempt = 0;; ++attempt) {
        const auto dirs = rational_circle_directions(M, deviation);
        std::vector<Point2> units;
        for (const auto& d : dirs) {
            const Rational len2 = Rational(d.dx() * d.dx() + d.dy() * d.dy());
            Integer len = sqrt(len2.get_num());
            units.push_back({make_rational(d.dx(), len), make_rational(d.dy(), len)});
        }
        Arrangement arr;
        for (const auto& l : sp.rho) {
            std::vector<Point2> v;
            for (size_t t = 0; t < M; ++t) v.push_back((r + Rational(rank[t][l])) * units[t]);
            arr.bodies.emplace(l, validate_polygon(v));
        }
        std::string why;
        try {
            if (equivalent(swap_pair_of(arr), sp)) return arr;
            why = "swept type differs";
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Genericity) throw;
            why = e.what();
        }
        if (attempt >= options.max_retries)
            fail(ErrorKind::Internal, "N-gon realization failed after " + std::to_string(attempt) + " retries: " + why);
        log(LogLevel::Info, "realize_ngons retry " + std::to_string(attempt + 1) + ": " + why);
        r *= 2;
        deviation /= 2;
        if (retries_used) *retries_used = attempt + 1;
    }
}

// ---------------------------------------------------------------- universality

SwapPair universal_dual(const std::vector<PathSystem>& systems) {
    const size_t k = systems.size();
    if (k < 2) fail(ErrorKind::InvalidInput, "universal_dual needs at least two path systems");
    const size_t n = systems[0].n();
    for (size_t i = 0; i < k; ++i) {
        const auto& L = systems[i];
        if (L.n() != n) fail(ErrorKind::InvalidInput, "path systems have different sizes");
        bool first = L.swaps.size() >= n - 1;
        for (size_t s = 0; s + 1 < n && first; ++s) first = L.swaps[s] == static_cast<int>(n - 1 - s);
        if (!first)
            fail(ErrorKind::InvalidInput,
                 "path system " + std::to_string(i + 1) + " does not start with its top path crossing all others");
    }
    for (size_t d = 1; d < k; ++d) {
        if (k % d) continue;
        bool periodic = true;
        for (size_t i = 0; i < k && periodic; ++i) periodic = systems[i] == systems[(i + d) % k];
        if (periodic) {
            log(LogLevel::Warn, "universal_dual: the cyclic sequence of path systems has period " + std::to_string(d));
            break;
        }
    }
    PathSystem T = systems[0];
    T = concat(T, u_block(final_order(T)));
    for (size_t i = 1; i < k; ++i) {
        T = concat(T, systems[i]);
        T = concat(T, u_block(final_order(T)));
    }
    const SwapPair sp = cyclecat(T);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (crossing_count(sp, sp.rho[a], sp.rho[b]) != 2 * k)
                fail(ErrorKind::Internal, "universal_dual: pair " + sp.rho[a] + "," + sp.rho[b] + " does not cross 2k times");
    return sp;
}

namespace {

// The 2k points a_1^1, a_1^n, ..., a_k^1, a_k^n in counter-clockwise order.
std::vector<Point2> base_points(size_t k, int attempt) {
    std::vector<Point2> a;
    if (k == 2) {
        // Rectangle: the lines through a_i^n and a_{i+1}^1 are parallel and bound a strip.
        a = {{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}, {Rational(-1), Rational(1)}, {Rational(-1), Rational(-1)}};
        return a;
    }
    const double kk = static_cast<double>(k);
    const double tol = 1.0 / (64.0 * kk * (attempt + 1));
    for (size_t i = 1; i <= k; ++i) {
        a.push_back(rational_unit_point(static_cast<double>(i) / kk - 1.0 / (8.0 * kk), tol));
        a.push_back(rational_unit_point(static_cast<double>(i) / kk + 1.0 / (8.0 * kk), tol));
    }
    const size_t m = a.size();
    for (size_t i = 0; i < m; ++i)
        if (orient(a[i], a[(i + 1) % m], a[(i + 2) % m]) <= 0) fail(ErrorKind::Internal, "base points not in convex position");
    // Apex b_i of the triangle beyond edge a_i^1 a_i^n lies outside that edge.
    auto intersect = [](const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
        const Point2 d1 = p2 - p1, d2 = q2 - q1;
        const Rational den = d1.x * d2.y - d1.y * d2.x;
        if (den == 0) fail(ErrorKind::Internal, "parallel boundary lines");
        const Rational s = ((q1.x - p1.x) * d2.y - (q1.y - p1.y) * d2.x) / den;
        return p1 + s * d1;
    };
    for (size_t i = 0; i < k; ++i) {
        const Point2& a1 = a[2 * i];
        const Point2& an = a[2 * i + 1];
        const Point2& prev_n = a[(2 * i + m - 1) % m];
        const Point2& next_1 = a[(2 * i + 2) % m];
        // l_{i-1} spans a_{i-1}^n and a_i^1; l_i spans a_i^n and a_{i+1}^1.
        const Point2 bi = intersect(prev_n, a1, an, next_1);
        if (orient(a1, an, bi) >= 0) fail(ErrorKind::Internal, "boundary lines do not close a triangle beyond a base edge");
    }
    return a;
}

struct Augmented {
    Point2 q1, qn;
};

// q^n near p^1 inside the sector between the rays to p^n and away from p^2;
// q^1 a little further towards p^n, pushed outwards.
Augmented augment(const PointSet& P, const Label& l1, const Label& l2, const Label& ln) {
    const Point2& p1 = P.at(l1);
    const Point2& p2 = P.at(l2);
    const Point2& pn = P.at(ln);
    const Point2 u = (pn - p1) + (p1 - p2);
    const Point2 e = p1 - pn;
    const Point2 w{e.y, -e.x};
    std::vector<Point2> pts;
    for (const auto& kv : P) pts.push_back(kv.second);
    Rational eps(1);
    for (int iter = 0; iter < 200; ++iter, eps /= 2) {
        const Point2 qn = p1 + eps * u;
        const Point2 q1 = qn + eps * (pn - qn) + (eps * eps) * w;
        bool ok = orient(pn, p1, q1) < 0 && orient(pn, p1, qn) < 0;
        for (size_t i = 0; i < pts.size() && ok; ++i)
            for (size_t j = i + 1; j < pts.size() && ok; ++j) {
                const int o1 = orient(pts[i], pts[j], q1), on = orient(pts[i], pts[j], qn), op = orient(pts[i], pts[j], p1);
                ok = o1 != 0 && o1 == on && (op == 0 || op == o1);
            }
        if (!ok) continue;
        // p^n, q^1, q^n, p^1 consecutive on the hull of Q.
        std::vector<Point2> q = pts;
        q.push_back(q1);
        q.push_back(qn);
        const Polygon hull = validate_polygon(q);
        const auto& hv = hull.vertices();
        const auto at = [&](const Point2& x) { return std::find(hv.begin(), hv.end(), x) - hv.begin(); };
        const long m = static_cast<long>(hv.size());
        const long i = at(pn);
        if (i == m || at(q1) != (i + 1) % m || at(qn) != (i + 2) % m || at(p1) != (i + 3) % m) continue;
        PointSet all = P;
        all["\x01q1"] = q1;
        all["\x01qn"] = qn;
        try {
            chirotope_of_points(all);
        } catch (const Error&) {
            continue;
        }
        return {q1, qn};
    }
    fail(ErrorKind::InvalidInput, "could not place the auxiliary points next to p^1");
}

}  // namespace

Arrangement universal_primal(const std::vector<PointSet>& point_sets) {
    const size_t k = point_sets.size();
    if (k < 2) fail(ErrorKind::InvalidInput, "universal_primal needs at least two point sets");
    std::vector<Label> labels;
    for (const auto& kv : point_sets[0]) labels.push_back(kv.first);
    const size_t n = labels.size();
    if (n < 3) fail(ErrorKind::InvalidInput, "universal_primal needs at least three points per set");
    for (const auto& P : point_sets) {
        std::vector<Label> l;
        for (const auto& kv : P) l.push_back(kv.first);
        if (l != labels) fail(ErrorKind::InvalidInput, "point sets have different label sets");
    }
    const Label& l1 = labels.front();
    const Label& l2 = labels[1];
    const Label& ln = labels.back();

    // Indexing convention and the dual reference in one go.
    std::vector<PathSystem> halves;
    for (const auto& P : point_sets) halves.push_back(firstpath_representation(P, l1));
    const SwapPair reference = universal_dual(halves);

    std::vector<Augmented> aug;
    for (const auto& P : point_sets) aug.push_back(augment(P, l1, l2, ln));

    for (int attempt = 0; attempt < 4; ++attempt) {
        const auto A0 = base_points(k, attempt);
        auto a1 = [&](size_t i) { return A0[2 * (i % k)]; };
        auto an = [&](size_t i) { return A0[2 * (i % k) + 1]; };
        std::map<Label, std::vector<Point2>> vertices;
        for (size_t i = 0; i < k; ++i) {
            const PointSet& P = point_sets[i];
            const std::array<Point2, 4> src{aug[i].qn, P.at(l1), P.at(ln), aug[i].q1};
            const std::array<Point2, 4> dst{an(i + k - 1), a1(i), an(i), a1(i + 1)};
            const ProjectiveMap phi = projective_from_correspondence(src, dst);
            std::vector<Point2> Q;
            for (const auto& kv : P) Q.push_back(kv.second);
            Q.push_back(aug[i].q1);
            Q.push_back(aug[i].qn);
            const int ws = sign(phi.weight(Q.front()));
            for (const auto& q : Q)
                if (sign(phi.weight(q)) != ws)
                    fail(ErrorKind::Internal, "projective map sends the hull of a point set across infinity");
            if (orient(aug[i].q1, aug[i].qn, P.at(l1)) !=
                orient(apply_projective(phi, aug[i].q1), apply_projective(phi, aug[i].qn), apply_projective(phi, P.at(l1))))
                fail(ErrorKind::Internal, "projective map reverses orientation");
            for (const auto& [l, p] : P) vertices[l].push_back(apply_projective(phi, p));
        }
        Arrangement arr;
        for (auto& [l, v] : vertices) arr.bodies.emplace(l, validate_polygon(v));
        try {
            const SwapPair got = swap_pair_of(arr);
            if (!equivalent(got, reference))
                fail(ErrorKind::Internal, "primal construction does not match the dual construction");
            return arr;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Genericity) throw;
            log(LogLevel::Info, std::string("universal_primal retry: ") + e.what());
        }
    }
    fail(ErrorKind::Genericity, "universal_primal could not find a generic placement");
}

}  // namespace cak

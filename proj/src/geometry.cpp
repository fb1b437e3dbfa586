#include "cak/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cak/combinatorics.hpp"
#include "cak/error.hpp"

namespace cak {

namespace {

std::string show(const Point2& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::string show(const Direction& d) { return "[" + d.dx().get_str() + "," + d.dy().get_str() + "]"; }

// Andrew's monotone chain; keeps only strict turns.
std::vector<Point2> hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point2> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

Polygon validate_polygon(const std::vector<Point2>& points, bool strict) {
    if (points.empty()) fail(ErrorKind::InvalidInput, "polygon has no vertices");
    Polygon poly;
    poly.vertices_ = hull(points);
    if (strict) {
        bool ok = poly.vertices_.size() == points.size();
        if (ok) {
            auto it = std::find(points.begin(), points.end(), poly.vertices_.front());
            std::vector<Point2> rotated(points.begin(), points.end());
            std::rotate(rotated.begin(), rotated.begin() + (it - points.begin()), rotated.end());
            ok = rotated == poly.vertices_;
        }
        if (!ok) fail(ErrorKind::InvalidInput, "polygon vertices are not strictly convex in counter-clockwise order");
    }
    return poly;
}

Rational support_value(const Polygon& polygon, const Direction& d) {
    const auto& v = polygon.vertices();
    Rational best = dot(d, v[0]);
    for (size_t i = 1; i < v.size(); ++i) {
        Rational s = dot(d, v[i]);
        if (s > best) best = std::move(s);
    }
    return best;
}

std::vector<size_t> support_argmax(const Polygon& polygon, const Direction& d) {
    const auto& v = polygon.vertices();
    const Rational best = support_value(polygon, d);
    std::vector<size_t> idx;
    for (size_t i = 0; i < v.size(); ++i)
        if (dot(d, v[i]) == best) idx.push_back(i);
    // An edge wrapping around the start is listed counter-clockwise.
    if (idx.size() == 2 && idx[0] == 0 && idx[1] == v.size() - 1 && v.size() > 2) std::swap(idx[0], idx[1]);
    return idx;
}

std::vector<Crossing> common_tangents(const Polygon& a, const Polygon& b, const Label& la, const Label& lb) {
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    for (const auto& p : va)
        for (const auto& q : vb)
            if (p == q)
                fail(ErrorKind::Genericity, "bodies " + la + " and " + lb + " share the vertex " + show(p),
                     "shared_vertex:" + la + "," + lb);

    std::vector<Crossing> out;
    auto neighbours = [](const std::vector<Point2>& v, size_t i) {
        std::vector<size_t> nb;
        if (v.size() >= 2) nb.push_back((i + 1) % v.size());
        if (v.size() >= 3) nb.push_back((i + v.size() - 1) % v.size());
        return nb;
    };
    // Line from vertex i of X to vertex j of Y with X and Y on its left.
    auto scan = [&](const std::vector<Point2>& vx, const std::vector<Point2>& vy, const Label& lx, const Label& ly) {
        for (size_t i = 0; i < vx.size(); ++i)
            for (size_t j = 0; j < vy.size(); ++j) {
                const Point2& p = vx[i];
                const Point2& q = vy[j];
                bool right = false;
                const Point2* on_line = nullptr;
                auto test = [&](const Point2& r) {
                    const int o = orient(p, q, r);
                    if (o < 0) right = true;
                    else if (o == 0) on_line = &r;
                };
                for (size_t k : neighbours(vx, i)) test(vx[k]);
                for (size_t k : neighbours(vy, j)) test(vy[k]);
                if (right) continue;
                if (on_line != nullptr)
                    fail(ErrorKind::Genericity,
                         "tangent of " + lx + " and " + ly + " through " + show(p) + " and " + show(q) +
                             " also touches " + show(*on_line),
                         "tangent:" + lx + "," + ly + ":" + show(p) + "," + show(q));
                const Point2 dq = q - p;
                out.push_back({lx, ly, Direction::of(dq.y, -dq.x)});
            }
    };
    scan(va, vb, la, lb);
    scan(vb, va, lb, la);
    return out;
}

SupportConfiguration support_configuration(const Arrangement& arrangement) {
    struct Event {
        Crossing c;
        Rational value;
    };
    std::vector<Event> events;
    for (auto i = arrangement.bodies.begin(); i != arrangement.bodies.end(); ++i)
        for (auto j = std::next(i); j != arrangement.bodies.end(); ++j)
            for (auto& c : common_tangents(i->second, j->second, i->first, j->first)) {
                Rational v = support_value(i->second, c.dir);
                events.push_back({std::move(c), std::move(v)});
            }
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
        const auto o = cmp_angle(x.c.dir, y.c.dir);
        if (o != 0) return o < 0;
        // Values are comparable only at the same primitive direction.
        return x.value < y.value;
    });
    for (size_t i = 0; i < events.size(); ++i)
        for (size_t j = i + 1; j < events.size() && cmp_angle(events[i].c.dir, events[j].c.dir) == 0; ++j) {
            const Crossing& x = events[i].c;
            const Crossing& y = events[j].c;
            const bool overlap = x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second;
            if (overlap || events[i].value == events[j].value)
                fail(ErrorKind::Genericity,
                     "three bodies share a tangent at normal " + show(x.dir) + " (" + x.first + "," + x.second + " and " +
                         y.first + "," + y.second + ")",
                     "shared_tangent:" + show(x.dir));
        }
    SupportConfiguration config;
    config.crossings.reserve(events.size());
    for (auto& e : events) config.crossings.push_back(std::move(e.c));
    return config;
}

SwapPair swap_pair_of(const Arrangement& arrangement) {
    return swap_pair_of(arrangement, support_configuration(arrangement));
}

SwapPair swap_pair_of(const Arrangement& arrangement, const SupportConfiguration& config) {
    if (arrangement.bodies.empty()) fail(ErrorKind::InvalidInput, "empty arrangement");
    // Order just after angle 0: value at (1,0), then the derivative, which is the
    // largest y among the maximizing vertices.
    struct Key {
        Label label;
        Rational value;
        Rational slope;
    };
    const Direction east(1, 0);
    std::vector<Key> keys;
    for (const auto& [label, poly] : arrangement.bodies) {
        Rational slope;
        bool first = true;
        for (size_t i : support_argmax(poly, east)) {
            if (first || poly.vertices()[i].y > slope) slope = poly.vertices()[i].y;
            first = false;
        }
        keys.push_back({label, support_value(poly, east), slope});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
        if (x.value != y.value) return x.value < y.value;
        return x.slope < y.slope;
    });
    for (size_t i = 0; i + 1 < keys.size(); ++i)
        if (keys[i].value == keys[i + 1].value && keys[i].slope == keys[i + 1].slope)
            fail(ErrorKind::Genericity, "bodies " + keys[i].label + " and " + keys[i + 1].label + " touch the same support point at angle 0",
                 "initial_tie:" + keys[i].label + "," + keys[i + 1].label);

    std::vector<Label> rho;
    for (auto& k : keys) rho.push_back(k.label);
    std::map<Label, size_t> pos;
    for (size_t i = 0; i < rho.size(); ++i) pos[rho[i]] = i;
    std::vector<Label> order = rho;
    std::vector<int> sigma;
    sigma.reserve(config.crossings.size());
    for (const auto& c : config.crossings) {
        const size_t lo = pos.at(c.second), hi = pos.at(c.first);
        if (hi != lo + 1)
            fail(ErrorKind::Genericity,
                 "crossing " + c.first + "," + c.second + " at " + show(c.dir) + " is between non-adjacent curves",
                 "non_adjacent:" + c.first + "," + c.second);
        std::swap(order[lo], order[hi]);
        pos[order[lo]] = lo;
        pos[order[hi]] = hi;
        sigma.push_back(static_cast<int>(lo + 1));
    }
    if (order != rho) fail(ErrorKind::Internal, "sweep does not return to its initial order");
    return validate_swap_pair(std::move(rho), std::move(sigma));
}

Chirotope vertex_chirotope(const Arrangement& arrangement) {
    std::map<Label, Point2> named;
    for (const auto& [label, poly] : arrangement.bodies)
        for (size_t i = 0; i < poly.size(); ++i) named.emplace(label + ":" + std::to_string(i + 1), poly.vertices()[i]);
    std::vector<Label> labels;
    for (const auto& kv : named) labels.push_back(kv.first);
    return Chirotope(labels, [&](const Label& a, const Label& b, const Label& c) {
        const int s = orient(named.at(a), named.at(b), named.at(c));
        if (s == 0)
            fail(ErrorKind::Genericity, "non-simple vertex order type: " + a + ", " + b + ", " + c + " are collinear",
                 "collinear:" + a + "," + b + "," + c);
        return s;
    });
}

double hausdorff_distance(const Arrangement& a, const Arrangement& b) {
    if (a.bodies.size() != b.bodies.size()) fail(ErrorKind::InvalidInput, "arrangements have different label sets");
    auto as_double = [](const Polygon& p) {
        std::vector<std::pair<double, double>> v;
        for (const auto& q : p.vertices()) v.emplace_back(q.x.get_d(), q.y.get_d());
        return v;
    };
    auto h = [](const std::vector<std::pair<double, double>>& v, double t) {
        const double c = std::cos(t), s = std::sin(t);
        double best = -INFINITY;
        for (const auto& [x, y] : v) best = std::max(best, c * x + s * y);
        return best;
    };
    auto normals = [](const std::vector<std::pair<double, double>>& v, std::vector<double>& out) {
        for (size_t i = 0; i < v.size() && v.size() >= 2; ++i) {
            const auto& p = v[i];
            const auto& q = v[(i + 1) % v.size()];
            out.push_back(std::atan2(-(q.first - p.first), q.second - p.second));
        }
    };
    double worst = 0;
    for (const auto& [label, pa] : a.bodies) {
        auto it = b.bodies.find(label);
        if (it == b.bodies.end()) fail(ErrorKind::InvalidInput, "label " + label + " missing from the second arrangement");
        const auto va = as_double(pa), vb = as_double(it->second);
        std::vector<double> angles;
        constexpr int samples = 720;
        for (int i = 0; i < samples; ++i) angles.push_back(2 * std::numbers::pi * i / samples);
        normals(va, angles);
        normals(vb, angles);
        // Between breakpoints the difference is <theta, p - q>, extremal along p - q.
        for (const auto& [px, py] : va)
            for (const auto& [qx, qy] : vb)
                if (px != qx || py != qy) {
                    angles.push_back(std::atan2(py - qy, px - qx));
                    angles.push_back(std::atan2(qy - py, qx - px));
                }
        for (double t : angles) worst = std::max(worst, std::abs(h(va, t) - h(vb, t)));
    }
    return worst;
}

}  // namespace cak

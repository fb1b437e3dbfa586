#pragma once

// Primal side: rational convex polygons, support values, common supporting
// tangents and the exact sweep that turns an arrangement into a swap pair.

#include <map>
#include <string>
#include <vector>

#include "cak/exact.hpp"
#include "cak/types.hpp"

namespace cak {

/// Convex polygon with vertices in counter-clockwise order. One vertex is a
/// point, two are a segment.
class Polygon {
public:
    const std::vector<Point2>& vertices() const { return vertices_; }
    size_t size() const { return vertices_.size(); }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    friend Polygon validate_polygon(const std::vector<Point2>& points, bool strict);
    std::vector<Point2> vertices_;
};

/// Convex hull of the points in counter-clockwise order, collinear and duplicate
/// points removed. With strict set, the input must already be a strictly convex
/// counter-clockwise polygon (up to the choice of starting vertex).
Polygon validate_polygon(const std::vector<Point2>& points, bool strict = false);

struct Arrangement {
    std::map<Label, Polygon> bodies;

    friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

struct Crossing {
    Label first;   // the tangent line meets this body first; its support curve crosses downward
    Label second;
    Direction dir;  // outward normal of the tangent line

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct SupportConfiguration {
    std::vector<Crossing> crossings;  // sweep order: angle, then support value

    friend bool operator==(const SupportConfiguration&, const SupportConfiguration&) = default;
};

Rational support_value(const Polygon& polygon, const Direction& d);

/// Indices of the vertices maximizing <d, .>: one vertex, or two for an edge
/// whose outward normal is d (listed counter-clockwise).
std::vector<size_t> support_argmax(const Polygon& polygon, const Direction& d);

/// All common supporting tangents of two bodies. Throws a genericity error when a
/// tangent line touches a third vertex or the bodies share a vertex.
std::vector<Crossing> common_tangents(const Polygon& a, const Polygon& b, const Label& la, const Label& lb);

SupportConfiguration support_configuration(const Arrangement& arrangement);

SwapPair swap_pair_of(const Arrangement& arrangement);

/// Same sweep as swap_pair_of, from an already computed configuration.
SwapPair swap_pair_of(const Arrangement& arrangement, const SupportConfiguration& config);

/// Order type of all vertices; vertex (label, i) is named "label:i" with i 1-based.
Chirotope vertex_chirotope(const Arrangement& arrangement);

/// Approximate max over labels of sup |h_A - h_B| (floating point).
double hausdorff_distance(const Arrangement& a, const Arrangement& b);

}  // namespace cak

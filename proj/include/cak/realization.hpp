#pragma once

// Constructive realizations: N-gon realization of a swap pair, path-system
// algebra and the two universality constructions (dual and primal).

#include <vector>

#include "cak/exact.hpp"
#include "cak/geometry.hpp"
#include "cak/order_types.hpp"
#include "cak/types.hpp"

namespace cak {

// ---------------------------------------------------------------- path systems

PathSystem validate_path_system(std::vector<Label> initial, std::vector<int> swaps);

std::vector<Label> final_order(const PathSystem& L);

/// L2 must start in the final order of L1.
PathSystem concat(const PathSystem& L1, const PathSystem& L2);

PathSystem vflip(const PathSystem& L);

/// Closes L into a cylinder; the final order must equal the initial one.
SwapPair cyclecat(const PathSystem& L);

/// Full reversal where each path, from the bottom up, crosses every path below it.
PathSystem u_block(const std::vector<Label>& order);

// ---------------------------------------------------------------- N-gons

struct RealizeOptions {
    Rational radius_scale = 1;  // multiplier on the base radius, at least 1
    int max_retries = 3;
};

/// N directions on the rational unit circle, strictly increasing in angle, the
/// t-th within maxDeviation turns below t/N. No two are antipodal.
std::vector<Direction> rational_circle_directions(size_t N, const Rational& max_deviation);

/// A point exactly on the unit circle whose angle is within `tolerance` turns of `turns`.
Point2 rational_unit_point(double turns, double tolerance);

/// Arrangement of N-gons with the combinatorial type of sp, verified exactly.
/// `retries_used` receives the number of radius escalations.
Arrangement realize_ngons(const SwapPair& sp, const RealizeOptions& options = {}, int* retries_used = nullptr);

// ---------------------------------------------------------------- universality

/// cyclecat(L1 U L2 U ... Lk U). Every L_i starts with its first path on top
/// crossing all others. Every pair of the result crosses 2k times.
SwapPair universal_dual(const std::vector<PathSystem>& systems);

/// Primal construction: k-gons A^s = conv(a_1^s, ..., a_k^s) from point sets
/// that share one label set. In each set the smallest label is p^1, the largest
/// p^n, and the rays from p^1 to the others are counter-clockwise in label order.
/// The result is checked against universal_dual of the first-path wiring diagrams.
Arrangement universal_primal(const std::vector<PointSet>& point_sets);

}  // namespace cak

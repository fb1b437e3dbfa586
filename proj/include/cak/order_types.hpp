#pragma once

// Orientability, triple orientations, chirotopes and Knuth's CC axioms, plus
// the point-set wiring diagrams used by the universality constructions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cak/exact.hpp"
#include "cak/types.hpp"

namespace cak {

enum class TripleType { Positive, Negative, NonOrientable };

std::string_view to_string(TripleType t);

/// Orientation of the subsystem on {i, j, k}. Positive when the topmost arcs,
/// read with increasing angle, come in the cyclic order (i, j, k).
TripleType triple_type(const SwapPair& sp, const Label& i, const Label& j, const Label& k);

/// Throws Inconsistent naming the first non-orientable triple.
Chirotope chirotope_of(const SwapPair& sp);

struct CCResult {
    bool ok = true;
    std::string axiom;           // empty when ok
    std::vector<Label> witness;  // the offending tuple
};

CCResult cc_check(const Chirotope& chi);

using PointSet = std::map<Label, Point2>;

Chirotope chirotope_of_points(const PointSet& points);

/// Half-turn wiring diagram of the dual line arrangement, one swap per pair.
PathSystem allowable_sequence(const PointSet& points);

/// Wiring diagram of the points whose distinguished path starts on top and
/// crosses all others first. The other labels, in string order, must be the
/// counter-clockwise order of the rays from the distinguished point.
PathSystem firstpath_representation(const PointSet& points, const Label& distinguished);

/// Swap pair of L followed by its vertical flip.
SwapPair swap_pair_from_half(const PathSystem& half);

}  // namespace cak

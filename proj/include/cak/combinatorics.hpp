#pragma once

// Swap pairs, incidence sequences, tableaux of local sequences, bumping,
// canonical forms, layers, periodicity and standard configurations.

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cak/exact.hpp"
#include "cak/types.hpp"

namespace cak {

// ---------------------------------------------------------------- swap pairs

SwapPair validate_swap_pair(std::vector<Label> rho, std::vector<int> sigma);

/// Bottom-to-top order after applying the first `steps` transpositions.
std::vector<Label> order_after(const SwapPair& sp, size_t steps);

std::vector<IncidencePair> incidence_sequence(const SwapPair& sp);

SwapPair cyclic_shift(const SwapPair& sp);

/// Swaps sigma entries i and i+1 (1-based); requires their heights to differ by more than one.
SwapPair independent_transposition(const SwapPair& sp, size_t i);

/// Restriction to a label subset; crossings with outside labels are dropped.
SwapPair restrict(const SwapPair& sp, const std::set<Label>& subset);

size_t crossing_count(const SwapPair& sp, const Label& i, const Label& j);

struct Layers {
    std::vector<std::vector<Label>> partition;  // each class sorted; classes sorted by first label
    size_t depth = 0;                           // classes with more than one label
};

Layers layers(const SwapPair& sp);

// ---------------------------------------------------------------- tableaux

Tableau tableau_of(const SwapPair& sp);

/// Mutually-first pairs, listed bottom to top by the lower row. Throws
/// Inconsistent when a mutually-first pair is not row-adjacent.
std::vector<std::pair<Label, Label>> adjacent_pairs(const Tableau& t);

Tableau bump(const Tableau& t, const Label& j, const Label& k);

/// Rebuilds a swap pair whose tableau is t; throws Inconsistent otherwise.
SwapPair swap_pair_of(const Tableau& t);

struct Periodicity {
    size_t p = 1;
    Tableau period;
};

Periodicity periodicity(const Tableau& t);

/// Row-wise concatenation; both tableaux must share the row order.
Tableau concat_rows(const Tableau& a, const Tableau& b);

/// Lexicographic order: row order as a label sequence, then rows concatenated in row order.
bool tableau_less(const Tableau& a, const Tableau& b);

struct CombinatorialType {
    Tableau canonical;
    Layers layers;
    size_t periodicity = 1;

    friend bool operator==(const CombinatorialType& a, const CombinatorialType& b) {
        return a.canonical == b.canonical;
    }
};

/// Every tableau reachable from t by bumps, including t.
std::vector<Tableau> bump_closure(const Tableau& t);

/// First tableau of the bump class of t, in breadth-first order, accepted by `accept`.
std::optional<Tableau> find_in_closure(const Tableau& t, const std::function<bool(const Tableau&)>& accept);

CombinatorialType canonical_form(const Tableau& t);
CombinatorialType canonical_form(const SwapPair& sp);

/// True iff the two swap pairs have the same combinatorial type. Throws on a label-set mismatch.
bool equivalent(const SwapPair& a, const SwapPair& b);

// ---------------------------------------------------------------- configurations

struct AbstractCrossing {
    Label first;
    Label second;
    Turn angle;

    friend bool operator==(const AbstractCrossing&, const AbstractCrossing&) = default;
};

struct AbstractConfiguration {
    /// Bottom-to-top stacking of all labels at turn 0+. Only the relative order of
    /// layers and isolated labels is read from it; the order inside a layer is
    /// reconstructed from the crossings.
    std::vector<Label> labels;
    std::vector<AbstractCrossing> crossings;  // sorted by angle, ties in list order

    friend bool operator==(const AbstractConfiguration&, const AbstractConfiguration&) = default;
};

/// Standard configuration W(type, theta, 1/N) built independently per layer.
AbstractConfiguration standard_configuration(const CombinatorialType& type, const Turn& theta);

SwapPair abstract_swap_pair(const AbstractConfiguration& config);

// ---------------------------------------------------------------- enumeration

struct EnumerateOptions {
    std::optional<size_t> pair_crossings;  // keep only types where every pair crosses this often
    unsigned jobs = 1;
};

/// All combinatorial types on labels "1".."n" with exactly N crossings (n <= 4, N <= 12).
std::vector<CombinatorialType> enumerate_canonical(size_t n, size_t N, const EnumerateOptions& options = {});

}  // namespace cak

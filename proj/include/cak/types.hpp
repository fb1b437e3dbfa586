#pragma once

// Value types shared by the combinatorial modules.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cak {

using Label = std::string;

/// Initial bottom-to-top order plus the heights (1-based) of the adjacent
/// transpositions of one full sweep. Construct through validate_swap_pair.
struct SwapPair {
    std::vector<Label> rho;
    std::vector<int> sigma;

    size_t n() const { return rho.size(); }
    size_t N() const { return sigma.size(); }

    friend bool operator==(const SwapPair&, const SwapPair&) = default;
};

/// The ordered pair transposed by one swap: `upper` moves down past `lower`.
struct IncidencePair {
    Label upper;
    Label lower;

    friend bool operator==(const IncidencePair&, const IncidencePair&) = default;
};

/// Local sequences (rows) with the rows ordered bottom to top.
struct Tableau {
    std::vector<Label> order;
    std::map<Label, std::vector<Label>> rows;

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Wiring diagram over an interval: initial bottom-to-top order and the
/// heights of its adjacent transpositions from left to right.
struct PathSystem {
    std::vector<Label> initial;
    std::vector<int> swaps;

    size_t n() const { return initial.size(); }

    friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

/// Alternating sign map on ordered triples of distinct labels, all signs nonzero.
class Chirotope {
public:
    Chirotope() = default;
    /// `sign_of` is called once per sorted triple a < b < c and must return +1 or -1.
    Chirotope(std::vector<Label> labels, const std::function<int(const Label&, const Label&, const Label&)>& sign_of);

    const std::vector<Label>& labels() const { return labels_; }
    size_t size() const { return labels_.size(); }

    int sign(const Label& a, const Label& b, const Label& c) const;
    /// Index-based access into labels(); indices must be distinct.
    int sign_at(size_t i, size_t j, size_t k) const;
    void set_sign_sorted(size_t i, size_t j, size_t k, int s);

    friend bool operator==(const Chirotope&, const Chirotope&) = default;

private:
    size_t index_of(const Label& l) const;
    size_t slot(size_t i, size_t j, size_t k) const;  // i < j < k

    std::vector<Label> labels_;  // sorted
    std::vector<int8_t> signs_;
};

}  // namespace cak

#pragma once

// Generated by tools/gen_nonpappus.py; do not edit.
// A perturbed Pappus configuration, its wiring diagram, and the same diagram
// with the triangle of the Pappus line C1 C2 C3 flipped. The flipped order type
// is not realizable by points; `kNonPappusCertificate` lists weighted strict
// inequalities from 3-term Grassmann-Pluecker relations that sum to zero.

#include <array>
#include <vector>

namespace fixtures {

struct NamedPoint {
    const char* label;
    const char* x;
    const char* y;
};

inline const std::vector<NamedPoint> kPappusPerturbed{
    {"A1", "11/5000", "-257/50000"},
    {"A2", "12489/6250", "57/50000"},
    {"A3", "124967/25000", "-143/50000"},
    {"B1", "3116/3125", "99909/25000"},
    {"B2", "150029/50000", "200171/50000"},
    {"B3", "350073/50000", "24977/6250"},
    {"C1", "75001/50000", "25119/12500"},
    {"C2", "874637/275000", "994269/550000"},
    {"C3", "290203/70000", "603381/350000"},
};

inline const std::vector<const char*> kNonPappusInitial{"A1", "B1", "C1", "A2", "B2", "C2", "C3", "A3", "B3"};
inline const std::vector<int> kPappusSwaps{5, 3, 2, 3, 7, 6, 7, 4, 5, 4, 6, 3, 4, 5, 4, 8, 2, 7, 1, 2, 8, 6, 3, 4, 5, 4, 3, 2, 3, 7, 6, 7, 4, 1, 5, 8};
inline const std::vector<int> kNonPappusSwaps{5, 3, 2, 3, 7, 6, 7, 4, 5, 4, 6, 3, 5, 4, 5, 8, 2, 7, 1, 2, 8, 6, 3, 4, 5, 4, 3, 2, 3, 7, 6, 7, 4, 1, 5, 8};

// Relation [a b c][a d e] - [a b d][a c e] + [a b e][a c d] = 0 on (a, b, c, d, e);
// term `big` has the sign opposite to the other two, so |big| > |small|.
struct GpInequality {
    std::array<const char*, 5> labels;
    int big;
    int small;
    long weight;
};

inline const std::vector<GpInequality> kNonPappusCertificate{
    {{"A1", "A3", "B2", "C1", "C3"}, 0, 1, 1},
    {{"A1", "B2", "B3", "C1", "C3"}, 2, 0, 1},
    {{"A1", "B3", "C1", "C2", "C3"}, 2, 0, 1},
    {{"A2", "A1", "A3", "C1", "C3"}, 1, 2, 1},
    {{"A3", "A2", "B2", "C2", "C3"}, 0, 2, 1},
    {{"A3", "B1", "B2", "C2", "C3"}, 2, 0, 1},
    {{"A3", "B1", "C1", "C2", "C3"}, 0, 2, 1},
    {{"B1", "B2", "B3", "C2", "C3"}, 2, 1, 1},
    {{"B2", "A1", "A3", "B1", "C1"}, 1, 0, 1},
    {{"B2", "A1", "B1", "B3", "C2"}, 1, 0, 1},
    {{"B2", "A2", "A3", "B1", "C3"}, 2, 0, 1},
    {{"B3", "B1", "B2", "C2", "C3"}, 2, 1, 1},
    {{"C1", "A1", "A2", "A3", "B1"}, 2, 0, 1},
    {{"C1", "A1", "A3", "B1", "B2"}, 0, 1, 1},
    {{"C2", "A1", "B3", "C1", "C3"}, 2, 1, 1},
    {{"C2", "A3", "B2", "C1", "C3"}, 1, 2, 1},
    {{"C2", "B2", "B3", "C1", "C3"}, 1, 2, 1},
    {{"C3", "A1", "A2", "B2", "B3"}, 0, 2, 1},
};

}  // namespace fixtures

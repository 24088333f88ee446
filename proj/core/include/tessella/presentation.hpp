#pragma once

#include <array>
#include <string>
#include <vector>

#include "tessella/word.hpp"

namespace tessella {

// Triangle group *p'q'r' = <P,Q,R | P^2, Q^2, R^2, (QR)^p', (RP)^q', (PQ)^r'>.
// Corner A (angle pi/p') lies on Q and R, B (pi/q') on R and P, C (pi/r')
// on P and Q; each mirror is named for the corner it misses.
struct Presentation {
    int p = 2, q = 2, r = 2;

    // Order of the product of the two letters other than `l`.
    int order_opposite(Letter l) const { return l == Letter::P ? p : l == Letter::Q ? q : r; }
    // Order of (a b) for distinct letters a, b.
    int order(Letter a, Letter b) const;

    std::vector<Word> relators() const;          // the three rotation relators
    int relator_length_sum() const;              // including the three squares
    std::string name() const;                    // "*632"

    bool operator==(const Presentation&) const = default;
};

Presentation build_triangle_group(int p, int q, int r);

struct SubgroupSpec {
    Presentation parent;
    std::vector<Word> generators;
};

}  // namespace tessella

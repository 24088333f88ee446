#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tessella/presentation.hpp"
#include "tessella/word.hpp"

namespace tessella {

// Homomorphism from the triangle group to (Z/2)^k given by one bitmask per
// letter. Its kernel is the subgroup used as "H" (full or chiral symmetry).
struct ParityMap {
    std::array<std::uint8_t, 3> masks{0, 0, 0};

    static ParityMap trivial() { return {}; }
    std::uint8_t of(Letter l) const { return masks[index(l)]; }
    std::uint8_t of(const Word& w) const;
    bool in_kernel(const Word& w) const { return of(w) == 0; }
    bool is_trivial() const { return masks == std::array<std::uint8_t, 3>{0, 0, 0}; }
    // Size of the image, i.e. the index of the kernel.
    int image_size() const;
    // Whether the map is consistent with the relators of `pres`.
    bool respects(const Presentation& pres) const;
    ParityMap with_extra_bit(std::array<bool, 3> bit) const;

    bool operator==(const ParityMap&) const = default;
};

// Right action of P, Q, R on the cosets of a subgroup. Row 0 is the subgroup.
class CosetTable {
public:
    using Row = std::array<std::int32_t, 3>;

    CosetTable() = default;
    CosetTable(Presentation pres, std::vector<Row> rows, std::vector<Word> gens = {});

    // Table of the kernel of `map` (rows = image elements, BFS order).
    static CosetTable from_parity(const Presentation& pres, const ParityMap& map);

    const Presentation& presentation() const { return pres_; }
    const std::vector<Word>& generators() const { return gens_; }
    void set_generators(std::vector<Word> gens) { gens_ = std::move(gens); }

    int size() const { return static_cast<int>(rows_.size()); }
    int act(int row, Letter l) const { return rows_[row][index(l)]; }
    int act(int row, const Word& w) const;
    bool contains(const Word& w) const { return act(0, w) == 0; }
    const std::vector<Row>& rows() const { return rows_; }

    // Shortest word (BFS, letter order P,Q,R) from row 0 to every row.
    std::vector<Word> transversal() const;
    // Schreier generators of the stabilizer of row 0, freely reduced, deduplicated.
    std::vector<Word> schreier_generators() const;
    // A short generating set: Schreier generators greedily pruned while the
    // generated subgroup keeps the same index.
    std::vector<Word> minimal_generators() const;

    // Renumber rows in BFS order from row 0 (letter order P,Q,R).
    CosetTable standardized() const;

    // Empty string when the table is a valid transitive permutation action
    // satisfying all relators with every generator fixing row 0.
    std::string validate() const;

    bool operator==(const CosetTable& o) const { return pres_ == o.pres_ && rows_ == o.rows_; }

private:
    Presentation pres_;
    std::vector<Row> rows_;
    std::vector<Word> gens_;
};

int act(const CosetTable& t, int row, const Word& w);
bool contains(const CosetTable& t, const Word& w);

// Orbits of rows under the given words; each orbit sorted, orbits ordered by
// smallest member.
std::vector<std::vector<int>> suborbits(const CosetTable& t, const std::vector<Word>& gens);

// Todd-Coxeter (HLT with coincidences).
std::size_t default_max_cosets(const Presentation& pres, std::size_t expected_index);
CosetTable coset_enumerate(const SubgroupSpec& sub, std::size_t max_cosets = 2'000'000);

struct LowIndexOptions {
    // Kernel of this map is the ambient subgroup H; results are J <= H.
    ParityMap ambient{};
    // Only return subgroups with [H:J] exactly this (else all <= max_index).
    bool exact = false;
    std::size_t max_nodes = 50'000'000;
};

// All subgroups J of the ambient subgroup with [H:J] <= max_index whose
// stabilizer contains every forced word. Tables describe J in the full
// triangle group (size = [H:J] * [G:H]); distinct subgroups, not conjugacy
// classes.
std::vector<CosetTable> low_index_subgroups(const Presentation& pres, int max_index,
                                            const std::vector<Word>& forced,
                                            const LowIndexOptions& opt = {});

}  // namespace tessella

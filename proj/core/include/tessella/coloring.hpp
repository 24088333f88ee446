#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tessella/catalog.hpp"
#include "tessella/coset_table.hpp"

namespace tessella {

// One orbit of tiles under H. When H has index 2 in G a G-orbit either stays
// whole or splits into two classes (coset_class 0 and 1).
struct HOrbit {
    int index = 0;
    int orbit = 0;        // TileOrbitSpec it refines
    int coset_class = 0;
    Word representative;  // maps the seed tile of `orbit` into this class
    std::vector<Word> stabilizer_words;  // generate Stab_H(representative tile)
    std::string name;
};

// Everything about (instance, mode) that enumeration and lookups share.
struct ColoringContext {
    TilingInstance inst;
    Mode mode = Mode::Full;
    ParityMap h;               // H = kernel
    bool h_is_g = true;
    Word odd;                  // some word of G outside H (when h_is_g is false)
    std::vector<HOrbit> horbits;
    std::vector<std::array<int, 2>> class_of;  // [orbit][class] -> H-orbit
    std::vector<bool> split;
    std::vector<Word> odd_stabilizer;          // per orbit, when not split
    std::vector<Word> vertex_classes;          // H\G/Stab(v0) representatives
    std::vector<Word> h_generators;

    // Tile x.t_j written as h.(representative tile) with h in H.
    struct Placement {
        int horbit;
        Word h;
    };
    Placement place(int orbit, const Word& x) const;
    // Placements of the corona tiles of each vertex class.
    std::vector<std::vector<Placement>> vertex_coronas;
};

std::shared_ptr<const ColoringContext> coloring_context(const TilingInstance& inst, Mode mode);
std::vector<HOrbit> h_orbits(const TilingInstance& inst, Mode mode);

// Colors of one group of H-orbits: the cosets of J (rows of `table` lying in
// H) indexed from `base`. Member k's representative tile sits at row rows[k].
struct ColorGroup {
    std::vector<int> members;
    CosetTable table;
    std::vector<int> rows;
    int index = 0;  // [H:J]
    int base = 0;
    std::vector<int> color_of_row;  // -1 for rows outside H

    int color(int member, const Word& h) const { return color_of_row[table.act(rows[member], h.inverse())]; }
};

class ColoringScheme {
public:
    std::shared_ptr<const ColoringContext> ctx;
    std::vector<ColorGroup> groups;
    int m = 0;

    int color_of(int orbit, const Word& x) const;
    // Canonical: equal keys iff equal tile partitions.
    const std::vector<int>& key() const { return key_; }
    std::string serialize() const;
    // Generators of each J (minimal, for display).
    std::vector<std::vector<Word>> subgroup_generators() const;

    // Re-root every group at its anchor, standardize, and rebuild the key.
    void canonicalize();

private:
    std::vector<int> key_;
    std::vector<int> group_of_;  // H-orbit -> (group, member) packed as group * 64 + member
};

struct EnumerateOptions {
    bool precise_only = false;
    // No group may mix tiles of different G-orbits.
    bool no_shared_orbit_colors = false;
    std::size_t max_nodes = 50'000'000;
};

// Distinct colorings with m colors whose classes H permutes, sorted by key.
std::vector<ColoringScheme> enumerate_colorings(const TilingInstance& inst, Mode mode, int m,
                                                const EnumerateOptions& opt = {});

bool is_precise(const ColoringScheme& s);

// A coloring given the way the paper writes one: per group, representative
// tiles (orbit, word) and generators of J.
struct GroupSpec {
    std::vector<std::pair<int, Word>> tiles;
    std::vector<Word> subgroup;
};
ColoringScheme scheme_from_subgroups(const TilingInstance& inst, Mode mode, const std::vector<GroupSpec>& groups);

}  // namespace tessella

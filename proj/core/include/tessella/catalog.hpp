#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tessella/coset_table.hpp"
#include "tessella/presentation.hpp"
#include "tessella/word.hpp"

namespace tessella {

enum class Family { ThreeValent, Quasi, Rhombi, Snub5, Hex6Eq, Hex6Neq };
enum class Geometry { Spherical, Euclidean, Hyperbolic };
enum class Mode { Full, Chiral };

std::string_view family_name(Family f);   // CLI key: "quasi", "3val", ...
std::optional<Family> family_from_name(std::string_view s);
std::string_view geometry_name(Geometry g);

struct TileOrbitSpec {
    std::string name;
    int gon = 0;
    std::vector<Word> stabilizer;
    Word rep_anchor;  // seed tiles are built in place, so this is the identity
};

struct CoronaEntry {
    int orbit = 0;
    Word word;
};

struct TilingInstance {
    Family family = Family::Quasi;
    std::vector<int> params;  // as given on the command line
    std::vector<int> config;  // vertex configuration, corona order
    Presentation ambient;
    ParityMap full;           // G = kernel
    ParityMap chiral;         // orientation-preserving part of G
    bool full_is_words = true;
    std::vector<TileOrbitSpec> orbits;
    std::vector<CoronaEntry> corona;
    std::vector<Word> vertex_stabilizer;
    Geometry geometry = Geometry::Euclidean;

    // Generator point: lies on these mirrors, and the edges v0 -> w v0 for
    // the listed words all have the same length.
    std::vector<Letter> point_mirrors;
    std::vector<Word> edge_words;

    int valency() const { return static_cast<int>(corona.size()); }
    std::string label() const;  // "(3.3.6.3.12)"
    std::string spec() const;   // "snub5:6,12"
    bool in_G(const Word& w) const { return full.in_kernel(w); }
    bool in_H(const Word& w, Mode m) const {
        return m == Mode::Full ? full.in_kernel(w) : chiral.in_kernel(w);
    }
    const ParityMap& h_map(Mode m) const { return m == Mode::Full ? full : chiral; }
};

// Throws InvalidArgument for parameters outside the family's range.
TilingInstance instantiate(Family family, const std::vector<int>& params);
// "quasi:6,4", "3val:4,6,12", ...
TilingInstance parse_instance(std::string_view spec);

Geometry classify_geometry(const std::vector<int>& config);
Geometry classify_triangle(const Presentation& pres);
std::string dot_notation(const std::vector<int>& config);

// Closed-form counts of perfect (or chirally perfect) precise colorings with
// as many colors as the valency. `mode` must be Chiral only for SNUB5 p = q.
int expected_count(Family family, const std::vector<int>& params, Mode mode);
// Which clauses of the relevant proposition fire literally (before resolving
// overlaps); each entry is (count, clause id).
std::vector<std::pair<int, std::string>> fired_clauses(Family family, const std::vector<int>& params,
                                                       Mode mode);

}  // namespace tessella

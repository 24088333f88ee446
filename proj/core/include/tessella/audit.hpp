#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tessella/coloring.hpp"
#include "tessella/patch.hpp"

namespace tessella {

enum class Perfection { Perfect, ChirallyPerfect };

// An orientation-reversing symmetry of the tiling outside H, if there is
// one: a word of G \ H, or for SNUB5 with p = q (whose mirrors are not
// mirrors of the triangle group) the reflection in an edge shared by two
// triangles.
std::optional<Mat3> reversing_symmetry(const ColoringContext& ctx, const Patch& patch);

// Tile i of the patch goes to image[i] under m (-1 when it leaves the patch).
std::vector<int> tile_images(const Patch& patch, const Mat3& m);

std::vector<int> patch_colors(const ColoringScheme& s, const Patch& patch);

// Perfect iff the reversing symmetry maps color classes onto color classes.
Perfection classify(const ColoringScheme& s, const Patch& patch);

struct AuditReport {
    std::vector<std::string> violations;
    int colors_seen = 0;
    bool ok() const { return violations.empty(); }
};

// Brute-force re-derivation on the patch: distinct colors around every
// complete vertex, and each generator of H permutes the colors.
AuditReport patch_audit(const ColoringScheme& s, const Patch& patch);
AuditReport patch_audit(const Patch& patch, const std::vector<int>& colors, const std::vector<Mat3>& h_generators,
                        int m);

// Number of classes of the schemes under their mirror images (schemes whose
// mirror image is not among them count on their own).
int count_up_to_mirror(const std::vector<ColoringScheme>& schemes, const Patch& patch, const Mat3& mirror);

struct VerifyRow {
    std::vector<int> params;
    std::string label;
    int enumerated = -1;
    int expected = -1;
    std::string error;
    bool pass() const { return error.empty() && enumerated == expected; }
};

// Number of perfect (Full) or chirally perfect (Chiral) precise colorings
// with as many colors as the valency, counted as the propositions count them.
int count_precise_colorings(const TilingInstance& inst, Mode mode);

std::vector<VerifyRow> verify_proposition(Family family, const std::vector<std::vector<int>>& cells, Mode mode,
                                          unsigned threads = 0);

}  // namespace tessella

#pragma once

#include <string>
#include <vector>

#include "tessella/catalog.hpp"
#include <memory>
#include "tessella/geometry.hpp"

namespace tessella {

struct SeedTile {
    std::vector<Vec3> polygon;       // ccw
    std::vector<Word> vertex_words;  // polygon[i] = matrix(vertex_words[i]) * v0
    Vec3 center;
};

// Everything needed to place tiles: mirrors (recentred so v0 is the chart
// origin), the generator point and the seed tiles of each orbit.
struct Realization {
    TilingInstance inst;
    MirrorSystem ms;
    Vec3 v0;
    PointSolve solve;
    std::vector<SeedTile> seeds;
    double edge_length = 0;

    Mat3 matrix(const Word& w) const { return ms.matrix(w); }
};

Realization realize(const TilingInstance& inst);

struct PatchTile {
    int orbit = 0;
    Word word;
    Mat3 matrix;
    Vec3 center;
    std::vector<Vec3> polygon;
    std::vector<int> vertices;  // indices into Patch::vertices, ccw
    int ring = 0;
};

struct PatchVertex {
    Vec3 point;
    std::vector<int> tiles;  // ccw around the vertex
    bool complete = false;   // all k incident tiles present
};

struct Patch {
    const Realization* real = nullptr;
    int radius = 0;
    std::vector<PatchTile> tiles;
    std::vector<PatchVertex> vertices;

    // Index of the tile with this center, or -1.
    int find_tile(const Vec3& center) const;
    int find_vertex(const Vec3& point) const;
    const ModelSpace& model() const { return real->ms.model; }

    // hashed lookup of centres / vertices
    struct Index;
    std::shared_ptr<Index> tile_index, vertex_index;
};

Patch realize_patch(const Realization& real, int radius);

// Text export, one tile per line.
std::string export_patch(const Patch& patch);

struct ValidationReport {
    std::vector<std::string> failures;
    double relator_residual = 0;
    double edge_spread = 0;  // (max - min) / mean over all patch edges
    int newton_iterations = 0;
    bool ok() const { return failures.empty(); }
};

// Checks the catalog constants against the geometry; `full_override`
// replaces the full-symmetry parity map for check (d) (negative controls).
ValidationReport validate_realization(const TilingInstance& inst,
                                      const ParityMap* full_override = nullptr);

// Whether an isometry maps the patch onto itself, tested on every tile whose
// image lands well inside the patch. Returns false when any such tile's
// image is not a tile; `tested` receives the number of tiles checked.
bool maps_patch_to_itself(const Patch& patch, const Mat3& m, int* tested = nullptr);

// The geometric faces around v0, ccw, as (gon, center).
std::vector<std::pair<int, Vec3>> faces_at_seed(const Realization& real);

}  // namespace tessella

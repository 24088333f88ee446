#pragma once
// Shared helpers for the unit and acceptance tests.
#include <algorithm>
#include <string>
#include <vector>

#include "oracles/planar_map.hpp"
#include "tessella/errors.hpp"
#include "tessella/patch.hpp"

namespace support {

// Every catalog instance with parameters in [lo, hi] (3val sizes up to 2*hi).
inline std::vector<tessella::TilingInstance> catalog(int lo, int hi) {
    using namespace tessella;
    std::vector<TilingInstance> out;
    auto add = [&](Family f, std::vector<int> v) {
        try {
            out.push_back(instantiate(f, v));
        } catch (const InvalidArgument&) {
        }
    };
    for (int p = lo; p <= hi; ++p) {
        add(Family::Hex6Eq, {p});
        for (int q = lo; q <= hi; ++q) {
            add(Family::Quasi, {p, q});
            add(Family::Rhombi, {p, q});
            add(Family::Snub5, {p, q});
            add(Family::Hex6Neq, {p, q});
        }
    }
    // (a.b.c) up to order and (q.2p.2p)
    for (int a = 4; a <= 2 * hi; a += 2)
        for (int b = a + 2; b <= 2 * hi; b += 2)
            for (int c = b + 2; c <= 2 * hi; c += 2) add(Family::ThreeValent, {a, b, c});
    for (int q = lo; q <= hi; ++q)
        for (int tp = 4; tp <= 2 * hi; tp += 2)
            add(Family::ThreeValent, {q, tp, tp});
    return out;
}

// Rotation system of a realized patch (tiles ccw around each vertex).
inline oracle::Rotation patch_rotation(const tessella::Patch& patch) {
    oracle::Rotation r;
    for (const auto& t : patch.tiles) r.face_size.push_back(static_cast<int>(t.vertices.size()));
    for (const auto& v : patch.vertices) {
        r.complete.push_back(v.complete);
        std::vector<int> nb, fc;
        if (v.complete) {
            const int id = static_cast<int>(r.nb.size());
            for (int t : v.tiles) {
                const auto& vs = patch.tiles[t].vertices;
                const int n = static_cast<int>(vs.size());
                int p = static_cast<int>(std::find(vs.begin(), vs.end(), id) - vs.begin());
                nb.push_back(vs[(p + 1) % n]);
                fc.push_back(t);
            }
        }
        r.nb.push_back(nb);
        r.fc.push_back(fc);
    }
    return r;
}

// Whether, in the patch rotation, consecutive tiles around every complete
// vertex share the edge the rotation claims.
inline bool rotation_consistent(const tessella::Patch& patch, const oracle::Rotation& r) {
    for (int v = 0; v < r.size(); ++v) {
        if (!r.complete[v]) continue;
        const int k = static_cast<int>(r.nb[v].size());
        for (int i = 0; i < k; ++i) {
            const auto& vs = patch.tiles[r.fc[v][i]].vertices;
            const int n = static_cast<int>(vs.size());
            int p = static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
            if (vs[(p + n - 1) % n] != r.nb[v][(i + 1) % k]) return false;
        }
    }
    return true;
}

// Colors renamed by first appearance, so equal partitions compare equal.
inline std::vector<int> normalized(const std::vector<int>& colors) {
    std::vector<int> out, rename;
    for (int c : colors) {
        if (c >= static_cast<int>(rename.size())) rename.resize(c + 1, -1);
        if (rename[c] < 0) rename[c] = *std::max_element(rename.begin(), rename.end()) + 1;
        out.push_back(rename[c]);
    }
    return out;
}

// Precise schemes with as many colors as the valency, in the mode the count
// propositions use for this instance.
inline tessella::Mode counting_mode(const tessella::TilingInstance& inst) {
    using namespace tessella;
    return inst.family == Family::Snub5 && inst.params[0] == inst.params[1] ? Mode::Chiral : Mode::Full;
}

}  // namespace support

#include <algorithm>
#include <cmath>

#include "tessella/errors.hpp"
#include "tessella/patch.hpp"

namespace tessella {
namespace {

bool cyclic_match(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    for (int dir : {1, -1})
        for (std::size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                std::size_t j = dir > 0 ? (s + i) % n : (s + n - i) % n;
                ok = a[i] == b[j];
            }
            if (ok) return true;
        }
    return false;
}

std::vector<Word> word_ball(int radius) {
    std::vector<Word> frontier{Word{}}, ball{Word{}};
    for (int len = 1; len <= radius; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (Letter l : {Letter::P, Letter::Q, Letter::R})
                if (w.empty() || w.letters().back() != l) next.push_back(w * Word{l});
        ball.insert(ball.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return ball;
}

}  // namespace

ValidationReport validate_realization(const TilingInstance& inst, const ParityMap* full_override) {
    ValidationReport rep;
    Realization real;
    try {
        real = realize(inst);
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("realize: ") + e.what());
        return rep;
    }
    const ModelSpace& M = real.ms.model;
    rep.newton_iterations = real.solve.iterations;

    // (a) relators
    rep.relator_residual = real.ms.relator_residual();
    if (rep.relator_residual >= 1e-9)
        rep.failures.push_back("(a) relator residual " + std::to_string(rep.relator_residual));
    for (Letter l : {Letter::P, Letter::Q, Letter::R})
        if (Isometry{real.ms.matrix(l)}.orientation() != -1)
            rep.failures.push_back(std::string("(a) mirror ") + to_char(l) + " preserves orientation");

    // (b) stabilizers fix their seed tile
    for (std::size_t j = 0; j < inst.orbits.size(); ++j)
        for (const Word& w : inst.orbits[j].stabilizer) {
            Vec3 c = M.normalize(real.matrix(w) * real.seeds[j].center);
            if (M.distance(c, real.seeds[j].center) > 1e-7)
                rep.failures.push_back("(b) " + w.str() + " moves the seed " + inst.orbits[j].name);
        }
    for (const Word& w : inst.vertex_stabilizer)
        if (M.distance(M.normalize(real.matrix(w) * real.v0), real.v0) > 1e-7)
            rep.failures.push_back("(b) " + w.str() + " moves the seed vertex");

    // (c) corona words give the faces around v0 in cyclic order
    auto faces = faces_at_seed(real);
    if (faces.size() != inst.corona.size()) {
        rep.failures.push_back("(c) " + std::to_string(faces.size()) + " faces at the seed vertex, corona has " +
                               std::to_string(inst.corona.size()));
    } else {
        std::vector<int> pos;
        for (const auto& c : inst.corona) {
            Vec3 center = M.normalize(real.matrix(c.word) * real.seeds[c.orbit].center);
            int found = -1;
            for (std::size_t i = 0; i < faces.size(); ++i)
                if (M.distance(center, faces[i].second) < 1e-7) found = static_cast<int>(i);
            if (found < 0 || faces[found].first != inst.orbits[c.orbit].gon) {
                rep.failures.push_back("(c) corona word " + c.word.str() + " (" + inst.orbits[c.orbit].name +
                                       ") does not land on a face at the seed vertex");
                found = -1;
            }
            pos.push_back(found);
        }
        if (std::find(pos.begin(), pos.end(), -1) == pos.end()) {
            const int n = static_cast<int>(pos.size());
            bool fwd = true, bwd = true;
            for (int i = 0; i < n; ++i) {
                fwd &= pos[(i + 1) % n] == (pos[i] + 1) % n;
                bwd &= pos[(i + 1) % n] == (pos[i] + n - 1) % n;
            }
            if (!fwd && !bwd) rep.failures.push_back("(c) corona words are not in cyclic order");
        }
    }

    // patch-level checks: regular polygons, vertex configurations, edges
    Patch patch;
    try {
        patch = realize_patch(real, 3);
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("patch: ") + e.what());
        return rep;
    }
    double lo = 1e300, hi = 0, sum = 0;
    int edges = 0;
    for (const auto& t : patch.tiles) {
        const std::size_t n = t.polygon.size();
        for (std::size_t i = 0; i < n; ++i) {
            double d = M.distance(t.polygon[i], t.polygon[(i + 1) % n]);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            sum += d;
            ++edges;
        }
        double r0 = M.distance(t.center, t.polygon[0]);
        for (const Vec3& v : t.polygon)
            if (std::abs(M.distance(t.center, v) - r0) > 1e-7 * std::max(1.0, r0)) {
                rep.failures.push_back("tile " + t.word.str() + " is not regular");
                break;
            }
    }
    rep.edge_spread = edges ? (hi - lo) / (sum / edges) : 0;
    if (rep.edge_spread >= 1e-7) rep.failures.push_back("edge spread " + std::to_string(rep.edge_spread));
    for (const auto& v : patch.vertices) {
        if (!v.complete) continue;
        std::vector<int> gons;
        for (int t : v.tiles) gons.push_back(static_cast<int>(patch.tiles[t].polygon.size()));
        if (!cyclic_match(gons, inst.config)) {
            rep.failures.push_back("vertex configuration " + dot_notation(gons) + " found");
            break;
        }
    }

    // (d) exactly the words in G are symmetries
    const ParityMap& full = full_override ? *full_override : inst.full;
    if (!full.is_trivial() || full_override) {
        int wrong = 0;
        std::string first;
        for (const Word& w : word_ball(6)) {
            int tested = 0;
            bool sym = maps_patch_to_itself(patch, real.matrix(w), &tested);
            if (tested == 0) continue;
            if (sym != full.in_kernel(w)) {
                if (!wrong++) first = w.str();
            }
        }
        if (wrong)
            rep.failures.push_back("(d) symmetry predicate disagrees with the geometry on " + std::to_string(wrong) +
                                   " words, e.g. " + first);
    }
    return rep;
}

}  // namespace tessella

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "tessella/audit.hpp"
#include "tessella/errors.hpp"

namespace tessella {
namespace {

std::vector<int> normalized(const std::vector<int>& colors) {
    std::map<int, int> rename;
    std::vector<int> out;
    out.reserve(colors.size());
    for (int c : colors) out.push_back(rename.emplace(c, static_cast<int>(rename.size())).first->second);
    return out;
}

// Partition of the tiles that have an image, and the partition pulled back
// along the map.
std::pair<std::vector<int>, std::vector<int>> signatures(const std::vector<int>& colors,
                                                         const std::vector<int>& image) {
    std::vector<int> own, pulled;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i] < 0) continue;
        own.push_back(colors[i]);
        pulled.push_back(colors[image[i]]);
    }
    return {normalized(own), normalized(pulled)};
}

}  // namespace

std::vector<int> tile_images(const Patch& patch, const Mat3& m) {
    const ModelSpace& M = patch.model();
    std::vector<int> out(patch.tiles.size(), -1);
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
        int f = patch.find_tile(M.normalize(m * patch.tiles[i].center));
        if (f >= 0 && patch.tiles[f].polygon.size() == patch.tiles[i].polygon.size()) out[i] = f;
    }
    return out;
}

std::vector<int> patch_colors(const ColoringScheme& s, const Patch& patch) {
    std::vector<int> out;
    out.reserve(patch.tiles.size());
    for (const auto& t : patch.tiles) out.push_back(s.color_of(t.orbit, t.word));
    return out;
}

std::optional<Mat3> reversing_symmetry(const ColoringContext& ctx, const Patch& patch) {
    const Realization& real = *patch.real;
    if (!ctx.h_is_g) return real.matrix(ctx.odd);
    if (ctx.inst.full_is_words) return std::nullopt;
    // Reflection in an edge at v0; the first one that is a symmetry.
    const ModelSpace& M = real.ms.model;
    for (const Word& w : ctx.inst.edge_words)
        for (const Word& x : {w, w.inverse()}) {
            Vec3 nb = M.normalize(real.matrix(x) * real.v0);
            Mat3 m = M.reflection_through(real.v0, nb);
            int tested = 0;
            if (maps_patch_to_itself(patch, m, &tested) && tested > 0) return m;
        }
    throw GeometryError("no reflection symmetry found for " + ctx.inst.spec());
}

Perfection classify(const ColoringScheme& s, const Patch& patch) {
    auto sigma = reversing_symmetry(*s.ctx, patch);
    if (!sigma) return Perfection::Perfect;
    auto [own, pulled] = signatures(patch_colors(s, patch), tile_images(patch, *sigma));
    return own == pulled ? Perfection::Perfect : Perfection::ChirallyPerfect;
}

AuditReport patch_audit(const Patch& patch, const std::vector<int>& colors, const std::vector<Mat3>& h_generators,
                        int m) {
    AuditReport rep;
    rep.colors_seen = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    if (rep.colors_seen != m)
        rep.violations.push_back(std::to_string(rep.colors_seen) + " colors on the patch, expected " +
                                 std::to_string(m));
    const ModelSpace& M = patch.model();
    for (std::size_t v = 0; v < patch.vertices.size(); ++v) {
        const auto& vx = patch.vertices[v];
        if (!vx.complete) continue;
        std::set<int> seen;
        for (int t : vx.tiles)
            if (!seen.insert(colors[t]).second) {
                Vec2 xy = M.project(vx.point);
                rep.violations.push_back("vertex at (" + std::to_string(xy.x()) + ", " + std::to_string(xy.y()) +
                                         ") repeats color " + std::to_string(colors[t] + 1));
                break;
            }
    }
    for (std::size_t g = 0; g < h_generators.size(); ++g) {
        auto image = tile_images(patch, h_generators[g]);
        std::map<int, int> fwd, back;
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (image[i] < 0) continue;
            int a = colors[i], b = colors[image[i]];
            auto [it1, new1] = fwd.emplace(a, b);
            auto [it2, new2] = back.emplace(b, a);
            if (it1->second != b || it2->second != a) {
                rep.violations.push_back("generator " + std::to_string(g + 1) + " does not permute colors at tile " +
                                         patch.tiles[i].word.str());
                break;
            }
        }
    }
    return rep;
}

AuditReport patch_audit(const ColoringScheme& s, const Patch& patch) {
    std::vector<Mat3> gens;
    for (const Word& w : s.ctx->h_generators) gens.push_back(patch.real->matrix(w));
    return patch_audit(patch, patch_colors(s, patch), gens, s.m);
}

int count_up_to_mirror(const std::vector<ColoringScheme>& schemes, const Patch& patch, const Mat3& mirror) {
    auto image = tile_images(patch, mirror);
    std::vector<std::vector<int>> own, pulled;
    for (const auto& s : schemes) {
        auto [a, b] = signatures(patch_colors(s, patch), image);
        own.push_back(std::move(a));
        pulled.push_back(std::move(b));
    }
    const std::size_t n = schemes.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // B is the mirror image of A when B pulled back equals A
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (pulled[b] == own[a]) parent[find(a)] = find(b);
    int classes = 0;
    for (std::size_t i = 0; i < n; ++i) classes += find(i) == i;
    return classes;
}

int count_precise_colorings(const TilingInstance& inst, Mode mode) {
    EnumerateOptions opt;
    opt.precise_only = true;
    auto schemes = enumerate_colorings(inst, mode, inst.valency(), opt);
    if (schemes.empty()) return 0;
    const auto& ctx = *schemes.front().ctx;
    if (mode == Mode::Full && inst.full_is_words) return static_cast<int>(schemes.size());
    if (ctx.h_is_g && inst.full_is_words) return 0;  // no indirect symmetry: nothing is only chirally perfect

    Realization real = realize(inst);
    Patch patch = realize_patch(real, 3);
    Mat3 sigma = *reversing_symmetry(ctx, patch);
    auto image = tile_images(patch, sigma);
    std::vector<ColoringScheme> chiral;
    int perfect = 0;
    for (auto& s : schemes) {
        auto [own, pulled] = signatures(patch_colors(s, patch), image);
        if (own == pulled)
            ++perfect;
        else
            chiral.push_back(std::move(s));
    }
    if (mode == Mode::Full) return perfect;
    // mirror images are the same coloring (same partition up to reflection)
    return count_up_to_mirror(chiral, patch, sigma);
}

std::vector<VerifyRow> verify_proposition(Family family, const std::vector<std::vector<int>>& cells, Mode mode,
                                          unsigned threads) {
    std::vector<VerifyRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            VerifyRow& r = rows[i];
            r.params = cells[i];
            try {
                TilingInstance inst = instantiate(family, cells[i]);
                r.label = inst.label();
                r.expected = expected_count(family, cells[i], mode);
                r.enumerated = count_precise_colorings(inst, mode);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cells.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rows;
}

}  // namespace tessella

#include "tessella/patch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <unordered_map>

#include <limits>
#include <memory>
#include "tessella/errors.hpp"

namespace tessella {

constexpr double kPointTol = 1e-7;
constexpr double kCell = 1e-6;
constexpr int kMaxRadius = 5;
constexpr std::size_t kMaxTiles = 4'000'000;

// Spatial hash over a bounded canonical embedding of the model.
struct Patch::Index {
    Geometry kind;
    std::unordered_map<std::int64_t, std::vector<int>> cells;
    std::vector<Vec3> keys;

    Vec3 canon(const Vec3& x) const {
        if (kind == Geometry::Hyperbolic) return x / (1 + x.z());
        if (kind == Geometry::Euclidean) return Vec3(x.x() / x.z(), x.y() / x.z(), 0);
        return x;
    }
    static std::int64_t hash(std::int64_t a, std::int64_t b, std::int64_t c) {
        return (a * 73856093) ^ (b * 19349663) ^ (c * 83492791);
    }
    std::array<std::int64_t, 3> cell(const Vec3& c) const {
        return {static_cast<std::int64_t>(std::floor(c.x() / kCell)),
                static_cast<std::int64_t>(std::floor(c.y() / kCell)),
                static_cast<std::int64_t>(std::floor(c.z() / kCell))};
    }
    int find(const Vec3& x) const {
        Vec3 c = canon(x);
        auto k = cell(c);
        const double tol = kPointTol * std::max(1.0, c.cwiseAbs().maxCoeff());
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz) {
                    auto it = cells.find(hash(k[0] + dx, k[1] + dy, k[2] + dz));
                    if (it == cells.end()) continue;
                    for (int id : it->second)
                        if ((keys[id] - c).cwiseAbs().maxCoeff() < tol) return id;
                }
        return -1;
    }
    int insert(const Vec3& x) {
        Vec3 c = canon(x);
        auto k = cell(c);
        int id = static_cast<int>(keys.size());
        keys.push_back(c);
        cells[hash(k[0], k[1], k[2])].push_back(id);
        return id;
    }
};

int Patch::find_tile(const Vec3& center) const { return tile_index ? tile_index->find(center) : -1; }
int Patch::find_vertex(const Vec3& point) const { return vertex_index ? vertex_index->find(point) : -1; }

namespace {

// Finite group generated by the given words, as (word, matrix) pairs.
std::vector<std::pair<Word, Mat3>> closure(const MirrorSystem& ms, const std::vector<Word>& gens) {
    std::vector<std::pair<Word, Mat3>> el{{Word{}, Mat3::Identity()}};
    for (std::size_t i = 0; i < el.size(); ++i)
        for (const Word& g : gens) {
            Mat3 m = el[i].second * ms.matrix(g);
            bool seen = false;
            for (const auto& e : el)
                if ((e.second - m).cwiseAbs().maxCoeff() < 1e-8) {
                    seen = true;
                    break;
                }
            if (!seen) {
                el.emplace_back(el[i].first * g, m);
                if (el.size() > 4096) throw GeometryError("tile stabilizer is not finite");
            }
        }
    return el;
}

void sort_ccw(const ModelSpace& M, const Vec3& center, std::vector<Vec3>& pts, std::vector<Word>& words) {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<double> ang(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) ang[i] = M.direction(center, pts[i]);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return ang[a] < ang[b]; });
    std::vector<Vec3> p2;
    std::vector<Word> w2;
    for (auto i : idx) {
        p2.push_back(pts[i]);
        w2.push_back(words[i]);
    }
    pts = std::move(p2);
    words = std::move(w2);
}

}  // namespace

Realization realize(const TilingInstance& inst) {
    Realization R;
    R.inst = inst;
    R.ms = mirror_setup(inst.ambient, inst.geometry);
    R.solve = generator_point(inst, R.ms);
    R.ms.transform(recenter(R.ms.model, R.solve.point));
    const ModelSpace& M = R.ms.model;
    R.v0 = M.lift(0, 0);
    for (std::size_t j = 0; j < inst.orbits.size(); ++j) {
        const auto& orb = inst.orbits[j];
        SeedTile seed;
        auto stab = closure(R.ms, orb.stabilizer);
        for (const auto& c : inst.corona) {
            if (c.orbit != static_cast<int>(j)) continue;
            for (const auto& [sw, sm] : stab) {
                Word vw = sw * c.word.inverse();
                Vec3 pt = M.normalize(R.ms.matrix(vw) * R.v0);
                bool dup = false;
                for (const auto& q : seed.polygon)
                    if ((q - pt).cwiseAbs().maxCoeff() < kPointTol) dup = true;
                if (!dup) {
                    seed.polygon.push_back(pt);
                    seed.vertex_words.push_back(vw);
                }
            }
        }
        if (static_cast<int>(seed.polygon.size()) != orb.gon)
            throw GeometryError("seed " + orb.name + " of " + inst.spec() + " has " +
                                std::to_string(seed.polygon.size()) + " vertices, expected " +
                                std::to_string(orb.gon));
        seed.center = M.centroid(seed.polygon);
        sort_ccw(M, seed.center, seed.polygon, seed.vertex_words);
        R.seeds.push_back(std::move(seed));
    }
    R.edge_length = M.distance(R.seeds[0].polygon[0], R.seeds[0].polygon[1]);
    return R;
}

Patch realize_patch(const Realization& real, int radius) {
    if (radius < 1) throw InvalidArgument("patch radius must be >= 1");
    if (radius > kMaxRadius) throw InvalidArgument("patch radius is capped at 5");
    const ModelSpace& M = real.ms.model;
    const auto& inst = real.inst;
    Patch P;
    P.real = &real;
    P.radius = radius;
    P.tile_index = std::make_shared<Patch::Index>(Patch::Index{M.kind, {}, {}});
    P.vertex_index = std::make_shared<Patch::Index>(Patch::Index{M.kind, {}, {}});
    Patch::Index expanded{M.kind, {}, {}};

    auto add_tile = [&](int orbit, const Word& y, int ring) {
        Mat3 m = real.matrix(y);
        Vec3 c = M.normalize(m * real.seeds[orbit].center);
        int found = P.tile_index->find(c);
        if (found >= 0) {
            if (P.tiles[found].orbit != orbit)
                throw GeometryError("tolerance-collision: two tile orbits share a center");
            return;
        }
        if (P.tiles.size() >= kMaxTiles) throw ResourceExhausted("patch exceeds tile budget");
        PatchTile t;
        t.orbit = orbit;
        t.word = y;
        t.matrix = m;
        t.center = c;
        t.ring = ring;
        for (const Vec3& v : real.seeds[orbit].polygon) t.polygon.push_back(M.normalize(m * v));
        // reflections reverse the cyclic order
        if (m.determinant() < 0) std::reverse(t.polygon.begin(), t.polygon.end());
        P.tile_index->insert(c);
        P.tiles.push_back(std::move(t));
    };
    auto expand = [&](const Word& z, int ring) {
        for (const auto& c : inst.corona) add_tile(c.orbit, z * c.word, ring);
    };

    expanded.insert(real.v0);
    expand(Word{}, 1);
    for (int ring = 1; ring < radius; ++ring) {
        const std::size_t n = P.tiles.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (P.tiles[i].ring != ring) continue;
            const auto& seed = real.seeds[P.tiles[i].orbit];
            for (const Word& vw : seed.vertex_words) {
                Word z = P.tiles[i].word * vw;
                Vec3 pt = M.normalize(real.matrix(z) * real.v0);
                if (expanded.find(pt) >= 0) continue;
                expanded.insert(pt);
                expand(z, ring + 1);
            }
        }
    }

    // vertex incidences
    for (std::size_t i = 0; i < P.tiles.size(); ++i) {
        for (const Vec3& v : P.tiles[i].polygon) {
            int id = P.vertex_index->find(v);
            if (id < 0) {
                id = P.vertex_index->insert(v);
                P.vertices.push_back({v, {}, false});
            }
            P.vertices[id].tiles.push_back(static_cast<int>(i));
            P.tiles[i].vertices.push_back(id);
        }
    }
    const std::size_t k = inst.corona.size();
    for (auto& v : P.vertices) {
        std::vector<double> ang;
        for (int t : v.tiles) ang.push_back(M.direction(v.point, P.tiles[t].center));
        std::vector<std::size_t> idx(v.tiles.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return ang[a] < ang[b]; });
        std::vector<int> sorted;
        for (auto i : idx) sorted.push_back(v.tiles[i]);
        v.tiles = std::move(sorted);
        if (v.tiles.size() > k) throw GeometryError("vertex with more than k incident tiles");
        v.complete = v.tiles.size() == k;
    }
    return P;
}

std::string export_patch(const Patch& patch) {
    std::string out = "tessella-patch v1\n";
    const auto& inst = patch.real->inst;
    out += "instance " + inst.spec() + " " + inst.label() + "\n";
    out += "geometry " + std::string(geometry_name(inst.geometry)) + "\n";
    out += "radius " + std::to_string(patch.radius) + "\n";
    out += "tiles " + std::to_string(patch.tiles.size()) + "\n";
    char buf[64];
    for (const auto& t : patch.tiles) {
        out += std::to_string(t.orbit) + " " + t.word.str() + " " + std::to_string(t.polygon.size());
        for (const Vec3& v : t.polygon) {
            Vec2 p = patch.model().project(v);
            std::snprintf(buf, sizeof buf, " %.9f %.9f", p.x() + 0.0, p.y() + 0.0);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

bool maps_patch_to_itself(const Patch& patch, const Mat3& m, int* tested) {
    const ModelSpace& M = patch.model();
    const Vec3& v0 = patch.real->v0;
    double inner = std::numeric_limits<double>::infinity();
    for (const auto& v : patch.vertices)
        if (!v.complete) inner = std::min(inner, M.distance(v0, v.point));
    int count = 0;
    bool ok = true;
    for (const auto& t : patch.tiles) {
        double circum = M.distance(t.center, t.polygon[0]);
        Vec3 c = M.normalize(m * t.center);
        if (M.distance(v0, c) + 2 * circum >= inner) continue;
        ++count;
        int f = patch.find_tile(c);
        if (f < 0 || patch.tiles[f].polygon.size() != t.polygon.size()) {
            ok = false;
            break;
        }
    }
    if (tested) *tested = count;
    return ok;
}

std::vector<std::pair<int, Vec3>> faces_at_seed(const Realization& real) {
    const ModelSpace& M = real.ms.model;
    const Vec3& v0 = real.v0;
    // vertices near v0: images of v0 under a ball of symmetry words
    std::vector<Word> frontier{Word{}}, ball{Word{}};
    for (int len = 1; len <= 8; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (Letter l : {Letter::P, Letter::Q, Letter::R}) {
                if (!w.empty() && w.letters().back() == l) continue;
                next.push_back(w * Word{l});
            }
        for (const Word& w : next)
            if (real.inst.in_G(w)) ball.push_back(w);
        frontier = std::move(next);
    }
    std::vector<Vec3> pts;
    double edge = std::numeric_limits<double>::infinity();
    for (const Word& w : ball) {
        Vec3 p = M.normalize(real.matrix(w) * v0);
        double d = M.distance(v0, p);
        if (d > 1e-6) {
            edge = std::min(edge, d);
            pts.push_back(p);
        }
    }
    std::vector<Vec3> nbrs;
    for (const Vec3& p : pts) {
        if (std::abs(M.distance(v0, p) - edge) > 1e-7 * std::max(1.0, edge)) continue;
        bool dup = false;
        for (const Vec3& q : nbrs)
            if ((q - p).cwiseAbs().maxCoeff() < 1e-7) dup = true;
        if (!dup) nbrs.push_back(p);
    }
    std::sort(nbrs.begin(), nbrs.end(), [&](const Vec3& a, const Vec3& b) {
        return M.direction(v0, a) < M.direction(v0, b);
    });
    std::vector<std::pair<int, Vec3>> faces;
    const Mat3 J = M.kind == Geometry::Hyperbolic ? Mat3(Eigen::Vector3d(1, 1, -1).asDiagonal())
                                                  : Mat3::Identity();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const Vec3& a = nbrs[i];
        const Vec3& b = nbrs[(i + 1) % nbrs.size()];
        Vec3 c;
        if (M.kind == Geometry::Euclidean) {
            Eigen::Matrix2d A2;
            A2.row(0) = 2 * (a - v0).head<2>().transpose();
            A2.row(1) = 2 * (b - v0).head<2>().transpose();
            Vec2 rhs(a.head<2>().squaredNorm() - v0.head<2>().squaredNorm(),
                     b.head<2>().squaredNorm() - v0.head<2>().squaredNorm());
            Vec2 u = A2.fullPivLu().solve(rhs);
            c = Vec3(u.x(), u.y(), 1);
        } else {
            c = M.normalize(J * (v0 - a).cross(v0 - b));
            if (M.kind == Geometry::Spherical && c.dot(v0) < 0) c = -c;
        }
        double central = std::abs(std::remainder(M.direction(c, v0) - M.direction(c, a), 2 * std::numbers::pi));
        int gon = static_cast<int>(std::lround(2 * std::numbers::pi / central));
        faces.emplace_back(gon, c);
    }
    return faces;
}

}  // namespace tessella

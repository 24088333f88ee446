#pragma once
// Combinatorial tiling generator: grows an edge-to-edge planar map from a
// vertex configuration alone (no coordinates, no group theory) by adding one
// polygon at a time to the boundary of a disk. Plus a rooted isomorphism test
// between rotation systems, used to check realized patches.
//
// A configuration alone can fit many tilings (non-uniform ones, or the
// pseudo-rhombicuboctahedron for (3.4.4.4)), so the growth is driven by an
// edge rule: every vertex carries a placement of the configuration, and the
// placement of a neighbour follows from the position of the shared edge by a
// fixed involution on edge positions. Uniform tilings are exactly the ones
// some rule reproduces; generate() tries every rule.
#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

// Rotation system: nb[v] ccw neighbours, fc[v][i] the face between nb[v][i]
// and nb[v][i+1]. Incomplete vertices (on the boundary of a disk) have one
// more neighbour than faces.
struct Rotation {
    std::vector<std::vector<int>> nb, fc;
    std::vector<int> face_size;
    std::vector<bool> complete;
    int size() const { return static_cast<int>(nb.size()); }
};

// Edge position c of the configuration lies between faces c-1 and c. The
// rule sends it to position `to` at the neighbour, with the neighbour's
// placement reversed when flip is set.
struct EdgeRule {
    struct Image {
        int to = 0;
        bool flip = false;
    };
    std::vector<Image> image;
};

inline int wrap(int x, int k) { return ((x % k) + k) % k; }

// All involutive edge rules compatible with the face sizes.
inline std::vector<EdgeRule> edge_rules(const std::vector<int>& cfg) {
    const int k = static_cast<int>(cfg.size());
    auto fits = [&](int c, int c2, bool flip) {
        int l = cfg[wrap(c - 1, k)], r = cfg[c];
        return flip ? cfg[wrap(c2 - 1, k)] == l && cfg[c2] == r : cfg[c2] == l && cfg[wrap(c2 - 1, k)] == r;
    };
    std::vector<EdgeRule> out;
    EdgeRule cur;
    cur.image.assign(k, {-1, false});
    std::function<void(int)> rec = [&](int c) {
        while (c < k && cur.image[c].to >= 0) ++c;
        if (c == k) {
            out.push_back(cur);
            return;
        }
        for (int c2 = c; c2 < k; ++c2) {
            if (cur.image[c2].to >= 0) continue;
            for (bool flip : {false, true}) {
                if (!fits(c, c2, flip) || !fits(c2, c, flip)) continue;
                cur.image[c] = {c2, flip};
                cur.image[c2] = {c, flip};
                rec(c + 1);
                cur.image[c] = cur.image[c2] = {-1, false};
            }
        }
    };
    rec(0);
    return out;
}

class MapGrower {
public:
    MapGrower(std::vector<int> config, EdgeRule rule)
        : cfg_(std::move(config)), k_(static_cast<int>(cfg_.size())), rule_(std::move(rule)) {
        const int n = cfg_[0];
        face_size_.push_back(n);
        for (int i = 0; i < n; ++i) {
            nb_.push_back({(i + 1) % n, (i + n - 1) % n});
            fc_.push_back({0});
            dist_.push_back(std::min(i, n - i));
            alive_.push_back(true);
            place_.push_back({0, 0});
        }
        place_[0] = {0, 1};
        for (int i = 1; i < n; ++i) derive(i, i - 1);
    }

    // Complete every vertex within `limit` (an upper bound on the distance
    // to vertex 0); false on a contradiction.
    bool grow(int limit, long budget = 5'000'000) {
        if (!consistent_all()) return false;
        for (int v = 0; v < static_cast<int>(nb_.size()); ++v) enqueue(v);
        while (!queue_.empty()) {
            if (--budget < 0) throw std::runtime_error("planar map growth budget exhausted");
            // the vertex with the most faces, oldest first: filling it early
            // keeps fresh vertices from duplicating existing ones
            auto [faces, neg_v] = queue_.top();
            queue_.pop();
            const int v = -neg_v;
            if (!alive_[v] || complete(v) || static_cast<int>(fc_[v].size()) != faces || dist_[v] > limit) continue;
            std::vector<int> touched;
            if (!add_face(v, cfg_[wrap(place_[v].off + place_[v].dir * faces, k_)], touched)) return false;
            for (int x : touched) enqueue(x);
        }
        return true;
    }

    // Live vertices renumbered in creation order; vertex 0 stays 0.
    Rotation rotation() const {
        std::vector<int> id(nb_.size(), -1);
        int n = 0;
        for (std::size_t v = 0; v < nb_.size(); ++v)
            if (alive_[v]) id[v] = n++;
        Rotation r;
        r.face_size = face_size_;
        for (std::size_t v = 0; v < nb_.size(); ++v) {
            if (!alive_[v]) continue;
            std::vector<int> nb;
            for (int w : nb_[v]) nb.push_back(id[w]);
            r.nb.push_back(nb);
            r.fc.push_back(fc_[v]);
            r.complete.push_back(complete(static_cast<int>(v)));
        }
        return r;
    }

private:
    struct Placement {
        int off = 0, dir = 0;  // face slot i has size cfg[off + dir*i]; dir 0 = unknown
    };
    std::vector<int> cfg_;
    int k_;
    EdgeRule rule_;
    std::vector<std::vector<int>> nb_, fc_;
    std::vector<int> face_size_, dist_;
    std::vector<bool> alive_;
    std::vector<Placement> place_;
    std::priority_queue<std::pair<int, int>> queue_;  // (faces, -vertex), stale entries skipped

    void enqueue(int v) {
        if (alive_[v] && !complete(v)) queue_.push({static_cast<int>(fc_[v].size()), -v});
    }

    bool complete(int v) const { return static_cast<int>(fc_[v].size()) == k_ && nb_[v].size() == fc_[v].size(); }
    int next(int v) const { return nb_[v].front(); }
    int prev(int v) const { return nb_[v].back(); }
    static int index_of(const std::vector<int>& xs, int x) {
        return static_cast<int>(std::find(xs.begin(), xs.end(), x) - xs.begin());
    }

    // Placement of w from its placed neighbour v.
    void derive(int w, int v) {
        const Placement pv = place_[v];
        const int i = index_of(nb_[v], w), j = index_of(nb_[w], v);
        const int c = pv.dir > 0 ? pv.off + i : pv.off - i + 1;
        const auto img = rule_.image[wrap(c, k_)];
        const int dir = img.flip ? -pv.dir : pv.dir;
        place_[w] = {wrap(dir > 0 ? img.to - j : img.to + j - 1, k_), dir};
    }

    bool consistent(int v) const {
        if (!alive_[v]) return true;
        const int nf = static_cast<int>(fc_[v].size());
        if (nf > k_) return false;
        if (nf == k_ && nb_[v].size() != fc_[v].size()) return false;
        std::set<int> seen(nb_[v].begin(), nb_[v].end());
        if (seen.size() != nb_[v].size() || seen.count(v)) return false;  // simple graph
        const Placement p = place_[v];
        for (int i = 0; i < nf; ++i)
            if (face_size_[fc_[v][i]] != cfg_[wrap(p.off + p.dir * i, k_)]) return false;
        return true;
    }
    bool consistent_all() const {
        for (std::size_t v = 0; v < nb_.size(); ++v)
            if (!consistent(static_cast<int>(v))) return false;
        return true;
    }

    void rename(int from, int to) {
        for (int y : nb_[from])
            for (int& z : nb_[y])
                if (z == from) z = to;
        alive_[from] = false;
        dist_[to] = std::min(dist_[to], dist_[from]);
    }

    // b's corona continues a's across one new face F (or none, F < 0): the
    // two boundary vertices are the same vertex of the tiling.
    void merge(int a, int b, int F) {
        const auto nbb = nb_[b];
        const auto fcb = fc_[b];
        if (F >= 0) {
            fc_[a].push_back(F);
            nb_[a].insert(nb_[a].end(), nbb.begin(), nbb.end());
        } else {
            nb_[a].insert(nb_[a].end(), nbb.begin() + 1, nbb.end());  // shared first edge
        }
        fc_[a].insert(fc_[a].end(), fcb.begin(), fcb.end());
        rename(b, a);
    }

    // A vertex whose corona just filled up closes the angle between its two
    // boundary edges: they are one edge, so their far ends coincide.
    bool zip(int m, std::vector<int>& touched) {
        while (alive_[m] && static_cast<int>(fc_[m].size()) == k_ && static_cast<int>(nb_[m].size()) == k_ + 1) {
            int a = nb_[m].front(), b = nb_[m].back();
            nb_[m].pop_back();
            if (a == b) {
                // the last gap was a digon: drop the doubled edge at a too
                if (nb_[a].front() != m || nb_[a].back() != m) return false;
                nb_[a].pop_back();
                touched.push_back(a);
                return static_cast<int>(fc_[a].size()) == k_;
            }
            if (nb_[a].back() != m || nb_[b].front() != m) return false;
            merge(a, b, -1);
            touched.push_back(a);
            m = a;
        }
        return true;
    }

    // New n-gon ccw after prev(v) at v.
    bool add_face(int v, int n, std::vector<int>& touched) {
        const int F = static_cast<int>(face_size_.size());
        std::deque<int> path{prev(v), v};
        auto closes = [&](int x) { return static_cast<int>(fc_[x].size()) + 1 == k_; };
        auto full = [&] { return next(path.back()) == path.front(); };  // path covers the boundary
        while (!full() && closes(path.front())) path.push_front(prev(path.front()));
        while (!full() && closes(path.back())) path.push_back(next(path.back()));
        const int len = static_cast<int>(path.size());
        face_size_.push_back(n);
        touched.assign(path.begin(), path.end());

        if (full() && closes(path.front()) && closes(path.back())) {
            // the last face of a closed surface
            if (n != len) return false;
            for (int x : path) {
                if (!closes(x)) return false;
                fc_[x].push_back(F);
            }
        } else {
            const int u0 = path.front(), uL = path.back();
            for (int j = 1; j + 1 < len; ++j) fc_[path[j]].push_back(F);
            if (len == n + 1) {
                // the face runs from uL back round to u0: they are one vertex
                if (full()) return false;
                merge(uL, u0, F);
                if (!zip(uL, touched)) return false;
            } else {
                const int fresh = n - len;
                if (fresh < 0) return false;
                if (fresh == 0 && index_of(nb_[u0], uL) != static_cast<int>(nb_[u0].size())) return false;
                const int first = static_cast<int>(nb_.size());
                nb_[uL].push_back(fresh ? first + fresh - 1 : u0);
                fc_[uL].push_back(F);
                nb_[u0].insert(nb_[u0].begin(), fresh ? first : uL);
                fc_[u0].insert(fc_[u0].begin(), F);
                place_[u0].off = wrap(place_[u0].off - place_[u0].dir, k_);  // slots shifted by one
                for (int j = 0; j < fresh; ++j) {
                    nb_.push_back({j + 1 < fresh ? first + j + 1 : uL, j > 0 ? first + j - 1 : u0});
                    fc_.push_back({F});
                    dist_.push_back(std::min(dist_[u0] + j + 1, dist_[uL] + fresh - j));
                    alive_.push_back(true);
                    place_.push_back({});
                    derive(first + j, j > 0 ? first + j - 1 : u0);
                    touched.push_back(first + j);
                }
            }
        }
        for (int x : touched)
            if (!consistent(x)) return false;
        return true;
    }
};

// Grows the configuration under every edge rule until `accept` takes one of
// the resulting maps. Returns whether any was accepted.
template <class Accept>
bool generate(const std::vector<int>& config, int limit, Accept accept) {
    for (const auto& rule : edge_rules(config)) {
        MapGrower g(config, rule);
        if (g.grow(limit) && accept(g.rotation())) return true;
    }
    return false;
}

// Graph distance from `root`, walking only through complete vertices.
inline std::vector<int> distances(const Rotation& r, int root) {
    std::vector<int> d(r.size(), -1);
    std::queue<int> q;
    d[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (!r.complete[v]) continue;
        for (int w : r.nb[v])
            if (d[w] < 0) {
                d[w] = d[v] + 1;
                q.push(w);
            }
    }
    return d;
}

// Whether the balls of radius D around a0 and b0 are isomorphic as rotation
// systems (faces with sizes, cyclic orders; mirror images allowed). Every
// vertex closer than D to its root must be complete on both sides.
inline bool isomorphic_balls(const Rotation& A, int a0, const Rotation& B, int b0, int D) {
    const int k = static_cast<int>(A.nb[a0].size());
    if (static_cast<int>(B.nb[b0].size()) != k) return false;
    auto dA = distances(A, a0), dB = distances(B, b0);
    int countA = 0, countB = 0;
    for (int v = 0; v < A.size(); ++v) countA += dA[v] >= 0 && dA[v] <= D;
    for (int v = 0; v < B.size(); ++v) countB += dB[v] >= 0 && dB[v] <= D;
    if (countA != countB) return false;
    auto mod = [k](int x) { return wrap(x, k); };
    auto index_of = [](const std::vector<int>& xs, int x) {
        return static_cast<int>(std::find(xs.begin(), xs.end(), x) - xs.begin());
    };

    for (int sigma : {1, -1})
        for (int shift = 0; shift < k; ++shift) {
            std::vector<int> mA(A.size(), -1), mB(B.size(), -1), align(A.size(), 0);
            std::vector<int> fA(A.face_size.size(), -1), fB(B.face_size.size(), -1);
            std::queue<int> q;
            mA[a0] = b0;
            mB[b0] = a0;
            align[a0] = shift;
            q.push(a0);
            bool ok = true;
            while (ok && !q.empty()) {
                int a = q.front();
                q.pop();
                int b = mA[a];
                if (dA[a] >= D) continue;
                if (!A.complete[a] || !B.complete[b] || static_cast<int>(B.nb[b].size()) != k) {
                    ok = false;
                    break;
                }
                for (int i = 0; ok && i < k; ++i) {
                    int j = mod(align[a] + sigma * i);
                    int fa = A.fc[a][i], fb = sigma > 0 ? B.fc[b][j] : B.fc[b][mod(j - 1)];
                    if (A.face_size[fa] != B.face_size[fb]) ok = false;
                    if ((fA[fa] >= 0 && fA[fa] != fb) || (fB[fb] >= 0 && fB[fb] != fa)) ok = false;
                    fA[fa] = fb;
                    fB[fb] = fa;
                    int a2 = A.nb[a][i], b2 = B.nb[b][j];
                    // alignment at the neighbour, when both sides know its corona
                    int r2 = -1;
                    if (A.complete[a2] && B.complete[b2]) {
                        int ia = index_of(A.nb[a2], a), jb = index_of(B.nb[b2], b);
                        if (ia == k || jb == k) {
                            ok = false;
                            break;
                        }
                        r2 = mod(jb - sigma * ia);
                    }
                    if (mA[a2] >= 0) {
                        if (mA[a2] != b2) ok = false;
                        if (r2 >= 0 && dA[a2] < D && align[a2] != r2) ok = false;
                    } else if (mB[b2] >= 0) {
                        ok = false;
                    } else {
                        mA[a2] = b2;
                        mB[b2] = a2;
                        align[a2] = r2;
                        q.push(a2);
                    }
                }
            }
            if (ok) return true;
        }
    return false;
}

}  // namespace oracle

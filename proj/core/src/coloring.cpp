#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "tessella/coloring.hpp"
#include "tessella/errors.hpp"

namespace tessella {
namespace {

// The same action with `root` as row 0, rows renumbered in BFS order.
// `map[old] = new`.
CosetTable rerooted(const CosetTable& t, int root, std::vector<int>& map) {
    const int n = t.size();
    map.assign(n, -1);
    std::vector<int> order{root};
    map[root] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Letter l : {Letter::P, Letter::Q, Letter::R}) {
            int r = t.act(order[i], l);
            if (map[r] < 0) {
                map[r] = static_cast<int>(order.size());
                order.push_back(r);
            }
        }
    std::vector<CosetTable::Row> rows(n);
    for (int i = 0; i < n; ++i)
        for (Letter l : {Letter::P, Letter::Q, Letter::R}) rows[i][index(l)] = map[t.act(order[i], l)];
    return CosetTable(t.presentation(), std::move(rows));
}

std::vector<int> label_zero_colors(const CosetTable& t, const ParityMap& h, int& count) {
    auto tr = t.transversal();
    std::vector<int> col(t.size(), -1);
    count = 0;
    for (int r = 0; r < t.size(); ++r)
        if (h.in_kernel(tr[r])) col[r] = count++;
    return col;
}

// Restricted growth strings: every set partition of {0..n-1}.
void set_partitions(int n, std::vector<int>& cur, int blocks, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        cur.push_back(b);
        set_partitions(n, cur, std::max(blocks, b + 1), out);
        cur.pop_back();
    }
}

struct Candidate {
    CosetTable table;
    std::vector<int> rows;
};

}  // namespace

int ColoringScheme::color_of(int orbit, const Word& x) const {
    auto pl = ctx->place(orbit, x);
    int gm = group_of_[pl.horbit];
    const ColorGroup& g = groups[gm / 64];
    return g.base + g.color(gm % 64, pl.h);
}

void ColoringScheme::canonicalize() {
    std::sort(groups.begin(), groups.end(), [](const ColorGroup& a, const ColorGroup& b) {
        return a.members.front() < b.members.front();
    });
    group_of_.assign(ctx->horbits.size(), -1);
    key_.clear();
    key_.push_back(static_cast<int>(groups.size()));
    int base = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        ColorGroup& g = groups[gi];
        // anchor = lowest H-orbit index
        std::vector<std::size_t> perm(g.members.size());
        for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
        std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return g.members[a] < g.members[b]; });
        std::vector<int> members, rows;
        for (auto k : perm) {
            members.push_back(g.members[k]);
            rows.push_back(g.rows[k]);
        }
        std::vector<int> map;
        g.table = rerooted(g.table, rows[0], map);
        for (int& r : rows) r = map[r];
        g.members = std::move(members);
        g.rows = std::move(rows);
        g.color_of_row = label_zero_colors(g.table, ctx->h, g.index);
        g.base = base;
        base += g.index;
        for (std::size_t k = 0; k < g.members.size(); ++k)
            group_of_[g.members[k]] = static_cast<int>(gi * 64 + k);

        key_.push_back(static_cast<int>(g.members.size()));
        key_.insert(key_.end(), g.members.begin(), g.members.end());
        key_.push_back(g.index);
        key_.push_back(g.table.size());
        for (const auto& row : g.table.rows()) key_.insert(key_.end(), row.begin(), row.end());
        key_.insert(key_.end(), g.rows.begin(), g.rows.end());
    }
    m = base;
}

std::vector<std::vector<Word>> ColoringScheme::subgroup_generators() const {
    std::vector<std::vector<Word>> out;
    for (const auto& g : groups) out.push_back(g.table.minimal_generators());
    return out;
}

std::string ColoringScheme::serialize() const {
    std::ostringstream os;
    os << "coloring " << ctx->inst.spec() << ' ' << (ctx->mode == Mode::Full ? "full" : "chiral") << " m=" << m
       << '\n';
    auto gens = subgroup_generators();
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& g = groups[gi];
        os << "  group " << gi + 1 << " colors " << g.base + 1 << ".." << g.base + g.index << " index "
           << g.index << " J=" << '<' << join(gens[gi], ",") << '>' << " tiles";
        auto tr = g.table.transversal();
        for (std::size_t k = 0; k < g.members.size(); ++k) {
            const HOrbit& o = ctx->horbits[g.members[k]];
            // offset word g with Jg = row, acting on the class representative
            os << ' ' << o.name << '@' << (tr[g.rows[k]] * o.representative).str();
        }
        os << '\n';
    }
    return os.str();
}

bool is_precise(const ColoringScheme& s) {
    for (std::size_t u = 0; u < s.ctx->vertex_coronas.size(); ++u) {
        std::set<int> seen;
        for (std::size_t c = 0; c < s.ctx->vertex_coronas[u].size(); ++c) {
            const auto& corona = s.ctx->inst.corona[c];
            if (!seen.insert(s.color_of(corona.orbit, s.ctx->vertex_classes[u] * corona.word)).second) return false;
        }
    }
    return true;
}

std::vector<ColoringScheme> enumerate_colorings(const TilingInstance& inst, Mode mode, int m,
                                                const EnumerateOptions& opt) {
    if (m < 1) throw InvalidArgument("number of colors must be >= 1");
    auto ctx = coloring_context(inst, mode);
    const int n = static_cast<int>(ctx->horbits.size());
    const auto& coronas = ctx->vertex_coronas;

    // Largest number of corona tiles a set of H-orbits puts around one vertex.
    auto multiplicity = [&](const std::vector<int>& members) {
        int best = 0;
        for (const auto& ring : coronas) {
            int c = 0;
            for (const auto& pl : ring) c += std::count(members.begin(), members.end(), pl.horbit) > 0;
            best = std::max(best, c);
        }
        return best;
    };

    std::map<std::pair<std::vector<int>, int>, std::vector<Candidate>> cache;
    auto candidates = [&](const std::vector<int>& members, int index) -> const std::vector<Candidate>& {
        auto key = std::make_pair(members, index);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::vector<Candidate> out;
        LowIndexOptions lo;
        lo.ambient = ctx->h;
        lo.exact = true;
        lo.max_nodes = opt.max_nodes;
        auto tables = low_index_subgroups(inst.ambient, index, ctx->horbits[members[0]].stabilizer_words, lo);
        for (auto& t : tables) {
            int cnt = 0;
            auto col = label_zero_colors(t, ctx->h, cnt);
            // admissible offsets of each further member: rows in H fixed by its stabilizer
            std::vector<std::vector<int>> choices{{0}};
            for (std::size_t k = 1; k < members.size(); ++k) {
                std::vector<int> fixed;
                for (int r = 0; r < t.size(); ++r) {
                    if (col[r] < 0) continue;
                    bool ok = true;
                    for (const Word& s : ctx->horbits[members[k]].stabilizer_words) ok &= t.act(r, s) == r;
                    if (ok) fixed.push_back(r);
                }
                choices.push_back(std::move(fixed));
            }
            std::vector<int> rows(members.size(), 0);
            auto rec = [&](auto&& self, std::size_t k) -> void {
                if (k == members.size()) {
                    if (opt.precise_only) {
                        for (const auto& ring : coronas) {
                            std::vector<int> seen;
                            for (const auto& pl : ring) {
                                auto pos = std::find(members.begin(), members.end(), pl.horbit);
                                if (pos == members.end()) continue;
                                int c = col[t.act(rows[pos - members.begin()], pl.h.inverse())];
                                if (std::find(seen.begin(), seen.end(), c) != seen.end()) return;
                                seen.push_back(c);
                            }
                        }
                    }
                    out.push_back({t, rows});
                    return;
                }
                for (int r : choices[k]) {
                    rows[k] = r;
                    self(self, k + 1);
                }
            };
            rec(rec, 0);
        }
        return cache.emplace(key, std::move(out)).first->second;
    };

    std::vector<std::vector<int>> partitions;
    std::vector<int> cur;
    if (n > 0) set_partitions(n, cur, 0, partitions);

    std::map<std::vector<int>, ColoringScheme> found;
    for (const auto& part : partitions) {
        const int k = *std::max_element(part.begin(), part.end()) + 1;
        if (k > m) continue;
        std::vector<std::vector<int>> members(k);
        for (int i = 0; i < n; ++i) members[part[i]].push_back(i);
        bool allowed = true;
        std::vector<int> lower(k, 1);
        for (int g = 0; g < k; ++g) {
            if (opt.no_shared_orbit_colors)
                for (int x : members[g]) allowed &= ctx->horbits[x].orbit == ctx->horbits[members[g][0]].orbit;
            if (opt.precise_only) lower[g] = std::max(1, multiplicity(members[g]));
        }
        if (!allowed) continue;
        // compositions of m into k parts with part g >= lower[g]
        std::vector<int> sizes(k, 0);
        auto compose = [&](auto&& self, int g, int left) -> void {
            if (g == k - 1) {
                if (left < lower[g]) return;
                sizes[g] = left;
                std::vector<const std::vector<Candidate>*> lists;
                for (int i = 0; i < k; ++i) {
                    lists.push_back(&candidates(members[i], sizes[i]));
                    if (lists.back()->empty()) return;
                }
                std::vector<std::size_t> pick(k, 0);
                while (true) {
                    ColoringScheme s;
                    s.ctx = ctx;
                    for (int i = 0; i < k; ++i) {
                        const Candidate& c = (*lists[i])[pick[i]];
                        ColorGroup grp;
                        grp.members = members[i];
                        grp.table = c.table;
                        grp.rows = c.rows;
                        s.groups.push_back(std::move(grp));
                    }
                    s.canonicalize();
                    found.emplace(s.key(), std::move(s));
                    int i = 0;
                    while (i < k && ++pick[i] == lists[i]->size()) pick[i++] = 0;
                    if (i == k) break;
                }
                return;
            }
            for (int sz = lower[g]; sz <= left; ++sz) {
                sizes[g] = sz;
                self(self, g + 1, left - sz);
            }
        };
        compose(compose, 0, m);
    }
    std::vector<ColoringScheme> out;
    for (auto& [key, s] : found) {
        if (opt.precise_only && !is_precise(s)) continue;
        out.push_back(std::move(s));
    }
    return out;
}

ColoringScheme scheme_from_subgroups(const TilingInstance& inst, Mode mode, const std::vector<GroupSpec>& specs) {
    auto ctx = coloring_context(inst, mode);
    ColoringScheme s;
    s.ctx = ctx;
    std::vector<int> used(ctx->horbits.size(), 0);
    for (const auto& spec : specs) {
        for (const Word& w : spec.subgroup)
            if (!ctx->h.in_kernel(w)) throw InvalidArgument("generator " + w.str() + " is not in H");
        ColorGroup g;
        g.table = coset_enumerate(SubgroupSpec{inst.ambient, spec.subgroup});
        for (const auto& [orbit, word] : spec.tiles) {
            if (orbit < 0 || orbit >= static_cast<int>(inst.orbits.size()))
                throw InvalidArgument("tile orbit out of range");
            if (!inst.in_G(word)) throw InvalidArgument("tile word " + word.str() + " is not a symmetry");
            auto pl = ctx->place(orbit, word);
            int row = g.table.act(0, pl.h);
            for (const Word& st : ctx->horbits[pl.horbit].stabilizer_words)
                if (g.table.act(row, st) != row)
                    throw InvalidArgument("subgroup does not contain the stabilizer of tile " + word.str());
            if (used[pl.horbit]++) throw InvalidArgument("H-orbit " + ctx->horbits[pl.horbit].name + " given twice");
            g.members.push_back(pl.horbit);
            g.rows.push_back(row);
        }
        if (g.members.empty()) throw InvalidArgument("empty color group");
        s.groups.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) throw InvalidArgument("H-orbit " + ctx->horbits[i].name + " is not colored");
    s.canonicalize();
    return s;
}

}  // namespace tessella

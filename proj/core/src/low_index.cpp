// Low-index subgroup search by backtracking over partial coset tables.
//
// Entries are always filled at the first undefined (row, letter) in row-major
// order, so new rows appear in BFS order and every complete table is already
// standardized: each subgroup is produced exactly once.
//
// Each row carries the parity label of its coset under the ambient map; rows
// may only be joined when labels agree, which keeps J inside the kernel H.
#include <algorithm>

#include "tessella/coset_table.hpp"
#include "tessella/errors.hpp"

namespace tessella {
namespace {

struct State {
    std::vector<CosetTable::Row> rows;
    std::vector<std::uint8_t> label;
    std::vector<int> per_label;  // indexed by label value
};

class Search {
public:
    Search(const Presentation& pres, int max_index, const std::vector<Word>& forced,
           const LowIndexOptions& opt)
        : pres_(pres), opt_(opt), max_per_label_(max_index) {
        using L = Letter;
        const L ls[3] = {L::P, L::Q, L::R};
        for (int g = 0; g < 3; ++g)
            for (int h = 0; h < 3; ++h)
                if (g != h) cycles_[g].push_back(Word{ls[g], ls[h]}.pow(pres.order(ls[g], ls[h])));
        for (const Word& w : forced)
            if (!w.empty()) forced_.push_back(w);
    }

    std::vector<CosetTable> run() {
        State s;
        s.rows.push_back({-1, -1, -1});
        s.label.push_back(0);
        s.per_label.assign(256, 0);
        s.per_label[0] = 1;
        pending_.clear();
        if (propagate(s)) dfs(s);
        return std::move(found_);
    }

private:
    const Presentation& pres_;
    std::vector<Word> forced_;
    LowIndexOptions opt_;
    int max_per_label_;
    std::vector<Word> cycles_[3];
    std::vector<std::pair<int, int>> pending_;
    std::vector<CosetTable> found_;
    std::size_t nodes_ = 0;

    std::uint8_t mask(int g) const { return opt_.ambient.masks[g]; }

    bool assign(State& s, int c, int g, int d) {
        if (s.label[d] != (s.label[c] ^ mask(g))) return false;
        s.rows[c][g] = d;
        s.rows[d][g] = c;
        pending_.emplace_back(c, g);
        return true;
    }

    // Scan w around row c; deduce a single missing entry.
    bool scan(State& s, int c, const Word& w) {
        const auto& L = w.letters();
        const int n = static_cast<int>(L.size());
        int f = c, i = 0;
        while (i < n && s.rows[f][index(L[i])] >= 0) f = s.rows[f][index(L[i++])];
        if (i == n) return f == c;
        int b = c, j = n - 1;
        while (j >= i && s.rows[b][index(L[j])] >= 0) b = s.rows[b][index(L[j--])];
        if (j < i) return f == b;
        if (i == j) return assign(s, f, index(L[i]), b);
        return true;
    }

    bool propagate(State& s) {
        for (;;) {
            for (const Word& w : forced_)
                if (!scan(s, 0, w)) return false;
            if (pending_.empty()) return true;
            auto [c, g] = pending_.back();
            pending_.pop_back();
            for (const Word& w : cycles_[g])
                if (!scan(s, c, w)) return false;
        }
    }

    void dfs(State& s) {
        if (++nodes_ > opt_.max_nodes)
            throw ResourceExhausted("low-index search exceeded node budget");
        int c = -1, g = -1;
        for (std::size_t r = 0; r < s.rows.size() && c < 0; ++r)
            for (int x = 0; x < 3; ++x)
                if (s.rows[r][x] < 0) {
                    c = static_cast<int>(r);
                    g = x;
                    break;
                }
        if (c < 0) {
            complete(s);
            return;
        }
        const std::uint8_t want = s.label[c] ^ mask(g);
        for (int d = 0; d < static_cast<int>(s.rows.size()); ++d) {
            if (s.rows[d][g] >= 0 || s.label[d] != want) continue;
            State t = s;
            pending_.clear();
            if (assign(t, c, g, d) && propagate(t)) dfs(t);
        }
        if (s.per_label[want] < max_per_label_) {
            State t = s;
            t.rows.push_back({-1, -1, -1});
            t.label.push_back(want);
            t.per_label[want]++;
            pending_.clear();
            if (assign(t, c, g, static_cast<int>(t.rows.size()) - 1) && propagate(t)) dfs(t);
        }
    }

    void complete(const State& s) {
        if (opt_.exact && s.per_label[0] != max_per_label_) return;
        CosetTable t(pres_, s.rows, forced_);
        if (!t.validate().empty()) return;
        found_.push_back(std::move(t));
    }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& pres, int max_index,
                                            const std::vector<Word>& forced,
                                            const LowIndexOptions& opt) {
    if (max_index < 1) throw InvalidArgument("max_index must be >= 1");
    if (!opt.ambient.respects(pres))
        throw InvalidArgument("ambient parity map does not respect the relators");
    Search search(pres, max_index, forced, opt);
    return search.run();
}

}  // namespace tessella

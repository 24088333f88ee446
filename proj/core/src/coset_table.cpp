#include "tessella/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tessella/errors.hpp"

namespace tessella {

CosetTable::CosetTable(Presentation pres, std::vector<Row> rows, std::vector<Word> gens)
    : pres_(pres), rows_(std::move(rows)), gens_(std::move(gens)) {}

int CosetTable::act(int row, const Word& w) const {
    for (Letter l : w.letters()) row = rows_[row][index(l)];
    return row;
}

int act(const CosetTable& t, int row, const Word& w) { return t.act(row, w); }
bool contains(const CosetTable& t, const Word& w) { return t.contains(w); }

std::vector<Word> CosetTable::transversal() const {
    std::vector<Word> tr(rows_.size());
    std::vector<char> seen(rows_.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int g = 0; g < 3; ++g) {
            int d = rows_[c][g];
            if (!seen[d]) {
                seen[d] = 1;
                tr[d] = tr[c] * Word{static_cast<Letter>(g)};
                queue.push_back(d);
            }
        }
    }
    return tr;
}

std::vector<Word> CosetTable::schreier_generators() const {
    auto tr = transversal();
    std::vector<Word> out;
    std::set<Word> seen;
    for (std::size_t c = 0; c < rows_.size(); ++c) {
        for (int g = 0; g < 3; ++g) {
            int d = rows_[c][g];
            Word s = tr[c] * Word{static_cast<Letter>(g)} * tr[d].inverse();
            if (s.empty()) continue;
            // s and its inverse generate the same cyclic group
            Word key = std::min(s, s.inverse());
            if (seen.insert(key).second) out.push_back(key);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<Word> CosetTable::minimal_generators() const {
    if (rows_.size() == 1) return {Word{Letter::P}, Word{Letter::Q}, Word{Letter::R}};
    auto cands = schreier_generators();
    const std::size_t limit = default_max_cosets(pres_, rows_.size());
    auto index_of = [&](const std::vector<Word>& gens) -> std::size_t {
        try {
            return static_cast<std::size_t>(coset_enumerate({pres_, gens}, limit).size());
        } catch (const ResourceExhausted&) {
            return 0;
        }
    };
    const std::size_t target = rows_.size();
    // Grow by shortest candidates until the index closes, then prune.
    std::vector<Word> chosen;
    for (const Word& w : cands) {
        chosen.push_back(w);
        if (chosen.size() >= 2 && index_of(chosen) == target) break;
    }
    if (index_of(chosen) != target) chosen = cands;
    for (std::size_t i = chosen.size(); i-- > 0;) {
        auto trial = chosen;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!trial.empty() && index_of(trial) == target) chosen = std::move(trial);
    }
    std::sort(chosen.begin(), chosen.end(), [](const Word& a, const Word& b) {
        return a.str() < b.str();
    });
    return chosen;
}

CosetTable CosetTable::standardized() const {
    std::vector<int> order, pos(rows_.size(), -1);
    order.push_back(0);
    pos[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int g = 0; g < 3; ++g) {
            int d = rows_[order[i]][g];
            if (pos[d] < 0) {
                pos[d] = static_cast<int>(order.size());
                order.push_back(d);
            }
        }
    std::vector<Row> rows(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int g = 0; g < 3; ++g) rows[i][g] = pos[rows_[order[i]][g]];
    return CosetTable(pres_, std::move(rows), gens_);
}

std::string CosetTable::validate() const {
    const int n = size();
    if (n == 0) return "empty table";
    for (int c = 0; c < n; ++c)
        for (int g = 0; g < 3; ++g) {
            int d = rows_[c][g];
            if (d < 0 || d >= n) return "undefined entry at row " + std::to_string(c);
            if (rows_[d][g] != c)
                return std::string("column ") + to_char(static_cast<Letter>(g)) +
                       " is not an involution at row " + std::to_string(c);
        }
    for (const Word& rel : pres_.relators())
        for (int c = 0; c < n; ++c)
            if (act(c, rel) != c) return "relator " + rel.str() + " fails at row " + std::to_string(c);
    for (const Word& w : gens_)
        if (!contains(w)) return "generator " + w.str() + " does not fix row 0";
    if (suborbits(*this, {Word{Letter::P}, Word{Letter::Q}, Word{Letter::R}}).size() != 1)
        return "table is not transitive";
    return {};
}

std::vector<std::vector<int>> suborbits(const CosetTable& t, const std::vector<Word>& gens) {
    const int n = t.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> orbit{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const Word& w : gens) {
                int d = t.act(orbit[i], w);
                if (comp[d] < 0) {
                    comp[d] = comp[s];
                    orbit.push_back(d);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace tessella

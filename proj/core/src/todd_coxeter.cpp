// HLT coset enumeration with coincidence processing, specialised to
// involutory generators: the inverse column of a letter is the column itself.
#include <numeric>

#include "tessella/coset_table.hpp"
#include "tessella/errors.hpp"

namespace tessella {
namespace {

class Enumerator {
public:
    Enumerator(const Presentation& pres, std::size_t max_cosets)
        : pres_(pres), limit_(max_cosets) {
        for (const Word& r : pres.relators()) relators_.push_back(r);
        new_coset();
    }

    CosetTable run(const std::vector<Word>& gens) {
        for (const Word& w : gens) scan_and_fill(0, w);
        for (std::size_t c = 0; c < table_.size(); ++c) {
            for (const Word& rel : relators_) {
                if (!live(c)) break;
                scan_and_fill(static_cast<int>(c), rel);
            }
            if (!live(c)) continue;
            for (int g = 0; g < 3; ++g)
                if (table_[c][g] < 0) define(static_cast<int>(c), g);
        }
        return compact(gens);
    }

private:
    const Presentation& pres_;
    std::size_t limit_;
    std::vector<Word> relators_;
    std::vector<CosetTable::Row> table_;
    std::vector<int> parent_;
    std::vector<int> queue_;

    bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

    int new_coset() {
        if (table_.size() >= limit_)
            throw ResourceExhausted("coset enumeration exceeded " + std::to_string(limit_) +
                                    " cosets in " + pres_.name());
        table_.push_back({-1, -1, -1});
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(table_.size()) - 1;
    }

    void define(int c, int g) {
        int d = new_coset();
        table_[c][g] = d;
        table_[d][g] = c;
    }

    int rep(int c) {
        int r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            int next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        queue_.push_back(b);
    }

    void coincidence(int a, int b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            int e = queue_[i];
            for (int g = 0; g < 3; ++g) {
                int f = table_[e][g];
                if (f < 0) continue;
                table_[f][g] = -1;
                int e1 = rep(e), f1 = rep(f);
                if (table_[e1][g] >= 0)
                    merge(f1, table_[e1][g]);
                else if (table_[f1][g] >= 0)
                    merge(e1, table_[f1][g]);
                else {
                    table_[e1][g] = f1;
                    table_[f1][g] = e1;
                }
            }
        }
    }

    void scan_and_fill(int c, const Word& w) {
        const auto& L = w.letters();
        if (L.empty()) return;
        int f = c, b = c;
        int i = 0, j = static_cast<int>(L.size()) - 1;
        for (;;) {
            while (i <= j && table_[f][index(L[i])] >= 0) f = table_[f][index(L[i++])];
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && table_[b][index(L[j])] >= 0) b = table_[b][index(L[j--])];
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                int g = index(L[i]);
                table_[f][g] = b;
                table_[b][g] = f;
                return;
            }
            define(f, index(L[i]));
        }
    }

    CosetTable compact(const std::vector<Word>& gens) {
        std::vector<int> id(table_.size(), -1);
        int n = 0;
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (live(c)) id[c] = n++;
        std::vector<CosetTable::Row> rows;
        rows.reserve(n);
        for (std::size_t c = 0; c < table_.size(); ++c) {
            if (!live(c)) continue;
            CosetTable::Row row;
            for (int g = 0; g < 3; ++g) row[g] = id[rep(table_[c][g])];
            rows.push_back(row);
        }
        return CosetTable(pres_, std::move(rows), gens).standardized();
    }
};

}  // namespace

std::size_t default_max_cosets(const Presentation& pres, std::size_t expected_index) {
    return 10 * std::max<std::size_t>(expected_index, 1) *
           static_cast<std::size_t>(pres.relator_length_sum());
}

CosetTable coset_enumerate(const SubgroupSpec& sub, std::size_t max_cosets) {
    Enumerator e(sub.parent, max_cosets);
    return e.run(sub.generators);
}

}  // namespace tessella

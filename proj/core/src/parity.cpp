#include "tessella/coset_table.hpp"

#include <set>

namespace tessella {

std::uint8_t ParityMap::of(const Word& w) const {
    std::uint8_t v = 0;
    for (Letter l : w.letters()) v ^= masks[index(l)];
    return v;
}

int ParityMap::image_size() const {
    std::set<std::uint8_t> span{0};
    for (;;) {
        std::set<std::uint8_t> next = span;
        for (auto v : span)
            for (auto m : masks) next.insert(static_cast<std::uint8_t>(v ^ m));
        if (next.size() == span.size()) return static_cast<int>(span.size());
        span = std::move(next);
    }
}

bool ParityMap::respects(const Presentation& pres) const {
    for (const Word& rel : pres.relators())
        if (of(rel) != 0) return false;
    return true;
}

ParityMap ParityMap::with_extra_bit(std::array<bool, 3> bit) const {
    int used = 0;
    for (auto m : masks)
        for (int b = 0; b < 8; ++b)
            if (m >> b & 1) used = std::max(used, b + 1);
    ParityMap out = *this;
    for (int i = 0; i < 3; ++i)
        if (bit[i]) out.masks[i] |= static_cast<std::uint8_t>(1u << used);
    return out;
}

CosetTable CosetTable::from_parity(const Presentation& pres, const ParityMap& map) {
    std::vector<std::uint8_t> labels{0};
    std::vector<Row> rows;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Row row{};
        for (int g = 0; g < 3; ++g) {
            std::uint8_t v = labels[i] ^ map.masks[g];
            std::size_t j = 0;
            while (j < labels.size() && labels[j] != v) ++j;
            if (j == labels.size()) labels.push_back(v);
            row[g] = static_cast<std::int32_t>(j);
        }
        rows.push_back(row);
    }
    return CosetTable(pres, std::move(rows));
}

}  // namespace tessella

#include "tessella/presentation.hpp"

#include "tessella/errors.hpp"

namespace tessella {

Presentation build_triangle_group(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2)
        throw InvalidArgument("triangle group orders must be >= 2");
    return Presentation{p, q, r};
}

int Presentation::order(Letter a, Letter b) const {
    for (Letter l : {Letter::P, Letter::Q, Letter::R})
        if (l != a && l != b) return order_opposite(l);
    throw InvalidArgument("order(a,b) needs distinct letters");
}

std::vector<Word> Presentation::relators() const {
    using L = Letter;
    return {Word{L::Q, L::R}.pow(p), Word{L::R, L::P}.pow(q), Word{L::P, L::Q}.pow(r)};
}

int Presentation::relator_length_sum() const { return 6 + 2 * (p + q + r); }

std::string Presentation::name() const {
    auto part = [](int n) { return n >= 10 ? "(" + std::to_string(n) + ")" : std::to_string(n); };
    return "*" + part(p) + part(q) + part(r);
}

}  // namespace tessella

#include <deque>

#include "tessella/coloring.hpp"
#include "tessella/errors.hpp"

namespace tessella {
namespace {

// Shortest word (shortlex, letters P<Q<R) satisfying pred, up to length 4.
template <class Pred>
std::optional<Word> shortest_word(Pred pred) {
    std::vector<Word> level{Word{}};
    for (int len = 1; len <= 4; ++len) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (Letter l : {Letter::P, Letter::Q, Letter::R}) {
                Word x = w * Word{l};
                if (static_cast<int>(x.size()) != len) continue;
                if (pred(x)) return x;
                next.push_back(x);
            }
        level = std::move(next);
    }
    return std::nullopt;
}

// Generators of S ∩ H for S = <gens> with [S : S ∩ H] <= 2.
std::vector<Word> intersect_index2(const std::vector<Word>& gens, const ParityMap& h) {
    const Word* s0 = nullptr;
    for (const Word& s : gens)
        if (!h.in_kernel(s)) {
            s0 = &s;
            break;
        }
    if (!s0) return gens;
    std::vector<Word> out;
    auto add = [&](const Word& w) {
        if (w.empty()) return;
        for (const Word& o : out)
            if (o == w || o == w.inverse()) return;
        out.push_back(w);
    };
    const Word s0i = s0->inverse();
    for (const Word& s : gens) {
        if (h.in_kernel(s)) {
            add(s);
            add(*s0 * s * s0i);
        } else {
            add(s * s0i);
            add(*s0 * s);
        }
    }
    return out;
}

}  // namespace

ColoringContext::Placement ColoringContext::place(int orbit, const Word& x) const {
    if (h.in_kernel(x)) return {class_of[orbit][0], x};
    if (split[orbit]) return {class_of[orbit][1], x * odd.inverse()};
    return {class_of[orbit][0], x * odd_stabilizer[orbit]};
}

std::shared_ptr<const ColoringContext> coloring_context(const TilingInstance& inst, Mode mode) {
    auto ctx = std::make_shared<ColoringContext>();
    ctx->inst = inst;
    ctx->mode = mode;
    ctx->h = inst.h_map(mode);
    ctx->h_is_g = ctx->h.image_size() == inst.full.image_size();
    if (!ctx->h_is_g) {
        auto w = shortest_word([&](const Word& x) { return inst.in_G(x) && !ctx->h.in_kernel(x); });
        if (!w) throw InvalidArgument("no word separates G from H");
        ctx->odd = *w;
    }
    const int norb = static_cast<int>(inst.orbits.size());
    ctx->class_of.assign(norb, {-1, -1});
    ctx->split.assign(norb, false);
    ctx->odd_stabilizer.assign(norb, Word{});
    for (int j = 0; j < norb; ++j) {
        const auto& spec = inst.orbits[j];
        bool splits = !ctx->h_is_g;
        for (const Word& s : spec.stabilizer)
            if (!ctx->h.in_kernel(s)) {
                splits = false;
                ctx->odd_stabilizer[j] = s;
                break;
            }
        ctx->split[j] = splits;
        auto stab = intersect_index2(spec.stabilizer, ctx->h);
        for (int c = 0; c < (splits ? 2 : 1); ++c) {
            HOrbit o;
            o.index = static_cast<int>(ctx->horbits.size());
            o.orbit = j;
            o.coset_class = c;
            o.representative = c == 0 ? Word{} : ctx->odd;
            for (const Word& s : stab)
                o.stabilizer_words.push_back(c == 0 ? s : ctx->odd * s * ctx->odd.inverse());
            o.name = spec.name + (c == 0 ? "" : "'");
            ctx->class_of[j][c] = o.index;
            ctx->horbits.push_back(std::move(o));
        }
    }

    ctx->vertex_classes.push_back(Word{});
    if (!ctx->h_is_g) {
        bool merged = false;
        for (const Word& s : inst.vertex_stabilizer) merged |= !ctx->h.in_kernel(s);
        if (!merged) ctx->vertex_classes.push_back(ctx->odd);
    }
    for (const Word& u : ctx->vertex_classes) {
        std::vector<ColoringContext::Placement> ring;
        for (const auto& c : inst.corona) ring.push_back(ctx->place(c.orbit, u * c.word));
        ctx->vertex_coronas.push_back(std::move(ring));
    }
    ctx->h_generators = CosetTable::from_parity(inst.ambient, ctx->h).schreier_generators();
    return ctx;
}

std::vector<HOrbit> h_orbits(const TilingInstance& inst, Mode mode) { return coloring_context(inst, mode)->horbits; }

}  // namespace tessella

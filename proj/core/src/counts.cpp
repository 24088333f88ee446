// Closed-form coloring counts, one clause per condition as stated in the
// propositions. Several clauses are stated loosely enough to overlap (for
// instance "the other is even" also covers multiples of 6, which a later
// clause assigns a higher count); overlaps are resolved in favour of the
// clause with the larger count, i.e. the more specific divisibility
// condition.
#include <functional>

#include "tessella/catalog.hpp"
#include "tessella/errors.hpp"

namespace tessella {
namespace {

using Pred = std::function<bool(int)>;

bool div(int n, int x) { return x % n == 0; }
bool even(int x) { return div(2, x); }
bool odd_mult3(int x) { return div(3, x) && !even(x); }

// "one of p and q satisfies X and the other satisfies Y"
bool one_other(int p, int q, const Pred& X, const Pred& Y) {
    return (X(p) && Y(q)) || (X(q) && Y(p));
}

struct Clause {
    int count;
    std::string id;
    bool fires;
};

std::vector<Clause> quasi(int p, int q) {
    return {
        {2, "6|p and 6|q", div(6, p) && div(6, q)},
        {1, "p,q even and p or q not a multiple of 3",
         even(p) && even(q) && (!div(3, p) || !div(3, q))},
        {1, "p,q multiples of 3 and p or q odd", div(3, p) && div(3, q) && (!even(p) || !even(q))},
    };
}

std::vector<Clause> rhombi(int p, int q) {
    return {
        {3, "p,q multiples of 6", div(6, p) && div(6, q)},
        {2, "p,q even, exactly one a multiple of 3", even(p) && even(q) && (div(3, p) != div(3, q))},
        {1, "p,q even, neither a multiple of 3", even(p) && even(q) && !div(3, p) && !div(3, q)},
        {1, "one even, the other an odd multiple of 3", one_other(p, q, even, odd_mult3)},
    };
}

std::vector<Clause> snub_perfect(int p, int q) {
    auto m = [](int n) { return [n](int x) { return div(n, x); }; };
    auto m3n4 = [](int x) { return div(3, x) && !div(4, x); };
    auto m4n3 = [](int x) { return div(4, x) && !div(3, x); };
    auto even_n4 = [](int x) { return even(x) && !div(4, x); };
    auto m6n4 = [](int x) { return div(6, x) && !div(4, x); };
    auto even_n3n4 = [](int x) { return even(x) && !div(3, x) && !div(4, x); };
    return {
        {6, "both multiples of 12", div(12, p) && div(12, q)},
        {5, "one a multiple of 12, the other of 6 but not 4", one_other(p, q, m(12), m6n4)},
        {4, "both multiples of 6 but not 4", m6n4(p) && m6n4(q)},
        {3, "one a multiple of 6, the other an odd multiple of 3", one_other(p, q, m(6), odd_mult3)},
        {3, "one a multiple of 12, the other of 4 but not 3", one_other(p, q, m(12), m4n3)},
        {2, "one a multiple of 12, the other even but not a multiple of 3 or 4",
         one_other(p, q, m(12), even_n3n4)},
        {2, "both odd multiples of 3", odd_mult3(p) && odd_mult3(q)},
        {2, "both multiples of 4 but not 3", m4n3(p) && m4n3(q)},
        {2, "one a multiple of 6 but not 4, the other of 4 but not 3", one_other(p, q, m6n4, m4n3)},
        {1, "one a multiple of 3 but not 4, the other even but not a multiple of 4",
         one_other(p, q, m3n4, even_n4)},
        {1, "one a multiple of 4 but not 3, the other even but not a multiple of 4",
         one_other(p, q, m4n3, even_n4)},
        {1, "one a multiple of 4 but not 3, the other an odd multiple of 3",
         one_other(p, q, m4n3, odd_mult3)},
    };
}

std::vector<Clause> snub_chiral(int p) {
    return {
        {3, "p a multiple of 12", div(12, p)},
        {2, "p a multiple of 6 but not 4", div(6, p) && !div(4, p)},
        {1, "p an odd multiple of 3", odd_mult3(p)},
        {1, "p a multiple of 4 but not 3", div(4, p) && !div(3, p)},
    };
}

std::vector<Clause> hex6_neq(int p, int q) {
    const bool p3 = div(3, p) && !div(5, p), p5 = div(5, p) && !div(3, p), p15 = div(15, p);
    return {
        {6, "15|p and 12|q", p15 && div(12, q)},
        {4, "15|p, q a multiple of 4 but not 3", p15 && div(4, q) && !div(3, q)},
        {4, "15|p, q a multiple of 6 but not 4", p15 && div(6, q) && !div(4, q)},
        {4, "5|p but not 3, 12|q", p5 && div(12, q)},
        {3, "5|p but not 3, q a multiple of 4 but not 3", p5 && div(4, q) && !div(3, q)},
        {2, "15|p, q even but not a multiple of 4", p15 && even(q) && !div(4, q)},
        {2, "15|p, q an odd multiple of 3", p15 && odd_mult3(q)},
        {2, "3|p but not 5, 6|q", p3 && div(6, q)},
        {2, "5|p but not 3, q a multiple of 6 but not 4", p5 && div(6, q) && !div(4, q)},
        {1, "3|p but not 5, q even", p3 && even(q)},
        {1, "5|p but not 3, q even but not a multiple of 4", p5 && even(q) && !div(4, q)},
        {1, "3|p but not 5, q an odd multiple of 3", p3 && odd_mult3(q)},
        {1, "5|p but not 3, q an odd multiple of 3", p5 && odd_mult3(q)},
    };
}

std::vector<Clause> clauses(Family family, const std::vector<int>& v, Mode mode) {
    const int p = v.at(0);
    const int q = v.size() > 1 ? v[1] : 0;
    switch (family) {
        case Family::ThreeValent: {
            bool all_even = true;
            for (int g : v) all_even &= even(g);
            return {{1, "every gon even", all_even}};
        }
        case Family::Quasi: return quasi(p, q);
        case Family::Rhombi: return rhombi(p, q);
        case Family::Snub5:
            if (p == q) {
                if (mode == Mode::Full) return {};  // no perfect 5-colorings when p = q
                return snub_chiral(p);
            }
            return snub_perfect(p, q);
        case Family::Hex6Eq: return {{1, "3|p", div(3, p)}};
        case Family::Hex6Neq: return hex6_neq(p, q);
    }
    return {};
}

}  // namespace

std::vector<std::pair<int, std::string>> fired_clauses(Family family, const std::vector<int>& params,
                                                       Mode mode) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& c : clauses(family, params, mode))
        if (c.fires) out.emplace_back(c.count, c.id);
    return out;
}

int expected_count(Family family, const std::vector<int>& params, Mode mode) {
    if (mode == Mode::Chiral && !(family == Family::Snub5 && params.size() == 2 && params[0] == params[1]))
        throw InvalidArgument("chirally perfect counts are only defined for snub5 with p = q");
    int best = 0;
    for (const auto& c : clauses(family, params, mode))
        if (c.fires) best = std::max(best, c.count);
    return best;
}

}  // namespace tessella

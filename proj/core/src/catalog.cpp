#include "tessella/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tessella/errors.hpp"

namespace tessella {
namespace {

using L = Letter;

Word W(const char* s) { return Word::parse(s); }
std::vector<Word> Ws(std::initializer_list<const char*> ss) {
    std::vector<Word> out;
    for (auto s : ss) out.push_back(Word::parse(s));
    return out;
}

void need(bool ok, const std::string& msg) {
    if (!ok) throw InvalidArgument(msg);
}

void finish(TilingInstance& t) {
    t.chiral = t.full.with_extra_bit({true, true, true});
    if (t.chiral.image_size() == t.full.image_size()) t.chiral = t.full;
    for (const auto& c : t.corona) t.config.push_back(t.orbits[c.orbit].gon);
    t.geometry = classify_geometry(t.config);
    if (classify_triangle(t.ambient) != t.geometry)
        throw InvalidArgument("vertex configuration and triangle group disagree on geometry");
}

// (p.q.p.q): vertex at the right-angle corner C of *pq2.
TilingInstance quasi(int p, int q) {
    need(p >= 3 && q >= 3, "quasi needs p, q >= 3");
    TilingInstance t;
    t.family = Family::Quasi;
    t.params = {p, q};
    t.ambient = build_triangle_group(p, q, 2);
    t.orbits = {{"p-gon", p, Ws({"Q", "R"}), {}}, {"q-gon", q, Ws({"R", "P"}), {}}};
    t.corona = {{0, {}}, {1, {}}, {0, W("PQ")}, {1, W("PQ")}};
    t.vertex_stabilizer = Ws({"P", "Q"});
    t.point_mirrors = {L::P, L::Q};
    return t;
}

// (p.4.q.4): vertex on the mirror R through the p- and q-gon centres.
TilingInstance rhombi(int p, int q) {
    need(p >= 3 && q >= 3, "rhombi needs p, q >= 3");
    need(p != q, "rhombi needs p != q");
    TilingInstance t;
    t.family = Family::Rhombi;
    t.params = {p, q};
    t.ambient = build_triangle_group(p, q, 2);
    t.orbits = {{"p-gon", p, Ws({"Q", "R"}), {}},
                {"q-gon", q, Ws({"R", "P"}), {}},
                {"square", 4, Ws({"P", "Q"}), {}}};
    t.corona = {{0, {}}, {2, {}}, {1, {}}, {2, W("R")}};
    t.vertex_stabilizer = Ws({"R"});
    t.point_mirrors = {L::R};
    t.edge_words = Ws({"P", "Q"});
    return t;
}

// (3.3.p.3.q): snub, symmetry = rotation subgroup (even words).
TilingInstance snub5(int p, int q) {
    need(p >= 3 && q >= 3, "snub5 needs p, q >= 3");
    TilingInstance t;
    t.family = Family::Snub5;
    t.params = {p, q};
    t.ambient = build_triangle_group(p, q, 2);
    t.full = ParityMap{{1, 1, 1}};
    // for p = q the reflections of p*2 are not words in *pp2
    t.full_is_words = p != q;
    t.orbits = {{"p-gon", p, Ws({"QR"}), {}}, {"q-gon", q, Ws({"RP"}), {}}, {"triangle", 3, {}, {}}};
    t.corona = {{2, W("PR")}, {2, W("QR")}, {0, {}}, {2, {}}, {1, {}}};
    t.edge_words = Ws({"QR", "RP", "PQ"});
    return t;
}

// (3.p.3.p.3.p): vertex at the corner C of *p33.
TilingInstance hex6eq(int p) {
    need(p >= 3, "hex6eq needs p >= 3");
    TilingInstance t;
    t.family = Family::Hex6Eq;
    t.params = {p};
    t.ambient = build_triangle_group(p, 3, 3);
    t.orbits = {{"p-gon", p, Ws({"Q", "R"}), {}}, {"triangle", 3, Ws({"R", "P"}), {}}};
    t.corona = {{0, {}}, {1, {}}, {0, W("P")}, {1, W("PQ")}, {0, W("QP")}, {1, W("Q")}};
    t.vertex_stabilizer = Ws({"P", "Q"});
    t.point_mirrors = {L::P, L::Q};
    return t;
}

// (3.p.3.q.3.q): inside *(2p)q2, symmetry q*p = kernel of P,R -> 1, Q -> 0.
TilingInstance hex6neq(int p, int q) {
    need(p >= 3 && q >= 3, "hex6neq needs p, q >= 3");
    need(p != q, "hex6neq needs p != q");
    TilingInstance t;
    t.family = Family::Hex6Neq;
    t.params = {p, q};
    t.ambient = build_triangle_group(2 * p, q, 2);
    t.full = ParityMap{{1, 0, 1}};
    t.orbits = {{"p-gon", p, Ws({"Q", "RQR"}), {}},
                {"q-gon", q, Ws({"PR"}), {}},
                {"triangle", 3, Ws({"Q"}), {}}};
    t.corona = {{0, {}}, {2, W("RP")}, {1, {}}, {2, {}}, {1, W("Q")}, {2, W("QRP")}};
    t.vertex_stabilizer = Ws({"Q"});
    t.point_mirrors = {L::Q};
    t.edge_words = Ws({"RQR", "PR"});
    return t;
}

// 3-valent: (q.2p'.2p') truncations and (2a.2b.2c) omnitruncations.
TilingInstance three_valent(const std::vector<int>& g) {
    need(g.size() == 3, "3val needs three polygon sizes");
    for (int x : g) need(x >= 3, "3val polygon sizes must be >= 3");
    TilingInstance t;
    t.family = Family::ThreeValent;
    t.params = g;
    const bool all_distinct = g[0] != g[1] && g[1] != g[2] && g[0] != g[2];
    if (all_distinct) {
        for (int x : g) need(x % 2 == 0, "(a.b.c) with distinct sizes needs all sizes even");
        t.ambient = build_triangle_group(g[0] / 2, g[1] / 2, g[2] / 2);
        t.orbits = {{std::to_string(g[0]) + "-gon", g[0], Ws({"Q", "R"}), {}},
                    {std::to_string(g[1]) + "-gon", g[1], Ws({"R", "P"}), {}},
                    {std::to_string(g[2]) + "-gon", g[2], Ws({"P", "Q"}), {}}};
        t.corona = {{0, {}}, {1, {}}, {2, {}}};
        t.edge_words = Ws({"P", "Q", "R"});
        return t;
    }
    // the repeated size is 2p', the remaining one q
    int two_p, q;
    if (g[0] == g[1]) two_p = g[0], q = g[2];
    else if (g[1] == g[2]) two_p = g[1], q = g[0];
    else two_p = g[0], q = g[1];
    need(two_p % 2 == 0, "(q.2p.2p) needs the repeated size even");
    t.ambient = build_triangle_group(two_p / 2, q, 2);
    t.orbits = {{std::to_string(two_p) + "-gon", two_p, Ws({"Q", "R"}), {}},
                {std::to_string(q) + "-gon", q, Ws({"R", "P"}), {}}};
    t.corona = {{0, {}}, {1, {}}, {0, W("P")}};
    t.vertex_stabilizer = Ws({"P"});
    t.point_mirrors = {L::P};
    t.edge_words = Ws({"Q", "R"});
    return t;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::ThreeValent: return "3val";
        case Family::Quasi: return "quasi";
        case Family::Rhombi: return "rhombi";
        case Family::Snub5: return "snub5";
        case Family::Hex6Eq: return "hex6eq";
        case Family::Hex6Neq: return "hex6neq";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view s) {
    for (Family f : {Family::ThreeValent, Family::Quasi, Family::Rhombi, Family::Snub5,
                     Family::Hex6Eq, Family::Hex6Neq})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

std::string_view geometry_name(Geometry g) {
    switch (g) {
        case Geometry::Spherical: return "spherical";
        case Geometry::Euclidean: return "euclidean";
        case Geometry::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

std::string dot_notation(const std::vector<int>& config) {
    std::string s = "(";
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(config[i]);
    }
    return s + ")";
}

std::string TilingInstance::label() const {
    // print in the paper's customary starting position
    std::vector<int> c = config;
    if (family == Family::Snub5) c = {3, 3, params[0], 3, params[1]};
    if (family == Family::Hex6Neq) c = {3, params[0], 3, params[1], 3, params[1]};
    if (family == Family::Rhombi) c = {params[0], 4, params[1], 4};
    if (family == Family::ThreeValent && params.size() == 3 && orbits.size() == 2)
        c = {orbits[1].gon, orbits[0].gon, orbits[0].gon};
    return dot_notation(c);
}

std::string TilingInstance::spec() const {
    std::string s(family_name(family));
    s += ":";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(params[i]);
    }
    return s;
}

Geometry classify_geometry(const std::vector<int>& config) {
    // sum of interior angles (g-2)/g * pi against 2 pi, in exact integers
    long long num = 0, den = 1;
    for (int g : config) {
        if (g < 3) throw InvalidArgument("polygons need at least 3 sides");
        num = num * g + (g - 2) * den;
        den *= g;
        long long d = std::gcd(num, den);
        num /= d;
        den /= d;
    }
    if (num < 2 * den) return Geometry::Spherical;
    if (num == 2 * den) return Geometry::Euclidean;
    return Geometry::Hyperbolic;
}

Geometry classify_triangle(const Presentation& pr) {
    // 1/p + 1/q + 1/r against 1
    long long lhs = 1LL * pr.q * pr.r + 1LL * pr.p * pr.r + 1LL * pr.p * pr.q;
    long long rhs = 1LL * pr.p * pr.q * pr.r;
    if (lhs > rhs) return Geometry::Spherical;
    if (lhs == rhs) return Geometry::Euclidean;
    return Geometry::Hyperbolic;
}

TilingInstance instantiate(Family family, const std::vector<int>& params) {
    auto arity = [&](std::size_t n) {
        need(params.size() == n, std::string(family_name(family)) + " takes " + std::to_string(n) +
                                     " parameter" + (n > 1 ? "s" : ""));
    };
    TilingInstance t;
    switch (family) {
        case Family::Quasi: arity(2); t = quasi(params[0], params[1]); break;
        case Family::Rhombi: arity(2); t = rhombi(params[0], params[1]); break;
        case Family::Snub5: arity(2); t = snub5(params[0], params[1]); break;
        case Family::Hex6Eq: arity(1); t = hex6eq(params[0]); break;
        case Family::Hex6Neq: arity(2); t = hex6neq(params[0], params[1]); break;
        case Family::ThreeValent: arity(3); t = three_valent(params); break;
    }
    finish(t);
    return t;
}

TilingInstance parse_instance(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw InvalidArgument("instance spec must look like family:p,q");
    auto fam = family_from_name(spec.substr(0, colon));
    if (!fam) throw InvalidArgument("unknown family '" + std::string(spec.substr(0, colon)) + "'");
    std::vector<int> params;
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto tok = rest.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InvalidArgument("bad parameter '" + std::string(tok) + "'");
        params.push_back(v);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return instantiate(*fam, params);
}

}  // namespace tessella

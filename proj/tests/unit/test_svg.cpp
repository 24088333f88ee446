#include <regex>
#include <set>

#include "doctest.h"
#include "tessella/audit.hpp"
#include "tessella/errors.hpp"
#include "tessella/svg.hpp"

using namespace tessella;

namespace {

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
    return n;
}

std::set<std::string> fills(const std::string& svg) {
    std::set<std::string> out;
    std::regex re("<path class=\"tile[^\"]*\" fill=\"(#[0-9a-f]{6})\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        out.insert((*it)[1]);
    return out;
}

ColoringScheme first_precise(const TilingInstance& inst) {
    EnumerateOptions opt;
    opt.precise_only = true;
    auto all = enumerate_colorings(inst, Mode::Full, inst.valency(), opt);
    REQUIRE_FALSE(all.empty());
    return all.front();
}

}  // namespace

TEST_CASE("palette") {
    auto p = default_palette(5);
    CHECK(p.size() == 5u);
    CHECK(std::set<std::string>(p.begin(), p.end()).size() == 5u);
    for (const auto& c : p) CHECK(std::regex_match(c, std::regex("#[0-9a-f]{6}")));
}

TEST_CASE("one path per tile, one fill per color") {
    for (const char* spec : {"quasi:6,4", "3val:4,6,12", "snub5:3,4", "hex6neq:3,4"}) {
        CAPTURE(spec);
        auto inst = parse_instance(spec);
        auto real = realize(inst);
        auto patch = realize_patch(real, 3);
        auto s = first_precise(inst);
        auto svg = render(patch, &s);
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(count(svg, "<svg") == 1);
        CHECK(count(svg, "</svg>") == 1);
        CHECK(svg.find("viewBox=\"-1.05 -1.05 2.1 2.1\"") != std::string::npos);
        CHECK(static_cast<int>(fills(svg).size()) == s.m);
        // spherical renders drop the far side; everything else draws every tile
        if (inst.geometry != Geometry::Spherical)
            CHECK(count(svg, "<path class=\"tile") == static_cast<int>(patch.tiles.size()));
        CHECK(render(patch, &s) == svg);
        auto plain = render(patch, nullptr);
        CHECK(fills(plain).size() == 1u);
    }
}

TEST_CASE("hyperbolic renders clip to the disk") {
    auto real = realize(parse_instance("quasi:6,4"));
    auto svg = render(realize_patch(real, 2), nullptr);
    CHECK(svg.find("clip-path") != std::string::npos);
    CHECK(svg.find("<circle cx=\"0\" cy=\"0\" r=\"1\"") != std::string::npos);
}

TEST_CASE("empty patch") {
    auto real = realize(parse_instance("quasi:4,4"));
    Patch empty;
    empty.real = &real;
    auto svg = render(empty, nullptr);
    CHECK(count(svg, "</svg>") == 1);
    CHECK(count(svg, "<path") == 0);
}

TEST_CASE("errors") {
    auto inst = parse_instance("quasi:6,4");
    auto real = realize(inst);
    auto patch = realize_patch(real, 2);
    auto s = first_precise(inst);
    RenderOptions opt;
    opt.palette = {"#000000"};
    CHECK_THROWS_AS(render(patch, &s, opt), InvalidArgument);
    CHECK_THROWS_AS(overlay_mirrors(patch, parse_word_list("PQ")), InvalidArgument);
    CHECK_NOTHROW(overlay_mirrors(patch, parse_word_list("R")));
}

TEST_CASE("mirror overlay") {
    auto real = realize(parse_instance("3val:8,6,6"));
    auto patch = realize_patch(real, 2);
    auto frag = overlay_mirrors(patch, parse_word_list("PRP,Q,R"));
    CHECK(count(frag, "<circle") + count(frag, "<path") + count(frag, "<line") == 3);
    RenderOptions opt;
    opt.overlay_words = parse_word_list("PRP,Q,R");
    auto svg = render(patch, nullptr, opt);
    CHECK(svg.find(frag) != std::string::npos);
}

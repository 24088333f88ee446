// tessella: enumerate, verify, render and inspect perfect precise colorings
// of semiregular tilings.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tessella/audit.hpp"
#include "tessella/errors.hpp"
#include "tessella/svg.hpp"

using namespace tessella;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kExhausted = 3, kGeometry = 4 };

// "3..10,15" -> {3,...,10,15}
std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        auto dots = part.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                int a = std::stoi(part.substr(0, dots)), b = std::stoi(part.substr(dots + 2));
                if (b < a) throw InvalidArgument("empty range " + part);
                for (int x = a; x <= b; ++x) out.push_back(x);
            }
        } catch (const std::logic_error&) {
            throw InvalidArgument("bad range '" + part + "'");
        }
    }
    if (out.empty()) throw InvalidArgument("empty range '" + s + "'");
    return out;
}

Mode parse_mode(const std::string& s) {
    if (s == "full") return Mode::Full;
    if (s == "chiral") return Mode::Chiral;
    throw InvalidArgument("mode must be full or chiral");
}

json scheme_json(const ColoringScheme& s, int index) {
    json j;
    j["index"] = index;
    j["colors"] = s.m;
    auto gens = s.subgroup_generators();
    for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
        const auto& g = s.groups[gi];
        json grp;
        grp["first_color"] = g.base + 1;
        grp["index"] = g.index;
        grp["subgroup"] = join(gens[gi], ",");
        auto tr = g.table.transversal();
        for (std::size_t k = 0; k < g.members.size(); ++k) {
            const HOrbit& o = s.ctx->horbits[g.members[k]];
            grp["tiles"].push_back({{"orbit", o.name}, {"word", (tr[g.rows[k]] * o.representative).str()}});
        }
        j["groups"].push_back(grp);
    }
    j["precise"] = is_precise(s);
    return j;
}

int cmd_enumerate(const std::string& spec, int colors, const std::string& mode_s, bool precise, bool no_shared,
                  bool as_json) {
    TilingInstance inst = parse_instance(spec);
    Mode mode = parse_mode(mode_s);
    if (colors == 0) colors = inst.valency();
    EnumerateOptions opt;
    opt.precise_only = precise;
    opt.no_shared_orbit_colors = no_shared;
    auto schemes = enumerate_colorings(inst, mode, colors, opt);
    if (as_json) {
        json j;
        j["instance"] = inst.spec();
        j["label"] = inst.label();
        j["mode"] = mode_s;
        j["colors"] = colors;
        j["schemes"] = json::array();
        for (std::size_t i = 0; i < schemes.size(); ++i) j["schemes"].push_back(scheme_json(schemes[i], static_cast<int>(i + 1)));
        j["count"] = schemes.size();
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        std::cout << "#" << i + 1 << ' ' << schemes[i].serialize();
    }
    std::cout << schemes.size() << " scheme" << (schemes.size() == 1 ? "" : "s") << " for " << inst.label() << " with "
              << colors << " colors (" << mode_s << (precise ? ", precise" : "") << ")\n";
    return kOk;
}

int cmd_verify(const std::string& family_s, const std::string& ps, const std::string& qs, const std::string& rs,
               const std::string& mode_s, unsigned threads, bool as_json) {
    auto family = family_from_name(family_s);
    if (!family) throw InvalidArgument("unknown family '" + family_s + "'");
    Mode mode = parse_mode(mode_s);
    auto P = parse_range(ps);
    std::vector<std::vector<int>> cells, skipped;
    auto admissible = [&](const std::vector<int>& c) {
        try {
            instantiate(*family, c);
            expected_count(*family, c, mode);
            return true;
        } catch (const InvalidArgument&) {
            return false;
        }
    };
    auto add = [&](std::vector<int> c) { (admissible(c) ? cells : skipped).push_back(std::move(c)); };
    if (*family == Family::Hex6Eq) {
        for (int p : P) add({p});
    } else if (*family == Family::ThreeValent) {
        if (qs.empty() || rs.empty()) throw InvalidArgument("3val needs --p, --q and --r");
        for (int p : P)
            for (int q : parse_range(qs))
                for (int r : parse_range(rs)) add({p, q, r});
    } else {
        if (qs.empty()) throw InvalidArgument(family_s + " needs --q");
        for (int p : P)
            for (int q : parse_range(qs)) add({p, q});
    }
    auto rows = verify_proposition(*family, cells, mode, threads);
    int failed = 0;
    for (const auto& r : rows) failed += !r.pass();
    if (as_json) {
        json j;
        j["family"] = family_s;
        j["mode"] = mode_s;
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json x{{"params", r.params}, {"label", r.label}, {"enumerated", r.enumerated}, {"expected", r.expected},
                   {"pass", r.pass()}};
            if (!r.error.empty()) x["error"] = r.error;
            j["rows"].push_back(x);
        }
        j["skipped"] = skipped;
        j["failed"] = failed;
        std::cout << j.dump(2) << '\n';
    } else {
        std::printf("%-14s %-22s %10s %9s  %s\n", "params", "tiling", "enumerated", "expected", "result");
        for (const auto& r : rows) {
            std::string params;
            for (std::size_t i = 0; i < r.params.size(); ++i) params += (i ? "," : "") + std::to_string(r.params[i]);
            std::printf("%-14s %-22s %10d %9d  %s\n", params.c_str(), r.label.c_str(), r.enumerated, r.expected,
                        r.pass() ? "pass" : ("FAIL " + r.error).c_str());
        }
        std::printf("%zu cells, %d failed, %zu skipped (outside the family or the proposition)\n", rows.size(),
                    failed, skipped.size());
    }
    return failed ? kMismatch : kOk;
}

int cmd_render(const std::string& spec, int coloring, int radius, const std::string& out, const std::string& mode_s,
               int colors, const std::string& overlay, bool no_shared) {
    TilingInstance inst = parse_instance(spec);
    Mode mode = parse_mode(mode_s);
    if (radius < 1 || radius > 5) throw InvalidArgument("radius must be in 1..5");
    Realization real = realize(inst);
    Patch patch = realize_patch(real, radius);
    RenderOptions ro;
    ro.label = inst.label();
    if (!overlay.empty()) ro.overlay_words = parse_word_list(overlay);
    std::vector<ColoringScheme> schemes;
    const ColoringScheme* chosen = nullptr;
    if (coloring > 0) {
        EnumerateOptions opt;
        opt.precise_only = true;
        opt.no_shared_orbit_colors = no_shared;
        schemes = enumerate_colorings(inst, mode, colors ? colors : inst.valency(), opt);
        if (coloring > static_cast<int>(schemes.size()))
            throw InvalidArgument("--coloring " + std::to_string(coloring) + " but only " +
                                  std::to_string(schemes.size()) + " precise schemes exist");
        chosen = &schemes[coloring - 1];
    }
    std::string svg = render(patch, chosen, ro);
    if (out.empty() || out == "-") {
        std::cout << svg;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw InvalidArgument("cannot write " + out);
        f << svg;
    }
    return kOk;
}

int cmd_info(const std::string& spec, bool as_json) {
    TilingInstance inst = parse_instance(spec);
    const auto& pr = inst.ambient;
    json j;
    j["instance"] = inst.spec();
    j["label"] = inst.label();
    j["geometry"] = std::string(geometry_name(inst.geometry));
    j["triangle_group"] = pr.name();
    j["full_symmetry"] = inst.full_is_words
                             ? (inst.full.is_trivial() ? "all of " + pr.name()
                                                       : "index " + std::to_string(inst.full.image_size()) + " in " +
                                                             pr.name())
                             : "rotations of " + pr.name() + " and a reflection in a shared triangle edge";
    j["valency"] = inst.valency();
    for (const auto& o : inst.orbits)
        j["orbits"].push_back({{"name", o.name}, {"gon", o.gon}, {"stabilizer", join(o.stabilizer, ",")}});
    j["vertex_stabilizer"] = join(inst.vertex_stabilizer, ",");
    for (const auto& c : inst.corona)
        j["corona"].push_back({{"orbit", inst.orbits[c.orbit].name}, {"word", c.word.str()}});
    if (as_json) {
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::cout << inst.label() << "  (" << inst.spec() << ")\n";
    std::cout << "  geometry        " << j["geometry"].get<std::string>() << '\n';
    std::cout << "  triangle group  " << pr.name() << '\n';
    std::cout << "  symmetry        " << j["full_symmetry"].get<std::string>() << '\n';
    std::cout << "  tile orbits\n";
    for (const auto& o : inst.orbits)
        std::cout << "    " << o.name << "  " << o.gon << "-gon, stabilizer <" << join(o.stabilizer, ",") << ">\n";
    std::cout << "  vertex          <" << join(inst.vertex_stabilizer, ",") << ">\n";
    std::cout << "  corona          ";
    for (const auto& c : inst.corona) std::cout << inst.orbits[c.orbit].name << '@' << c.word.str() << ' ';
    std::cout << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect precise colorings of semiregular tilings"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    std::string spec, mode = "full", family, ps, qs, rs, out, overlay;
    int colors = 0, coloring = 0, radius = 3;
    unsigned threads = 0;
    bool precise = false, no_shared = false;

    auto* en = app.add_subcommand("enumerate", "List coloring schemes of an instance");
    en->add_option("instance", spec, "e.g. quasi:6,4")->required();
    en->add_option("--colors,-m", colors, "Number of colors (default: valency)");
    en->add_option("--mode", mode, "full or chiral");
    en->add_flag("--precise-only", precise, "Keep only precise colorings");
    en->add_flag("--no-shared-orbit-colors", no_shared, "Tile orbits do not share colors");
    en->add_flag("--json", as_json, "Emit JSON");

    auto* ve = app.add_subcommand("verify", "Compare enumerated counts with the closed forms");
    ve->add_option("--family", family, "3val, quasi, rhombi, snub5, hex6eq, hex6neq")->required();
    ve->add_option("--p", ps, "Range such as 3..13,18")->required();
    ve->add_option("--q", qs, "Range for the second parameter");
    ve->add_option("--r", rs, "Range for the third parameter (3val)");
    ve->add_option("--mode", mode, "full or chiral");
    ve->add_option("--threads", threads, "Worker threads (default: all cores)");
    ve->add_flag("--json", as_json, "Emit JSON");

    auto* re = app.add_subcommand("render", "Write an SVG of a patch, optionally colored");
    re->add_option("instance", spec)->required();
    re->add_option("--coloring,-k", coloring, "1-based scheme number among the precise schemes (0: none)");
    re->add_option("--radius,-r", radius, "Patch radius in coronas (1..5)");
    re->add_option("--colors,-m", colors, "Number of colors (default: valency)");
    re->add_option("--mode", mode, "full or chiral");
    re->add_option("--overlay", overlay, "Mirror words to draw, e.g. \"PRP,Q,R\"");
    re->add_flag("--no-shared-orbit-colors", no_shared, "Tile orbits do not share colors");
    re->add_option("-o,--output", out, "Output file (default: stdout)");

    auto* in = app.add_subcommand("info", "Describe an instance");
    in->add_option("instance", spec)->required();
    in->add_flag("--json", as_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*en) return cmd_enumerate(spec, colors, mode, precise, no_shared, as_json);
        if (*ve) return cmd_verify(family, ps, qs, rs, mode, threads, as_json);
        if (*re) return cmd_render(spec, coloring, radius, out, mode, colors, overlay, no_shared);
        if (*in) return cmd_info(spec, as_json);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const ResourceExhausted& e) {
        std::cerr << "resource exhausted: " << e.what() << '\n';
        return kExhausted;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << '\n';
        return kGeometry;
    }
    return kOk;
}

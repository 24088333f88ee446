#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "tessella/errors.hpp"
#include "tessella/svg.hpp"

namespace tessella {
namespace {

std::string num(double x) {
    if (std::abs(x) < 5e-7) x = 0;  // no "-0.000000"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

// Screen coordinates: y points down in SVG.
std::string pt(const Vec2& p) { return num(p.x()) + "," + num(-p.y()); }

std::string hsl_hex(double h, double s, double l) {
    auto f = [&](double n) {
        double k = std::fmod(n + h / 30.0, 12.0);
        double a = s * std::min(l, 1 - l);
        return l - a * std::max(-1.0, std::min({k - 3, 9 - k, 1.0}));
    };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(255 * f(0))),
                  static_cast<int>(std::lround(255 * f(8))), static_cast<int>(std::lround(255 * f(4))));
    return buf;
}

struct View {
    const ModelSpace* M = nullptr;
    double scale = 1;
    Vec2 at(const Vec3& x) const { return scale * M->project(x); }
};

View make_view(const Patch& patch) {
    View v;
    v.M = &patch.model();
    if (v.M->kind == Geometry::Euclidean) {
        double inner = std::numeric_limits<double>::infinity();
        for (const auto& vx : patch.vertices)
            if (!vx.complete) inner = std::min(inner, v.M->project(vx.point).norm());
        if (std::isfinite(inner) && inner > 0) v.scale = 1 / inner;
    }
    return v;
}

// Geodesic edge a -> b as an SVG path command (the pen is already at a).
std::string edge(const View& view, const Vec3& a3, const Vec3& b3, double stroke) {
    const Vec2 a = view.at(a3), b = view.at(b3);
    if (view.M->kind == Geometry::Euclidean) return " L" + pt(b);
    if (view.M->kind == Geometry::Spherical) {
        // projected great circles: short polyline along the slerp
        std::string out;
        for (int i = 1; i <= 8; ++i) {
            double t = i / 8.0;
            out += " L" + pt(view.at(((1 - t) * a3 + t * b3).normalized()));
        }
        return out;
    }
    // circle through a, b and the inverse of a in the unit circle
    const double s = view.scale;
    const Vec2 ua = a / s, ub = b / s;
    const double cross = ua.x() * ub.y() - ua.y() * ub.x();
    if (std::abs(cross) < 1e-12) return " L" + pt(b);
    const Vec2 ia = ua / ua.squaredNorm();
    // circumcenter of ua, ub, ia
    const double d = 2 * (ua.x() * (ub.y() - ia.y()) + ub.x() * (ia.y() - ua.y()) + ia.x() * (ua.y() - ub.y()));
    if (std::abs(d) < 1e-14) return " L" + pt(b);
    auto sq = [](const Vec2& p) { return p.squaredNorm(); };
    Vec2 c((sq(ua) * (ub.y() - ia.y()) + sq(ub) * (ia.y() - ua.y()) + sq(ia) * (ua.y() - ub.y())) / d,
           (sq(ua) * (ia.x() - ub.x()) + sq(ub) * (ua.x() - ia.x()) + sq(ia) * (ub.x() - ua.x())) / d);
    const double r = (ua - c).norm() * s;
    const double half = (b - a).norm() / 2;
    const double sagitta = r - std::sqrt(std::max(0.0, r * r - half * half));
    if (!(sagitta >= stroke / 2) || !std::isfinite(r)) return " L" + pt(b);
    const double turn = (ua.x() - c.x()) * (ub.y() - c.y()) - (ua.y() - c.y()) * (ub.x() - c.x());
    return " A" + num(r) + "," + num(r) + " 0 0," + (turn > 0 ? "1" : "0") + " " + pt(b);
}

bool visible(const View& view, const PatchTile& t) {
    // keep the far side of the sphere out of the stereographic picture
    if (view.M->kind != Geometry::Spherical) return true;
    for (const Vec3& v : t.polygon)
        if (v.z() < -0.35) return false;
    return true;
}

}  // namespace

std::vector<std::string> default_palette(int m) {
    std::vector<std::string> out;
    for (int i = 0; i < m; ++i) out.push_back(hsl_hex(360.0 * i / std::max(1, m), 0.65, 0.6));
    return out;
}

std::string overlay_mirrors(const Patch& patch, const std::vector<Word>& words, double stroke_width) {
    std::string out = "<g class=\"mirrors\" fill=\"none\" stroke=\"#c00000\" stroke-width=\"" +
                      num(2 * stroke_width) + "\" stroke-dasharray=\"" + num(6 * stroke_width) + "," +
                      num(3 * stroke_width) + "\">\n";
    if (!patch.real) return out + "</g>\n";
    const View view = make_view(patch);
    const ModelSpace& M = *view.M;
    for (const Word& w : words) {
        const Mat3 m = patch.real->matrix(w);
        if (Isometry{m}.orientation() != -1)
            throw InvalidArgument("not-a-reflection: " + w.str() + " preserves orientation");
        if ((m * m - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-7)
            throw InvalidArgument("not-a-reflection: " + w.str() + " has no fixed line");
        out += "<!-- " + w.str() + " -->\n";
        if (M.kind == Geometry::Euclidean) {
            Eigen::Matrix2d R = m.topLeftCorner<2, 2>();
            Vec2 t = m.topRightCorner<2, 1>();
            Eigen::Matrix2d K = R - Eigen::Matrix2d::Identity();
            Vec2 u = K.col(0).norm() > K.col(1).norm() ? K.col(0) : K.col(1);
            u.normalize();                           // normal of the fixed line
            Vec2 foot = u * (u.dot(t) / 2);          // closest point to the origin
            Vec2 dir(-u.y(), u.x());
            Vec2 a = view.scale * (foot - 1e3 * dir), b = view.scale * (foot + 1e3 * dir);
            out += "<path d=\"M" + pt(a) + " L" + pt(b) + "\"/>\n";
            continue;
        }
        // normal: the -1 eigenvector
        Mat3 K = m - Mat3::Identity();
        int col = 0;
        for (int i = 1; i < 3; ++i)
            if (K.col(i).norm() > K.col(col).norm()) col = i;
        Vec3 n = K.col(col);
        // fixed set <x, n> = 0 projects to |u|^2 - 2 c.u + 1 = 0 (hyperbolic) or - 1 = 0
        // (sphere), c = n_xy / n_z
        if (std::abs(n.z()) < 1e-12 * n.norm()) {
            Vec2 dir(-n.y(), n.x());
            dir.normalize();
            out += "<path d=\"M" + pt(-1e3 * view.scale * dir) + " L" + pt(1e3 * view.scale * dir) + "\"/>\n";
            continue;
        }
        Vec2 c = n.head<2>() / n.z();
        double r2 = M.kind == Geometry::Hyperbolic ? c.squaredNorm() - 1 : c.squaredNorm() + 1;
        out += "<circle cx=\"" + num(view.scale * c.x()) + "\" cy=\"" + num(-view.scale * c.y()) + "\" r=\"" +
               num(view.scale * std::sqrt(std::max(0.0, r2))) + "\"/>\n";
    }
    return out + "</g>\n";
}

std::string render(const Patch& patch, const ColoringScheme* scheme, const RenderOptions& opt) {
    std::vector<std::string> palette = opt.palette;
    if (scheme) {
        if (palette.empty()) palette = default_palette(scheme->m);
        if (static_cast<int>(palette.size()) < scheme->m)
            throw InvalidArgument("palette-too-small: " + std::to_string(palette.size()) + " colors for m = " +
                                  std::to_string(scheme->m));
    }
    const bool disk = !patch.real || patch.model().kind == Geometry::Hyperbolic || opt.frame == Frame::Disk;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1.05 -1.05 2.1 2.1\" "
           "width=\"800\" height=\"800\">\n";
    if (!opt.label.empty()) out += "<title>" + opt.label + "</title>\n";
    out += "<defs><clipPath id=\"frame\">";
    out += disk ? "<circle cx=\"0\" cy=\"0\" r=\"1\"/>" : "<rect x=\"-1\" y=\"-1\" width=\"2\" height=\"2\"/>";
    out += "</clipPath></defs>\n";
    out += "<g clip-path=\"url(#frame)\" stroke=\"#202020\" stroke-width=\"" + num(opt.stroke_width) +
           "\" stroke-linejoin=\"round\">\n";
    if (patch.real) {
        const View view = make_view(patch);
        for (const auto& t : patch.tiles) {
            if (!visible(view, t)) continue;
            std::string fill = "#e8e8e8", cls = " class=\"tile\"";
            if (scheme) {
                int c = scheme->color_of(t.orbit, t.word);
                fill = palette[c];
                cls = " class=\"tile tile-c" + std::to_string(c + 1) + "\"";
            }
            std::string d = "M" + pt(view.at(t.polygon[0]));
            for (std::size_t i = 0; i < t.polygon.size(); ++i)
                d += edge(view, t.polygon[i], t.polygon[(i + 1) % t.polygon.size()], opt.stroke_width);
            out += "<path" + cls + " fill=\"" + fill + "\" d=\"" + d + " Z\"/>\n";
        }
        if (!opt.overlay_words.empty()) out += overlay_mirrors(patch, opt.overlay_words, opt.stroke_width);
    }
    out += "</g>\n";
    if (disk) out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#202020\" stroke-width=\"" +
                     num(opt.stroke_width) + "\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace tessella

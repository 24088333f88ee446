#include "tessella/geometry.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <numbers>

#include "tessella/errors.hpp"

namespace tessella {
namespace {

const Mat3 kLorentz = Eigen::Vector3d(1, 1, -1).asDiagonal();

double clamp_unit(double x) { return std::max(-1.0, std::min(1.0, x)); }

}  // namespace

double ModelSpace::form(const Vec3& a, const Vec3& b) const {
    if (kind == Geometry::Hyperbolic) return a.x() * b.x() + a.y() * b.y() - a.z() * b.z();
    if (kind == Geometry::Spherical) return a.dot(b);
    return a.x() * b.x() + a.y() * b.y();
}

double ModelSpace::distance(const Vec3& a, const Vec3& b) const {
    Vec3 d = a - b;
    switch (kind) {
        case Geometry::Spherical: return 2 * std::asin(clamp_unit(d.norm() / 2));
        case Geometry::Hyperbolic: {
            // via disk coordinates: the hyperboloid chord cancels badly far from the origin
            Vec2 u = a.head<2>() / (1 + a.z()), v = b.head<2>() / (1 + b.z());
            return 2 * std::asinh((u - v).norm() * std::sqrt((1 + a.z()) * (1 + b.z())) / 2);
        }
        case Geometry::Euclidean: return d.head<2>().norm();
    }
    return 0;
}

double ModelSpace::distance_key(const Vec3& a, const Vec3& b) const {
    Vec3 d = a - b;
    return kind == Geometry::Spherical ? d.squaredNorm() : form(d, d);
}

Vec3 ModelSpace::normalize(const Vec3& v) const {
    switch (kind) {
        case Geometry::Spherical: return v.normalized();
        case Geometry::Hyperbolic: {
            // x^2 + y^2 - z^2 cancels far out, so points that are already on the
            // sheet up to rounding keep (x, y) and get z recomputed
            Vec3 w = v.z() < 0 ? Vec3(-v) : v;
            double n2 = -form(w, w);
            if (std::abs(n2 - 1) > 1e-9 * w.z() * w.z()) w /= std::sqrt(std::max(1e-300, n2));
            w.z() = std::sqrt(1 + w.x() * w.x() + w.y() * w.y());
            return w;
        }
        case Geometry::Euclidean: return v / v.z();
    }
    return v;
}

Vec3 ModelSpace::centroid(const std::vector<Vec3>& pts) const {
    Vec3 s = Vec3::Zero();
    for (const auto& p : pts) s += p;
    return normalize(s);
}

std::pair<Vec3, Vec3> ModelSpace::tangent_frame(const Vec3& x) const {
    if (kind == Geometry::Euclidean) return {Vec3(1, 0, 0), Vec3(0, 1, 0)};
    if (kind == Geometry::Spherical) {
        Vec3 axis = std::abs(x.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
        Vec3 e1 = (axis - axis.dot(x) * x).normalized();
        return {e1, x.cross(e1)};
    }
    Vec3 a = Vec3(1, 0, 0) + form(x, Vec3(1, 0, 0)) * x;
    Vec3 b = Vec3(0, 1, 0) + form(x, Vec3(0, 1, 0)) * x;
    Vec3 e1 = a / std::sqrt(form(a, a));
    Vec3 e2 = b - form(b, e1) * e1;
    return {e1, e2 / std::sqrt(form(e2, e2))};
}

double ModelSpace::direction(const Vec3& x, const Vec3& y) const {
    if (kind == Geometry::Euclidean) return std::atan2(y.y() - x.y(), y.x() - x.x());
    // tangent component of y at x
    Vec3 t = kind == Geometry::Spherical ? Vec3(y - x.dot(y) * x) : Vec3(y + form(x, y) * x);
    auto [e1, e2] = tangent_frame(x);
    return std::atan2(form(t, e2), form(t, e1));
}

Mat3 ModelSpace::reflection_through(const Vec3& a, const Vec3& b) const {
    if (kind == Geometry::Euclidean) {
        Vec2 d = (b - a).head<2>().normalized();
        Vec2 n(-d.y(), d.x());
        double c = n.dot(a.head<2>());
        Mat3 m = Mat3::Identity();
        m.topLeftCorner<2, 2>() -= 2 * n * n.transpose();
        m.topRightCorner<2, 1>() = 2 * c * n;
        return m;
    }
    Vec3 n = a.cross(b);
    if (kind == Geometry::Spherical) {
        n.normalize();
        return Mat3::Identity() - 2 * n * n.transpose();
    }
    n = kLorentz * n;
    n /= std::sqrt(form(n, n));
    return Mat3::Identity() - 2 * n * (kLorentz * n).transpose();
}

Vec3 ModelSpace::lift(double x, double y) const {
    switch (kind) {
        case Geometry::Spherical: return {x, y, std::sqrt(std::max(0.0, 1 - x * x - y * y))};
        case Geometry::Hyperbolic: return {x, y, std::sqrt(1 + x * x + y * y)};
        case Geometry::Euclidean: return {x, y, 1};
    }
    return {x, y, 1};
}

Vec2 ModelSpace::project(const Vec3& x) const {
    if (kind == Geometry::Euclidean) return x.head<2>() / x.z();
    return x.head<2>() / (1 + x.z());
}

Mat3 MirrorSystem::matrix(const Word& w) const {
    if (w.size() <= 2) {
        Mat3 m = Mat3::Identity();
        for (Letter l : w.letters()) m = m * mirrors[index(l)];
        return m;
    }
    // Long products are formed in extended precision and pulled back onto the
    // isometry group after every letter: hyperbolic words far from the origin
    // otherwise lose digits in proportion to their squared displacement.
    using MatL = Eigen::Matrix<long double, 3, 3>;
    const MatL J = model.kind == Geometry::Hyperbolic ? MatL(kLorentz.cast<long double>()) : MatL(MatL::Identity());
    std::array<MatL, 3> ref;
    for (int i = 0; i < 3; ++i) {
        Eigen::Matrix<long double, 3, 1> n = normals[i].cast<long double>();
        ref[i] = MatL::Identity();
        if (model.kind == Geometry::Euclidean) {
            Eigen::Matrix<long double, 2, 1> nn = n.head<2>().normalized();
            ref[i].topLeftCorner<2, 2>() -= 2 * nn * nn.transpose();
            ref[i].topRightCorner<2, 1>() = 2 * n.z() * nn;
        } else {
            n /= std::sqrt(n.dot(J * n));
            ref[i] -= 2 * n * (J * n).transpose();
        }
    }
    MatL m = MatL::Identity();
    for (Letter l : w.letters()) {
        m = m * ref[index(l)];
        if (model.kind != Geometry::Euclidean) m = m * (3 * MatL::Identity() - J * m.transpose() * J * m) / 2;
    }
    return m.cast<double>();
}

double MirrorSystem::side(Letter l, const Vec3& x) const {
    const Vec3& n = normals[index(l)];
    if (model.kind == Geometry::Euclidean) return n.x() * x.x() / x.z() + n.y() * x.y() / x.z() - n.z();
    return model.form(x, n);
}

double MirrorSystem::relator_residual() const {
    double worst = 0;
    for (const Word& r : pres.relators())
        worst = std::max(worst, (matrix(r) - Mat3::Identity()).cwiseAbs().maxCoeff());
    for (const Mat3& m : mirrors)
        worst = std::max(worst, (m * m - Mat3::Identity()).cwiseAbs().maxCoeff());
    return worst;
}

namespace {

// Reflection in the mirror with normal n; for the plane n = (unit normal, offset).
Mat3 reflection(Geometry kind, Vec3& n) {
    Mat3 m = Mat3::Identity();
    if (kind == Geometry::Euclidean) {
        Vec2 nn = n.head<2>().normalized();
        n.head<2>() = nn;
        m.topLeftCorner<2, 2>() -= 2 * nn * nn.transpose();
        m.topRightCorner<2, 1>() = 2 * n.z() * nn;
        return m;
    }
    const Mat3 J = kind == Geometry::Hyperbolic ? kLorentz : Mat3::Identity();
    n /= std::sqrt(n.dot(J * n));
    return m - 2 * n * (J * n).transpose();
}

}  // namespace

void MirrorSystem::transform(const Mat3& T) {
    A = model.normalize(T * A);
    B = model.normalize(T * B);
    C = model.normalize(T * C);
    incenter = model.normalize(T * incenter);
    if (model.kind == Geometry::Euclidean) {
        // T is a translation composed with a rotation; carry (n, c) along
        Eigen::Matrix2d R = T.topLeftCorner<2, 2>();
        Vec2 t = T.topRightCorner<2, 1>();
        for (auto& n : normals) {
            Vec2 nn = R * n.head<2>();
            n = Vec3(nn.x(), nn.y(), n.z() + nn.dot(t));
        }
    } else {
        for (auto& n : normals) n = T * n;
    }
    // rebuilt from the normals rather than conjugated, to keep them exact reflections
    for (int i = 0; i < 3; ++i) mirrors[i] = reflection(model.kind, normals[i]);
}

MirrorSystem mirror_setup(const Presentation& pres, Geometry kind) {
    if (classify_triangle(pres) != kind)
        throw GeometryError("geometry-mismatch: " + pres.name() + " is not " +
                            std::string(geometry_name(kind)));
    using std::numbers::pi;
    MirrorSystem ms;
    ms.model.kind = kind;
    ms.pres = pres;
    const double tp = pi / pres.p, tq = pi / pres.q, tr = pi / pres.r;
    // corner A at the origin of the chart, Q along the x-axis
    Vec3 nQ(0, 1, 0), nR(std::sin(tp), -std::cos(tp), 0);
    double y = -std::cos(tr);
    double x = (-std::cos(tq) + y * std::cos(tp)) / std::sin(tp);
    Vec3 nP;
    if (kind == Geometry::Euclidean) {
        nP = Vec3(x, y, 1.0);  // line n.u = 1, so the origin is on the inside
        double s = std::hypot(x, y);
        nP.x() /= s;
        nP.y() /= s;
    } else if (kind == Geometry::Spherical) {
        nP = Vec3(x, y, -std::sqrt(std::max(0.0, 1 - x * x - y * y)));
    } else {
        nP = Vec3(x, y, std::sqrt(std::max(0.0, x * x + y * y - 1)));
    }
    ms.normals = {nP, nQ, nR};
    for (int i = 0; i < 3; ++i) ms.mirrors[i] = reflection(kind, ms.normals[i]);
    const ModelSpace& M = ms.model;
    auto meet = [&](const Vec3& a, const Vec3& b, const Vec3& other) {
        Vec3 pt;
        if (kind == Geometry::Euclidean) {
            Eigen::Matrix2d A2;
            A2 << a.x(), a.y(), b.x(), b.y();
            Vec2 u = A2.fullPivLu().solve(Vec2(a.z(), b.z()));
            pt = Vec3(u.x(), u.y(), 1);
        } else {
            const Mat3 J = kind == Geometry::Hyperbolic ? kLorentz : Mat3::Identity();
            pt = M.normalize((J * a).cross(J * b));
            if (kind == Geometry::Spherical && M.form(pt, other) > 0) pt = -pt;
        }
        return pt;
    };
    ms.A = meet(nQ, nR, nP);
    ms.B = meet(nR, nP, nQ);
    ms.C = meet(nP, nQ, nR);
    if (kind == Geometry::Euclidean) {
        Mat3 S;
        S << nP.x(), nP.y(), 1, nQ.x(), nQ.y(), 1, nR.x(), nR.y(), 1;
        Vec3 sol = S.fullPivLu().solve(Vec3(nP.z(), nQ.z(), nR.z()));
        ms.incenter = Vec3(sol.x(), sol.y(), 1);
    } else {
        const Mat3 J = kind == Geometry::Hyperbolic ? kLorentz : Mat3::Identity();
        Mat3 N;
        N.row(0) = nP.transpose();
        N.row(1) = nQ.transpose();
        N.row(2) = nR.transpose();
        Vec3 x0 = J * N.fullPivLu().solve(Vec3(-1, -1, -1));
        ms.incenter = M.normalize(x0);
        if (kind == Geometry::Spherical && ms.side(Letter::P, ms.incenter) > 0)
            ms.incenter = -ms.incenter;
    }
    for (Letter l : {Letter::P, Letter::Q, Letter::R})
        if (ms.side(l, ms.incenter) > 1e-12)
            throw GeometryError("fundamental triangle orientation is inconsistent");
    return ms;
}

Mat3 recenter(const ModelSpace& model, const Vec3& x) {
    Mat3 T = Mat3::Identity();
    switch (model.kind) {
        case Geometry::Euclidean:
            T(0, 2) = -x.x() / x.z();
            T(1, 2) = -x.y() / x.z();
            break;
        case Geometry::Spherical:
            T = Eigen::Quaterniond::FromTwoVectors(x, Vec3(0, 0, 1)).toRotationMatrix();
            break;
        case Geometry::Hyperbolic: {
            Vec2 u = x.head<2>();
            double t = x.z();
            T.topLeftCorner<2, 2>() = Eigen::Matrix2d::Identity() + u * u.transpose() / (1 + t);
            T.topRightCorner<2, 1>() = -u;
            T.bottomLeftCorner<1, 2>() = -u.transpose();
            T(2, 2) = t;
            break;
        }
    }
    return T;
}

PointSolve generator_point(const TilingInstance& inst, const MirrorSystem& ms) {
    const ModelSpace& M = ms.model;
    const std::size_t neq = inst.point_mirrors.size() + (inst.edge_words.empty() ? 0 : inst.edge_words.size() - 1);
    if (neq != 2) throw GeometryError("generator point needs exactly two conditions");
    std::vector<Mat3> W;
    for (const Word& w : inst.edge_words) W.push_back(ms.matrix(w));

    // The chart is centred on the incenter so the lift is well defined.
    const Mat3 T = recenter(M, ms.incenter);
    const Mat3 Ti = T.inverse();
    auto point = [&](const Vec2& u) { return M.normalize(Ti * M.lift(u.x(), u.y())); };
    auto F = [&](const Vec2& u) {
        Vec3 v = point(u);
        Vec2 f;
        int k = 0;
        for (Letter l : inst.point_mirrors) f[k++] = ms.side(l, v);
        for (std::size_t i = 1; i < W.size(); ++i)
            f[k++] = M.distance_key(v, W[i] * v) - M.distance_key(v, W[0] * v);
        return f;
    };
    Vec2 u = Vec2::Zero();
    Vec2 f = F(u);
    PointSolve out;
    for (int it = 1; it <= 100; ++it) {
        out.iterations = it;
        if (f.cwiseAbs().maxCoeff() < 1e-13) break;
        Eigen::Matrix2d J;
        for (int c = 0; c < 2; ++c) {
            const double h = 1e-6;
            Vec2 du = Vec2::Zero();
            du[c] = h;
            J.col(c) = (F(u + du) - F(u - du)) / (2 * h);
        }
        Vec2 step = J.fullPivLu().solve(-f);
        double lambda = 1;
        Vec2 trial = u + step, ftrial = F(trial);
        for (int k = 0; k < 40 && !(ftrial.norm() < f.norm()); ++k) {
            lambda /= 2;
            trial = u + lambda * step;
            ftrial = F(trial);
        }
        // no descent left: the residual has hit rounding noise
        if (!(ftrial.norm() < f.norm())) break;
        u = trial;
        f = ftrial;
        if (it == 100 && f.cwiseAbs().maxCoeff() >= 1e-12)
            throw GeometryError("no-convergence: generator point for " + inst.spec());
    }
    out.point = point(u);
    out.residual = f.cwiseAbs().maxCoeff();
    if (out.residual >= 1e-12)
        throw GeometryError("no-convergence: generator point residual " + std::to_string(out.residual));
    return out;
}

}  // namespace tessella

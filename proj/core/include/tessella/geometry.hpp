#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "tessella/catalog.hpp"
#include "tessella/presentation.hpp"
#include "tessella/word.hpp"

namespace tessella {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec2 = Eigen::Vector2d;

// Points are 3-vectors: unit vectors on the sphere, the upper sheet of
// <x,x> = -1 for the hyperboloid, and (x, y, 1) for the plane.
struct ModelSpace {
    Geometry kind = Geometry::Euclidean;

    double form(const Vec3& a, const Vec3& b) const;  // sphere/hyperboloid only
    double distance(const Vec3& a, const Vec3& b) const;
    // Strictly increasing function of distance, cheap and smooth.
    double distance_key(const Vec3& a, const Vec3& b) const;
    Vec3 normalize(const Vec3& v) const;
    Vec3 centroid(const std::vector<Vec3>& pts) const;
    // Orthonormal tangent frame at x, oriented consistently with the model.
    std::pair<Vec3, Vec3> tangent_frame(const Vec3& x) const;
    // Angle of direction x -> y in the tangent frame at x.
    double direction(const Vec3& x, const Vec3& y) const;
    // Reflection in the geodesic through a and b.
    Mat3 reflection_through(const Vec3& a, const Vec3& b) const;
    // Lift 2D chart coordinates (centred on (0,0,1)) into the model.
    Vec3 lift(double x, double y) const;
    Vec2 project(const Vec3& x) const;
};

struct Isometry {
    Mat3 m = Mat3::Identity();
    int orientation() const { return m.determinant() > 0 ? 1 : -1; }
    Vec3 operator()(const Vec3& x) const { return m * x; }
    Isometry operator*(const Isometry& o) const { return {m * o.m}; }
};

// Reflections in the sides of the fundamental triangle.
struct MirrorSystem {
    ModelSpace model;
    Presentation pres;
    std::array<Vec3, 3> normals;  // sphere/hyperboloid: unit spacelike; plane: (nx, ny, c)
    std::array<Mat3, 3> mirrors;
    Vec3 A, B, C;                 // corners opposite P, Q, R's partners (see Presentation)
    Vec3 incenter;

    Mat3 matrix(const Word& w) const;
    Mat3 matrix(Letter l) const { return mirrors[index(l)]; }
    // Signed side of the mirror of `l` (negative inside the triangle).
    double side(Letter l, const Vec3& x) const;
    double relator_residual() const;
    // Apply a change of frame x -> T x to everything.
    void transform(const Mat3& T);
};

MirrorSystem mirror_setup(const Presentation& pres, Geometry kind);

struct PointSolve {
    Vec3 point;
    int iterations = 0;
    double residual = 0;
};

// Generator point of the instance in the frame of `ms`.
PointSolve generator_point(const TilingInstance& inst, const MirrorSystem& ms);

// Isometry taking x to the chart origin (0,0,1), orientation preserving.
Mat3 recenter(const ModelSpace& model, const Vec3& x);

}  // namespace tessella

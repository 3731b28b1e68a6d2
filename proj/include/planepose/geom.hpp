#pragma once

#include <array>
#include <cmath>
#include <string>
#include <variant>

#include "planepose/error.hpp"

namespace pp {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return Mat3{}; }

    double& at(int r, int c) { return m[static_cast<std::size_t>(r * 3 + c)]; }
    double at(int r, int c) const { return m[static_cast<std::size_t>(r * 3 + c)]; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    Vec3 col(int c) const { return {at(0, c), at(1, c), at(2, c)}; }
    void set_col(int c, const Vec3& v) {
        at(0, c) = v.x;
        at(1, c) = v.y;
        at(2, c) = v.z;
    }
};

inline double frobenius_distance(const Mat3& a, const Mat3& b) {
    double s = 0.0;
    for (int i = 0; i < 9; ++i) {
        const double d = a.m[static_cast<std::size_t>(i)] - b.m[static_cast<std::size_t>(i)];
        s += d * d;
    }
    return std::sqrt(s);
}

// Rotation matrix: columns orthonormal, det +1. Construction does not verify;
// is_rotation() checks the invariants at 1e-9.
using RotationMatrix = Mat3;

inline bool is_rotation(const Mat3& r, double tol = 1e-9) {
    const Mat3 g = r.transposed() * r;
    Mat3 eye = Mat3::identity();
    if (frobenius_distance(g, eye) > tol * 3.0) return false;
    return std::abs(r.det() - 1.0) <= tol;
}

struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    bool finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    // Unit norm, w >= 0 (q and -q are the same rotation). For w == 0 the first
    // nonzero vector component is made positive so the form is unique.
    Quaternion canonical() const {
        const double n = norm();
        if (n < 1e-12) throw InvalidInputError("quaternion: zero norm");
        Quaternion q{w / n, x / n, y / n, z / n};
        double lead = q.w;
        if (std::abs(lead) < 1e-15) {
            lead = (std::abs(q.x) > 1e-15) ? q.x : ((std::abs(q.y) > 1e-15) ? q.y : q.z);
        }
        if (lead < 0.0) {
            q.w = -q.w;
            q.x = -q.x;
            q.y = -q.y;
            q.z = -q.z;
        }
        return q;
    }
};

// Rotation vector: angle = |r|, axis = r / |r|. Canonical form has |r| <= pi.
struct AxisAngle {
    Vec3 r;
    bool finite() const { return r.finite(); }
};

// Intrinsic angles for the fixed convention R = Rz(rz) * Ry(ry) * Rx(rx).
struct EulerAngles {
    double rx = 0.0, ry = 0.0, rz = 0.0;
    bool finite() const { return std::isfinite(rx) && std::isfinite(ry) && std::isfinite(rz); }
};

// ---------------------------------------------------------------------------
// Parameterization -> rotation matrix
// ---------------------------------------------------------------------------

inline RotationMatrix quat_to_matrix(const Quaternion& q_in) {
    if (!q_in.finite()) throw InvalidInputError("quat_to_matrix: non-finite input");
    const double n = q_in.norm();
    if (n < 1e-12) throw InvalidInputError("quat_to_matrix: zero-norm quaternion");
    const double w = q_in.w / n, x = q_in.x / n, y = q_in.y / n, z = q_in.z / n;
    Mat3 r;
    r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
           2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
           2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
    return r;
}

// sin(theta)/theta and (1-cos(theta))/theta^2 as functions of u = theta^2,
// with Taylor fallbacks so the Rodrigues map stays smooth through theta = 0.
inline double sinc_from_sq(double u) {
    if (u < 1e-10) return 1.0 - u / 6.0 + u * u / 120.0;
    const double t = std::sqrt(u);
    return std::sin(t) / t;
}

inline double versinc_from_sq(double u) {
    if (u < 1e-10) return 0.5 - u / 24.0 + u * u / 720.0;
    return (1.0 - std::cos(std::sqrt(u))) / u;
}

inline RotationMatrix axisangle_to_matrix(const AxisAngle& a) {
    if (!a.finite()) throw InvalidInputError("axisangle_to_matrix: non-finite input");
    const double rx = a.r.x, ry = a.r.y, rz = a.r.z;
    const double u = rx * rx + ry * ry + rz * rz;
    const double f1 = sinc_from_sq(u);
    const double f2 = versinc_from_sq(u);
    // R = I + f1*K + f2*K^2 with K = skew(r).
    Mat3 r;
    r.m = {1 - f2 * (ry * ry + rz * rz), f2 * rx * ry - f1 * rz,       f2 * rx * rz + f1 * ry,
           f2 * rx * ry + f1 * rz,       1 - f2 * (rx * rx + rz * rz), f2 * ry * rz - f1 * rx,
           f2 * rx * rz - f1 * ry,       f2 * ry * rz + f1 * rx,       1 - f2 * (rx * rx + ry * ry)};
    return r;
}

inline RotationMatrix euler_to_matrix(const EulerAngles& e) {
    if (!e.finite()) throw InvalidInputError("euler_to_matrix: non-finite input");
    const double ca = std::cos(e.rx), sa = std::sin(e.rx);
    const double cb = std::cos(e.ry), sb = std::sin(e.ry);
    const double cc = std::cos(e.rz), sc = std::sin(e.rz);
    // Closed form of Rz(rz) * Ry(ry) * Rx(rx).
    Mat3 r;
    r.m = {cc * cb, cc * sb * sa - sc * ca, cc * sb * ca + sc * sa,
           sc * cb, sc * sb * sa + cc * ca, sc * sb * ca - cc * sa,
           -sb,     cb * sa,                cb * ca};
    return r;
}

// Gram-Schmidt projection of a row-major 3x3 onto SO(3): orthonormalize
// columns 1 and 2, take the cross product for column 3.
inline RotationMatrix orthonormalize(const std::array<double, 9>& raw9) {
    Mat3 m;
    m.m = raw9;
    const Vec3 c1 = m.col(0);
    const Vec3 c2 = m.col(1);
    const double n1 = c1.norm();
    if (!(n1 > 1e-9)) throw SingularInputError("orthonormalize: first column near zero");
    const Vec3 u1 = c1 / n1;
    const Vec3 w = c2 - u1 * u1.dot(c2);
    const double nw = w.norm();
    if (!(nw > 1e-9) || !(nw > 1e-9 * c2.norm()))
        throw SingularInputError("orthonormalize: columns parallel or second column near zero");
    const Vec3 u2 = w / nw;
    const Vec3 u3 = u1.cross(u2);
    Mat3 r;
    r.set_col(0, u1);
    r.set_col(1, u2);
    r.set_col(2, u3);
    return r;
}

// ---------------------------------------------------------------------------
// Rotation matrix -> parameterization (canonical forms)
// ---------------------------------------------------------------------------

inline Quaternion matrix_to_quat(const RotationMatrix& r) {
    // Shepperd's method: pivot on the largest of trace and diagonal entries.
    const double t = r.at(0, 0) + r.at(1, 1) + r.at(2, 2);
    Quaternion q;
    if (t > r.at(0, 0) && t > r.at(1, 1) && t > r.at(2, 2)) {
        const double s = std::sqrt(t + 1.0) * 2.0;
        q.w = 0.25 * s;
        q.x = (r.at(2, 1) - r.at(1, 2)) / s;
        q.y = (r.at(0, 2) - r.at(2, 0)) / s;
        q.z = (r.at(1, 0) - r.at(0, 1)) / s;
    } else if (r.at(0, 0) > r.at(1, 1) && r.at(0, 0) > r.at(2, 2)) {
        const double s = std::sqrt(1.0 + r.at(0, 0) - r.at(1, 1) - r.at(2, 2)) * 2.0;
        q.w = (r.at(2, 1) - r.at(1, 2)) / s;
        q.x = 0.25 * s;
        q.y = (r.at(0, 1) + r.at(1, 0)) / s;
        q.z = (r.at(0, 2) + r.at(2, 0)) / s;
    } else if (r.at(1, 1) > r.at(2, 2)) {
        const double s = std::sqrt(1.0 + r.at(1, 1) - r.at(0, 0) - r.at(2, 2)) * 2.0;
        q.w = (r.at(0, 2) - r.at(2, 0)) / s;
        q.x = (r.at(0, 1) + r.at(1, 0)) / s;
        q.y = 0.25 * s;
        q.z = (r.at(1, 2) + r.at(2, 1)) / s;
    } else {
        const double s = std::sqrt(1.0 + r.at(2, 2) - r.at(0, 0) - r.at(1, 1)) * 2.0;
        q.w = (r.at(1, 0) - r.at(0, 1)) / s;
        q.x = (r.at(0, 2) + r.at(2, 0)) / s;
        q.y = (r.at(1, 2) + r.at(2, 1)) / s;
        q.z = 0.25 * s;
    }
    return q.canonical();
}

inline AxisAngle matrix_to_axisangle(const RotationMatrix& r) {
    const Quaternion q = matrix_to_quat(r);
    const double nv = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    const double angle = 2.0 * std::atan2(nv, q.w);  // in [0, pi] since w >= 0
    double scale;
    if (nv < 1e-12) {
        scale = 2.0 / q.w;  // limit of angle / nv as nv -> 0
    } else {
        scale = angle / nv;
    }
    return AxisAngle{Vec3{q.x * scale, q.y * scale, q.z * scale}};
}

inline EulerAngles matrix_to_euler(const RotationMatrix& r) {
    EulerAngles e;
    const double cb = std::sqrt(r.at(0, 0) * r.at(0, 0) + r.at(1, 0) * r.at(1, 0));
    e.ry = std::atan2(-r.at(2, 0), cb);
    if (cb > 1e-12) {
        e.rx = std::atan2(r.at(2, 1), r.at(2, 2));
        e.rz = std::atan2(r.at(1, 0), r.at(0, 0));
    } else {
        // Gimbal lock: rx and rz are coupled; fix rx = 0.
        e.rx = 0.0;
        e.rz = std::atan2(-r.at(0, 1), r.at(1, 1));
    }
    return e;
}

// ---------------------------------------------------------------------------
// Plane pose
// ---------------------------------------------------------------------------

// Three labeled reference points (center, bottom-right, bottom-left) in voxel
// units; the common currency for every head and metric.
struct PlanePose {
    Vec3 c, br, bl;

    std::array<double, 9> to_array() const {
        return {c.x, c.y, c.z, br.x, br.y, br.z, bl.x, bl.y, bl.z};
    }
    static PlanePose from_array(const std::array<double, 9>& a) {
        return PlanePose{{a[0], a[1], a[2]}, {a[3], a[4], a[5]}, {a[6], a[7], a[8]}};
    }

    bool non_collinear(double tol = 1e-6) const {
        return (br - c).cross(bl - c).norm() > tol;
    }
};

// Reference points of the untransformed mid-plane grid.
inline PlanePose canonical_pose(double half_extent = 80.0) {
    return PlanePose{{0.0, 0.0, 0.0},
                     {half_extent, -half_extent, 0.0},
                     {-half_extent, -half_extent, 0.0}};
}

using RotationParam = std::variant<Quaternion, AxisAngle, EulerAngles, RotationMatrix>;

inline RotationMatrix rotation_matrix_of(const RotationParam& p) {
    return std::visit(
        [](const auto& v) -> RotationMatrix {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Quaternion>) return quat_to_matrix(v);
            else if constexpr (std::is_same_v<T, AxisAngle>) return axisangle_to_matrix(v);
            else if constexpr (std::is_same_v<T, EulerAngles>) return euler_to_matrix(v);
            else return v;
        },
        p);
}

// Similarity transform p -> s * R * p + t (voxel units).
struct SimTransform {
    RotationParam rotation = EulerAngles{};
    Vec3 t;
    double s = 1.0;
};

inline PlanePose apply_transform(const SimTransform& x, const PlanePose& canonical) {
    if (!(x.s > 0.0)) throw InvalidInputError("apply_transform: scale must be positive");
    if (!canonical.non_collinear())
        throw SingularInputError("apply_transform: collinear canonical points");
    const Mat3 r = rotation_matrix_of(x.rotation);
    const auto map = [&](const Vec3& p) { return x.s * (r * p) + x.t; };
    return PlanePose{map(canonical.c), map(canonical.br), map(canonical.bl)};
}

inline Vec3 plane_normal(const PlanePose& p) {
    const Vec3 n = (p.br - p.c).cross(p.bl - p.c);
    const double len = n.norm();
    if (!(len > 1e-6)) throw SingularInputError("plane_normal: collinear pose points");
    return n / len;
}

}  // namespace pp

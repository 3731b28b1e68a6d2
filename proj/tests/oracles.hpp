#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they are used to check.

#include <array>
#include <cmath>

#include "planepose/geom.hpp"
#include "planepose/rng.hpp"

namespace oracle {

// Jacobi eigendecomposition of a symmetric 3x3 matrix. Returns eigenvalues
// and the orthogonal matrix of eigenvectors (columns).
inline void jacobi_eigen_sym3(const pp::Mat3& a_in, std::array<double, 3>& eval, pp::Mat3& evec) {
    pp::Mat3 a = a_in;
    evec = pp::Mat3::identity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) off += a.at(p, q) * a.at(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(a.at(p, q)) < 1e-300) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * a.at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                pp::Mat3 g = pp::Mat3::identity();
                g.at(p, p) = c;
                g.at(q, q) = c;
                g.at(p, q) = s;
                g.at(q, p) = -s;
                a = g.transposed() * a * g;
                evec = evec * g;
            }
        }
    }
    for (int i = 0; i < 3; ++i) eval[static_cast<std::size_t>(i)] = a.at(i, i);
}

// Nearest rotation to M in Frobenius norm via polar decomposition
// R = M (M^T M)^(-1/2), assuming det(M) > 0.
inline pp::Mat3 polar_project(const pp::Mat3& m) {
    const pp::Mat3 mtm = m.transposed() * m;
    std::array<double, 3> ev{};
    pp::Mat3 v;
    jacobi_eigen_sym3(mtm, ev, v);
    pp::Mat3 inv_sqrt{};
    inv_sqrt.m = {0, 0, 0, 0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i) inv_sqrt.at(i, i) = 1.0 / std::sqrt(ev[static_cast<std::size_t>(i)]);
    return m * (v * inv_sqrt * v.transposed());
}

// Reference quaternion extraction used by round-trip checks; written against
// the textbook component formulas rather than the library's pivoting code.
inline pp::Quaternion matrix_to_quat_oracle(const pp::Mat3& r) {
    pp::Quaternion q;
    const double tr = r.at(0, 0) + r.at(1, 1) + r.at(2, 2);
    q.w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
    q.x = 0.5 * std::sqrt(std::max(0.0, 1.0 + r.at(0, 0) - r.at(1, 1) - r.at(2, 2)));
    q.y = 0.5 * std::sqrt(std::max(0.0, 1.0 - r.at(0, 0) + r.at(1, 1) - r.at(2, 2)));
    q.z = 0.5 * std::sqrt(std::max(0.0, 1.0 - r.at(0, 0) - r.at(1, 1) + r.at(2, 2)));
    q.x = std::copysign(q.x, r.at(2, 1) - r.at(1, 2));
    q.y = std::copysign(q.y, r.at(0, 2) - r.at(2, 0));
    q.z = std::copysign(q.z, r.at(1, 0) - r.at(0, 1));
    return q.canonical();
}

inline pp::Quaternion random_unit_quaternion(pp::Rng& rng) {
    pp::Quaternion q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    return q.canonical();
}

inline pp::Mat3 random_rotation(pp::Rng& rng) {
    return pp::quat_to_matrix(random_unit_quaternion(rng));
}

// Single-axis rotation matrices for the Euler composition oracle.
inline pp::Mat3 rot_x(double a) {
    pp::Mat3 m;
    m.m = {1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a)};
    return m;
}
inline pp::Mat3 rot_y(double a) {
    pp::Mat3 m;
    m.m = {std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a)};
    return m;
}
inline pp::Mat3 rot_z(double a) {
    pp::Mat3 m;
    m.m = {std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1};
    return m;
}

}  // namespace oracle

#pragma once

#include <cmath>

#include "pillowcase/errors.hpp"

namespace pillowcase {

namespace tol {
// Defaults: algebraic identities vs. numerical solver outputs.
inline constexpr double kAlgebraic = 1e-12;
inline constexpr double kSolver = 1e-9;
} // namespace tol

/// An element of SU(2) stored as a unit quaternion w + xi + yj + zk.
/// Renormalized on construction; all operations keep |q| = 1 to 1e-12.
/// The real part w equals half the trace of the corresponding SU(2) matrix.
struct UnitQuaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    UnitQuaternion() = default;
    UnitQuaternion(double w_, double x_, double y_, double z_);

    /// cos(angle) + i sin(angle): the distinguished maximal torus.
    static UnitQuaternion circle(double angle) {
        return UnitQuaternion(std::cos(angle), std::sin(angle), 0.0, 0.0);
    }
    /// Rotation-like element cos(angle) + sin(angle) * (ux i + uy j + uz k).
    static UnitQuaternion from_axis_angle(double ux, double uy, double uz, double angle);

    static UnitQuaternion identity() { return UnitQuaternion(); }
    static UnitQuaternion i() { return UnitQuaternion(0, 1, 0, 0); }
    static UnitQuaternion j() { return UnitQuaternion(0, 0, 1, 0); }
    static UnitQuaternion k() { return UnitQuaternion(0, 0, 0, 1); }

    UnitQuaternion operator*(const UnitQuaternion& o) const {
        return UnitQuaternion(w * o.w - x * o.x - y * o.y - z * o.z,
                              w * o.x + x * o.w + y * o.z - z * o.y,
                              w * o.y - x * o.z + y * o.w + z * o.x,
                              w * o.z + x * o.y - y * o.x + z * o.w);
    }
    UnitQuaternion conjugate() const { return UnitQuaternion(w, -x, -y, -z); }
    UnitQuaternion inverse() const { return conjugate(); }
    UnitQuaternion operator-() const { return UnitQuaternion(-w, -x, -y, -z); }

    UnitQuaternion conjugated_by(const UnitQuaternion& g) const {
        return g * (*this) * g.conjugate();
    }
    UnitQuaternion pow(long n) const;

    /// Rotation angle in [0, pi]: acos of the real part.
    double angle() const { return std::acos(std::clamp(w, -1.0, 1.0)); }
    /// Norm of the imaginary part, i.e. |sin(angle)|.
    double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }
    /// Distance to the center {+1, -1}.
    double central_defect() const;
    bool is_central(double tolerance = tol::kSolver) const {
        return central_defect() < tolerance;
    }

    double dot(const UnitQuaternion& o) const {
        return w * o.w + x * o.x + y * o.y + z * o.z;
    }
};

/// Euclidean distance of the two 4-vectors (not the quotient by +-1).
double distance(const UnitQuaternion& a, const UnitQuaternion& b);

/// from_circle of the interface contract; alias of UnitQuaternion::circle.
UnitQuaternion from_circle(double angle);

/// |q1 q2 - q2 q1|: zero exactly when the pair commutes.
double commutator_defect(const UnitQuaternion& q1, const UnitQuaternion& q2);

/// Result of simultaneously conjugating a commuting pair onto the i-circle.
/// (alpha, beta) is the canonical pillowcase representative: alpha in [0, pi],
/// beta in [0, 2pi), with beta folded into [0, pi] when alpha is 0 or pi.
struct DiagonalPairResult {
    double alpha = 0.0;
    double beta = 0.0;
    UnitQuaternion conjugator;
    double residual = 0.0;
};

/// Conjugates a commuting pair (q1, q2) so both land on the i-circle, with
/// angles reduced to the canonical representative under (a,b) ~ (2pi-a, 2pi-b).
/// Throws NonCommutingPair when commutator_defect(q1, q2) >= tolerance.
DiagonalPairResult simultaneous_diagonalize(const UnitQuaternion& q1,
                                            const UnitQuaternion& q2,
                                            double tolerance = tol::kSolver);

} // namespace pillowcase

#include "pillowcase/quaternion.hpp"

#include <algorithm>
#include <cmath>

namespace pillowcase {

namespace {

const double kTwoPi = 2.0 * M_PI;

// Smallest |imaginary| for which an axis is considered well defined.
const double kAxisTol = 1e-9;

double norm4(double w, double x, double y, double z) {
    return std::sqrt(w * w + x * x + y * y + z * z);
}

// Unit quaternion whose conjugation action rotates unit vector u onto the
// positive i-axis.
UnitQuaternion rotation_to_i_axis(double ux, double uy, double uz) {
    const double c = ux;                       // u . e_i
    const double s = std::sqrt(uy * uy + uz * uz); // |u x e_i|
    if (s < 1e-14) {
        if (c > 0.0) return UnitQuaternion::identity();
        return UnitQuaternion::j(); // half turn about j sends -i to i
    }
    // axis of rotation: u x e_i / s = (0, uz, -uy) / s
    const double theta = std::atan2(s, c);
    const double ch = std::cos(0.5 * theta);
    const double sh = std::sin(0.5 * theta);
    return UnitQuaternion(ch, 0.0, sh * uz / s, sh * -uy / s);
}

} // namespace

UnitQuaternion::UnitQuaternion(double w_, double x_, double y_, double z_)
    : w(w_), x(x_), y(y_), z(z_) {
    const double n = norm4(w, x, y, z);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidParameters("UnitQuaternion: cannot normalize zero or non-finite quaternion");
    }
    if (std::abs(n - 1.0) > tol::kAlgebraic) {
        w /= n;
        x /= n;
        y /= n;
        z /= n;
    }
}

UnitQuaternion UnitQuaternion::from_axis_angle(double ux, double uy, double uz, double angle) {
    const double n = std::sqrt(ux * ux + uy * uy + uz * uz);
    if (!(n > 0.0)) throw InvalidParameters("from_axis_angle: zero axis");
    const double c = std::cos(angle), s = std::sin(angle) / n;
    return UnitQuaternion(c, s * ux, s * uy, s * uz);
}

UnitQuaternion UnitQuaternion::pow(long n) const {
    if (n < 0) return conjugate().pow(-n);
    UnitQuaternion result;
    UnitQuaternion base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

double UnitQuaternion::central_defect() const {
    const double dw = std::abs(w) - 1.0;
    return std::sqrt(dw * dw + x * x + y * y + z * z);
}

double distance(const UnitQuaternion& a, const UnitQuaternion& b) {
    return norm4(a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z);
}

UnitQuaternion from_circle(double angle) { return UnitQuaternion::circle(angle); }

double commutator_defect(const UnitQuaternion& q1, const UnitQuaternion& q2) {
    const UnitQuaternion ab = q1 * q2;
    const UnitQuaternion ba = q2 * q1;
    return norm4(ab.w - ba.w, ab.x - ba.x, ab.y - ba.y, ab.z - ba.z);
}

DiagonalPairResult simultaneous_diagonalize(const UnitQuaternion& q1,
                                            const UnitQuaternion& q2,
                                            double tolerance) {
    const double defect = commutator_defect(q1, q2);
    if (!(defect < tolerance)) {
        throw NonCommutingPair("simultaneous_diagonalize: commutator defect " +
                               std::to_string(defect) + " exceeds tolerance " +
                               std::to_string(tolerance));
    }

    // Common axis from whichever element has one; degenerate central pairs
    // have no well-defined axis and need no rotation at all.
    UnitQuaternion g = UnitQuaternion::identity();
    const double n1 = q1.imag_norm();
    const double n2 = q2.imag_norm();
    if (n1 > kAxisTol) {
        g = rotation_to_i_axis(q1.x / n1, q1.y / n1, q1.z / n1);
    } else if (n2 > kAxisTol) {
        g = rotation_to_i_axis(q2.x / n2, q2.y / n2, q2.z / n2);
    }

    UnitQuaternion p1 = q1.conjugated_by(g);
    UnitQuaternion p2 = q2.conjugated_by(g);
    double a = std::atan2(p1.x, p1.w);
    double b = std::atan2(p2.x, p2.w);
    if (a < 0.0 || (std::abs(a) < kAxisTol && b < 0.0)) {
        // (a, b) ~ (-a, -b); conjugation by j inverts the i-circle.
        g = UnitQuaternion::j() * g;
        p1 = q1.conjugated_by(g);
        p2 = q2.conjugated_by(g);
        a = std::atan2(p1.x, p1.w);
        b = std::atan2(p2.x, p2.w);
    }
    double alpha = std::max(a, 0.0);
    double beta = b < 0.0 ? b + kTwoPi : b;
    if (beta >= kTwoPi) beta -= kTwoPi;

    // Orbifold edge: at alpha in {0, pi} the identification (a,b) ~ (-a,-b)
    // fixes alpha, so beta folds into [0, pi].
    if (std::min(alpha, M_PI - alpha) < tol::kSolver && beta > M_PI) {
        g = UnitQuaternion::j() * g;
        p1 = q1.conjugated_by(g);
        p2 = q2.conjugated_by(g);
        beta = kTwoPi - beta;
        if (beta >= kTwoPi) beta -= kTwoPi;
    }

    DiagonalPairResult out;
    out.alpha = alpha;
    out.beta = beta;
    out.conjugator = g;
    out.residual = std::max(distance(p1, UnitQuaternion::circle(alpha)),
                            distance(p2, UnitQuaternion::circle(beta)));
    return out;
}

} // namespace pillowcase

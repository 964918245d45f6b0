#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pillowcase/errors.hpp"
#include "pillowcase/quaternion.hpp"

namespace pillowcase {

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

/// A point of the pillowcase orbifold in its canonical fundamental-domain
/// representative: alpha in [0, pi], beta in [0, 2pi), with beta folded into
/// [0, pi] on the edges alpha in {0, pi}.
struct PillowPoint {
    double alpha = 0.0;
    double beta = 0.0;
};

/// A point of the cut-open pillowcase [0, pi] x (R / 2pi Z): the alpha edges
/// are boundary circles, not folded.
struct CutOpenPoint {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Canonical representative of (alpha, beta) under
///   (a, b) ~ (-a, -b),  b ~ b + 2pi,  a ~ a + 2pi.
/// Idempotent on its own output.
PillowPoint normalize(double alpha, double beta);

/// Distance in the quotient metric: minimum over the representatives of the
/// two points on the covering torus.
double quotient_distance(const PillowPoint& a, const PillowPoint& b);

/// The involution (alpha, beta) -> (alpha, 2pi - (4 alpha + beta)).
PillowPoint sigma(const PillowPoint& p);
/// Generic hook for the same shape of involution with n in place of 4.
/// Only the n = 4 instance is used by the gluing machinery.
PillowPoint sigma_n(const PillowPoint& p, int n);
/// The involution (alpha, beta) -> (pi - alpha, 2pi - beta).
PillowPoint tau(const PillowPoint& p);

/// True when r*alpha + s*beta is within tolerance of a multiple of pi,
/// for every representative of p.  Requires gcd(r, s) = 1.
bool on_line_mod_pi(const PillowPoint& p, long r, long s, double tolerance = tol::kSolver);

// ---------------------------------------------------------------------------
// Polylines
// ---------------------------------------------------------------------------

/// A curve in the pillowcase as an ordered list of canonical points.
/// Consecutive points should be close in the quotient metric (default step
/// bound 0.05); closed polylines repeat their first point at the end.
struct Polyline {
    std::vector<PillowPoint> points;
    bool closed = false;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }

    /// Largest consecutive gap in the quotient metric.
    double max_step() const;
    /// Checks the step bound and, for closed curves, first == last.
    void validate(double step_bound = 0.05) const;
    /// Minimum quotient distance from p to any vertex.
    double vertex_distance(const PillowPoint& p) const;
    /// True if p lies within tolerance of some segment of the polyline.
    bool passes_through(const PillowPoint& p, double tolerance) const;
};

/// Samples the graph {(a, slope * a + intercept) : a in [0, pi]}.
Polyline sampled_graph_line(double slope, double intercept, std::size_t samples);

/// The arc L_theta = {4 alpha + beta == theta (mod 2pi)}.  samples >= 2.
Polyline line_L(double theta, std::size_t samples);

/// The three open segments of L_pi cut at alpha = pi/4 and 3pi/4, in order
/// left, middle, right.
std::array<Polyline, 3> line_L_pi_segments(std::size_t samples);

/// Pointwise image of a polyline under a pillowcase map.
Polyline map_polyline(const Polyline& c, PillowPoint (*f)(const PillowPoint&));

// ---------------------------------------------------------------------------
// Intersections
// ---------------------------------------------------------------------------

struct Crossing {
    PillowPoint at;
    int sign = 0;          // orientation of the crossing; 0 for tangential
    double angle = 0.0;    // unsigned crossing angle
    std::size_t seg1 = 0;  // segment index on the first curve
    std::size_t seg2 = 0;  // segment index on the second curve
};

struct IntersectionResult {
    std::vector<Crossing> crossings;   // transverse, deduplicated
    std::vector<Crossing> tangential;  // crossing angle below threshold
};

/// All transverse crossings of two polylines in the quotient, with signs.
/// Crossings at angle < angle_tol are reported separately as tangential.
IntersectionResult intersect_polylines(const Polyline& c1, const Polyline& c2,
                                       double angle_tol = 1e-3);

/// Signed count of transverse crossings.  Throws TangencyUnresolved if any
/// near-tangential crossing was flagged.
long intersection_number(const Polyline& closed_curve, const Polyline& arc,
                         double angle_tol = 1e-3);

// ---------------------------------------------------------------------------
// Complement components
// ---------------------------------------------------------------------------

/// Raster labeling of the complement of a set of thickened curves in the
/// pillowcase (sphere topology; edge identifications respected).
class ComplementLabeling {
public:
    ComplementLabeling(std::size_t alpha_cells, std::vector<int> labels, int components);

    int components() const { return components_; }
    std::size_t alpha_cells() const { return na_; }
    std::size_t beta_cells() const { return nb_; }

    /// Component id of the cell containing p.  Throws PointOnCurve when the
    /// cell is part of a thickened curve.
    int component_of(const PillowPoint& p) const;
    /// Label of a raw cell; -1 means blocked.
    int label(std::size_t i, std::size_t j) const { return labels_[j * na_ + i]; }

    /// Plain PGM (P2) dump for debugging.
    void write_pgm(std::ostream& os) const;

private:
    std::size_t na_, nb_;
    std::vector<int> labels_;
    int components_;
};

/// Flood-fill labeling of the complement of the given curves, thickened by
/// 1.5 cells, on a resolution x 2*resolution raster.  resolution >= 64.
ComplementLabeling components_of_complement(const std::vector<Polyline>& curves,
                                            std::size_t resolution);

// ---------------------------------------------------------------------------
// Cut-open lifting
// ---------------------------------------------------------------------------

struct LiftedCurve {
    std::vector<CutOpenPoint> points;
    double net_drift = 0.0;  // accumulated beta drift along the curve
    bool closed = false;

    /// Homology class in H_1 of the cut-open pillowcase: net drift / 2pi,
    /// rounded.  Meaningful for closed curves.
    int winding() const;
};

/// Continuous lift of a pillowcase curve to the cut-open pillowcase.  The
/// curve may touch the edges alpha in {0, pi} only where beta == 0; otherwise
/// LiftObstructed is thrown.
LiftedCurve lift_to_cut_open(const Polyline& curve);

} // namespace pillowcase

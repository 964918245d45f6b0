#include "pillowcase/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <ostream>

#include "pillowcase/parallel.hpp"

namespace pillowcase {

namespace {

const double kTwoPi = 2.0 * M_PI;
const double kEdgeTol = 1e-12;

// Reduction into [0, 2pi) that leaves in-range values bit-identical.
double reduce_2pi(double x) {
    if (x >= 0.0 && x < kTwoPi) return x;
    if (!std::isfinite(x)) throw InvalidParameters("non-finite angle");
    if (std::abs(x) > 64.0 * M_PI) {
        x -= kTwoPi * std::floor(x / kTwoPi);
        if (x >= kTwoPi) x -= kTwoPi; // floor rounding
        if (x < 0.0) x += kTwoPi;
        return x;
    }
    while (x < 0.0) x += kTwoPi;
    while (x >= kTwoPi) x -= kTwoPi;
    return x;
}

// Signed reduction into (-pi, pi].
double circ_diff(double x) {
    x = reduce_2pi(x);
    return x > M_PI ? x - kTwoPi : x;
}

double torus_distance(double a1, double b1, double a2, double b2) {
    const double da = circ_diff(a1 - a2);
    const double db = circ_diff(b1 - b2);
    return std::hypot(da, db);
}

long gcd_ll(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

// --- lifted segments in the plane --------------------------------------

struct Vec2 {
    double x, y;
};

struct Seg {
    Vec2 a, b;
    std::size_t index;
};

double cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

Vec2 closest_representative(const Vec2& anchor, const PillowPoint& p) {
    Vec2 best{p.alpha, p.beta};
    double best_d = std::hypot(anchor.x - p.alpha, anchor.y - p.beta);
    for (int s = -1; s <= 1; s += 2) {
        for (int m = -1; m <= 1; ++m) {
            for (int n = -1; n <= 1; ++n) {
                const Vec2 cand{s * p.alpha + kTwoPi * m, s * p.beta + kTwoPi * n};
                const double d = std::hypot(anchor.x - cand.x, anchor.y - cand.y);
                if (d < best_d) {
                    best_d = d;
                    best = cand;
                }
            }
        }
    }
    return best;
}

// Segments of a polyline lifted so each is short in the plane, with the first
// endpoint taken in (or near) the fundamental domain.
std::vector<Seg> lift_segments(const Polyline& c) {
    std::vector<Seg> out;
    if (c.points.size() < 2) return out;
    out.reserve(c.points.size() - 1);
    for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
        const Vec2 a{c.points[k].alpha, c.points[k].beta};
        const Vec2 b = closest_representative(a, c.points[k + 1]);
        out.push_back({a, b, k});
    }
    return out;
}

// Images of a segment under the deck group {v -> +-v + 2pi (m, n)} that come
// near the fundamental domain (with margin).
void append_deck_images(const Seg& s, double margin, std::vector<Seg>& out) {
    for (int sign = -1; sign <= 1; sign += 2) {
        for (int m = -1; m <= 1; ++m) {
            for (int n = -1; n <= 1; ++n) {
                Seg img;
                img.a = {sign * s.a.x + kTwoPi * m, sign * s.a.y + kTwoPi * n};
                img.b = {sign * s.b.x + kTwoPi * m, sign * s.b.y + kTwoPi * n};
                img.index = s.index;
                const double xlo = std::min(img.a.x, img.b.x), xhi = std::max(img.a.x, img.b.x);
                const double ylo = std::min(img.a.y, img.b.y), yhi = std::max(img.a.y, img.b.y);
                if (xhi < -margin || xlo > M_PI + margin) continue;
                if (yhi < -margin || ylo > kTwoPi + margin) continue;
                out.push_back(img);
            }
        }
    }
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 d{b.x - a.x, b.y - a.y};
    const double len2 = d.x * d.x + d.y * d.y;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * d.x), p.y - (a.y + t * d.y));
}

} // namespace

// --- points -------------------------------------------------------------

PillowPoint normalize(double alpha, double beta) {
    double a = reduce_2pi(alpha);
    double b = reduce_2pi(beta);
    if (a > M_PI) {
        a = kTwoPi - a;
        b = b == 0.0 ? 0.0 : kTwoPi - b;
    }
    if ((a <= kEdgeTol || a >= M_PI - kEdgeTol) && b > M_PI) {
        b = kTwoPi - b;
    }
    return {a, b};
}

double quotient_distance(const PillowPoint& p, const PillowPoint& q) {
    return std::min(torus_distance(p.alpha, p.beta, q.alpha, q.beta),
                    torus_distance(p.alpha, p.beta, -q.alpha, -q.beta));
}

PillowPoint sigma(const PillowPoint& p) { return sigma_n(p, 4); }

PillowPoint sigma_n(const PillowPoint& p, int n) {
    return normalize(p.alpha, kTwoPi - (n * p.alpha + p.beta));
}

PillowPoint tau(const PillowPoint& p) { return normalize(M_PI - p.alpha, kTwoPi - p.beta); }

bool on_line_mod_pi(const PillowPoint& p, long r, long s, double tolerance) {
    if (gcd_ll(r, s) != 1) throw InvalidParameters("on_line_mod_pi: gcd(r, s) must be 1");
    for (int sign = -1; sign <= 1; sign += 2) {
        const double v = sign * (r * p.alpha + s * p.beta);
        const double m = std::abs(std::remainder(v, M_PI));
        if (m < tolerance) return true;
    }
    return false;
}

// --- polylines ----------------------------------------------------------

double Polyline::max_step() const {
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        m = std::max(m, quotient_distance(points[k], points[k + 1]));
    }
    return m;
}

void Polyline::validate(double step_bound) const {
    if (max_step() >= step_bound) {
        throw InvalidParameters("Polyline: consecutive points exceed step bound");
    }
    if (closed && !points.empty() &&
        quotient_distance(points.front(), points.back()) > 1e-9) {
        throw InvalidParameters("Polyline: closed curve must repeat its first point");
    }
}

double Polyline::vertex_distance(const PillowPoint& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : points) best = std::min(best, quotient_distance(p, q));
    return best;
}

bool Polyline::passes_through(const PillowPoint& p, double tolerance) const {
    if (points.size() == 1) return quotient_distance(points[0], p) <= tolerance;
    for (const Seg& s : lift_segments(*this)) {
        std::vector<Seg> images;
        append_deck_images(s, 0.5, images);
        for (const Seg& img : images) {
            if (point_segment_distance({p.alpha, p.beta}, img.a, img.b) <= tolerance) return true;
        }
    }
    return false;
}

Polyline sampled_graph_line(double slope, double intercept, std::size_t samples) {
    if (samples < 2) throw InvalidParameters("sampled_graph_line: samples must be >= 2");
    Polyline out;
    out.points.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double a = M_PI * static_cast<double>(k) / static_cast<double>(samples - 1);
        out.points.push_back(normalize(a, slope * a + intercept));
    }
    return out;
}

Polyline line_L(double theta, std::size_t samples) {
    return sampled_graph_line(-4.0, theta, samples);
}

std::array<Polyline, 3> line_L_pi_segments(std::size_t samples) {
    if (samples < 2) throw InvalidParameters("line_L_pi_segments: samples must be >= 2");
    auto piece = [&](double a0, double a1, double shift) {
        Polyline seg;
        seg.points.reserve(samples);
        for (std::size_t k = 0; k < samples; ++k) {
            const double a = a0 + (a1 - a0) * static_cast<double>(k) / static_cast<double>(samples - 1);
            seg.points.push_back(normalize(a, shift - 4.0 * a));
        }
        return seg;
    };
    return {piece(0.0, M_PI / 4, M_PI), piece(M_PI / 4, 3 * M_PI / 4, 3 * M_PI),
            piece(3 * M_PI / 4, M_PI, 5 * M_PI)};
}

Polyline map_polyline(const Polyline& c, PillowPoint (*f)(const PillowPoint&)) {
    Polyline out;
    out.closed = c.closed;
    out.points.reserve(c.points.size());
    for (const auto& p : c.points) out.points.push_back(f(p));
    return out;
}

// --- intersections -------------------------------------------------------

IntersectionResult intersect_polylines(const Polyline& c1, const Polyline& c2,
                                       double angle_tol) {
    IntersectionResult result;
    const std::vector<Seg> segs1 = lift_segments(c1);
    if (segs1.empty()) return result;

    double margin = 0.2;
    for (const Seg& s : segs1) {
        margin = std::max(margin, std::hypot(s.b.x - s.a.x, s.b.y - s.a.y));
    }
    std::vector<Seg> images;
    for (const Seg& s : lift_segments(c2)) append_deck_images(s, margin, images);

    const double merge_radius = 1e-7;
    auto record = [&](std::vector<Crossing>& list, const Crossing& c) {
        for (auto& prev : list) {
            if (quotient_distance(prev.at, c.at) < merge_radius) return;
        }
        list.push_back(c);
    };

    for (const Seg& s1 : segs1) {
        const Vec2 d1{s1.b.x - s1.a.x, s1.b.y - s1.a.y};
        const double len1 = std::hypot(d1.x, d1.y);
        if (len1 == 0.0) continue;
        const double xlo = std::min(s1.a.x, s1.b.x), xhi = std::max(s1.a.x, s1.b.x);
        const double ylo = std::min(s1.a.y, s1.b.y), yhi = std::max(s1.a.y, s1.b.y);
        for (const Seg& s2 : images) {
            if (std::max(s2.a.x, s2.b.x) < xlo || std::min(s2.a.x, s2.b.x) > xhi) continue;
            if (std::max(s2.a.y, s2.b.y) < ylo || std::min(s2.a.y, s2.b.y) > yhi) continue;
            const Vec2 d2{s2.b.x - s2.a.x, s2.b.y - s2.a.y};
            const double len2 = std::hypot(d2.x, d2.y);
            if (len2 == 0.0) continue;
            const double denom = cross(d1, d2);
            const double sin_angle = std::abs(denom) / (len1 * len2);
            const Vec2 r{s2.a.x - s1.a.x, s2.a.y - s1.a.y};
            if (sin_angle < angle_tol) {
                // Near-parallel: flag only if the segments actually touch.
                const double gap = std::min(
                    std::min(point_segment_distance(s2.a, s1.a, s1.b),
                             point_segment_distance(s2.b, s1.a, s1.b)),
                    std::min(point_segment_distance(s1.a, s2.a, s2.b),
                             point_segment_distance(s1.b, s2.a, s2.b)));
                if (gap < 1e-9) {
                    Crossing c;
                    c.at = normalize(s1.a.x, s1.a.y);
                    c.sign = 0;
                    c.angle = std::asin(std::min(1.0, sin_angle));
                    c.seg1 = s1.index;
                    c.seg2 = s2.index;
                    record(result.tangential, c);
                }
                continue;
            }
            const double t = cross(r, d2) / denom;
            const double u = cross(r, d1) / denom;
            if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) continue;
            Crossing c;
            c.at = normalize(s1.a.x + t * d1.x, s1.a.y + t * d1.y);
            c.sign = denom > 0.0 ? 1 : -1;
            c.angle = std::asin(std::min(1.0, sin_angle));
            c.seg1 = s1.index;
            c.seg2 = s2.index;
            record(result.crossings, c);
        }
    }
    return result;
}

long intersection_number(const Polyline& closed_curve, const Polyline& arc,
                         double angle_tol) {
    const IntersectionResult r = intersect_polylines(closed_curve, arc, angle_tol);
    if (!r.tangential.empty()) {
        throw TangencyUnresolved("intersection_number: " +
                                 std::to_string(r.tangential.size()) +
                                 " near-tangential crossings");
    }
    long total = 0;
    for (const auto& c : r.crossings) total += c.sign;
    return total;
}

// --- complement components ------------------------------------------------

ComplementLabeling::ComplementLabeling(std::size_t alpha_cells, std::vector<int> labels,
                                       int components)
    : na_(alpha_cells), nb_(2 * alpha_cells), labels_(std::move(labels)),
      components_(components) {
    if (labels_.size() != na_ * nb_) throw InvalidParameters("ComplementLabeling: raster size");
}

int ComplementLabeling::component_of(const PillowPoint& p) const {
    const double h = M_PI / static_cast<double>(na_);
    auto idx = [h](double v, std::size_t n) {
        auto i = static_cast<long>(std::floor(v / h));
        return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(n) - 1));
    };
    const int l = label(idx(p.alpha, na_), idx(p.beta, nb_));
    if (l < 0) {
        throw PointOnCurve("component_of: query point lies on a thickened curve");
    }
    return l;
}

void ComplementLabeling::write_pgm(std::ostream& os) const {
    os << "P2\n" << na_ << " " << nb_ << "\n255\n";
    for (std::size_t j = 0; j < nb_; ++j) {
        for (std::size_t i = 0; i < na_; ++i) {
            const int l = label(i, nb_ - 1 - j);
            const int v = l < 0 ? 0 : 64 + (l * 53) % 192;
            os << v << (i + 1 == na_ ? "" : " ");
        }
        os << "\n";
    }
}

ComplementLabeling components_of_complement(const std::vector<Polyline>& curves,
                                            std::size_t resolution) {
    if (resolution < 64) throw InvalidParameters("components_of_complement: resolution >= 64");
    const std::size_t na = resolution, nb = 2 * resolution;
    const double h = M_PI / static_cast<double>(na);
    const double thick = 1.5 * h;

    std::vector<Seg> images;
    for (const auto& c : curves) {
        for (const Seg& s : lift_segments(c)) append_deck_images(s, 2.0 * thick, images);
    }

    std::vector<int> labels(na * nb, 0); // 0 = free, -1 = blocked
    parallel_chunks(nb, [&](std::size_t j0, std::size_t j1) {
        for (std::size_t j = j0; j < j1; ++j) {
            const double yc = (static_cast<double>(j) + 0.5) * h;
            for (const Seg& s : images) {
                if (std::max(s.a.y, s.b.y) < yc - thick || std::min(s.a.y, s.b.y) > yc + thick)
                    continue;
                const double xlo = std::min(s.a.x, s.b.x) - thick;
                const double xhi = std::max(s.a.x, s.b.x) + thick;
                const long i0 = std::max<long>(0, static_cast<long>(std::floor(xlo / h)));
                const long i1 = std::min<long>(static_cast<long>(na) - 1,
                                               static_cast<long>(std::floor(xhi / h)));
                for (long i = i0; i <= i1; ++i) {
                    const Vec2 center{(static_cast<double>(i) + 0.5) * h, yc};
                    if (point_segment_distance(center, s.a, s.b) <= thick) {
                        labels[j * na + static_cast<std::size_t>(i)] = -1;
                    }
                }
            }
        }
    });

    // Flood fill with pillowcase adjacency: beta wraps, alpha edges reflect.
    int next_label = 0;
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    auto try_push = [&](std::size_t i, std::size_t j, int lab) {
        int& cell = labels[j * na + i];
        if (cell == 0) {
            cell = lab;
            queue.emplace_back(i, j);
        }
    };
    for (std::size_t j0 = 0; j0 < nb; ++j0) {
        for (std::size_t i0 = 0; i0 < na; ++i0) {
            if (labels[j0 * na + i0] != 0) continue;
            const int lab = ++next_label;
            labels[j0 * na + i0] = lab;
            queue.emplace_back(i0, j0);
            while (!queue.empty()) {
                const auto [i, j] = queue.front();
                queue.pop_front();
                try_push(i, (j + 1) % nb, lab);
                try_push(i, (j + nb - 1) % nb, lab);
                if (i + 1 < na) try_push(i + 1, j, lab);
                else try_push(i, nb - 1 - j, lab);
                if (i > 0) try_push(i - 1, j, lab);
                else try_push(0, nb - 1 - j, lab);
            }
        }
    }
    return ComplementLabeling(na, std::move(labels), next_label);
}

// --- cut-open lifting -------------------------------------------------------

int LiftedCurve::winding() const {
    return static_cast<int>(std::lround(net_drift / kTwoPi));
}

LiftedCurve lift_to_cut_open(const Polyline& curve) {
    LiftedCurve out;
    out.closed = curve.closed;
    if (curve.points.empty()) return out;

    const double edge_tol = 1e-9;
    const double beta_tol = 1e-6;
    for (const auto& p : curve.points) {
        if ((p.alpha < edge_tol || p.alpha > M_PI - edge_tol) &&
            std::abs(circ_diff(p.beta)) > beta_tol) {
            throw LiftObstructed("lift_to_cut_open: curve meets an alpha edge away from beta == 0");
        }
    }

    double level = curve.points.front().beta;
    const double start = level;
    out.points.push_back({curve.points.front().alpha, reduce_2pi(level)});
    for (std::size_t k = 1; k < curve.points.size(); ++k) {
        const PillowPoint& p = curve.points[k];
        const bool near_edge = p.alpha < edge_tol || p.alpha > M_PI - edge_tol;
        double d = circ_diff(p.beta - level);
        if (near_edge) {
            // Both beta representatives coincide up to the edge tolerance.
            const double alt = circ_diff(-p.beta - level);
            if (std::abs(alt) < std::abs(d)) d = alt;
        }
        level += d;
        out.points.push_back({p.alpha, reduce_2pi(level)});
    }
    out.net_drift = level - start;
    return out;
}

} // namespace pillowcase

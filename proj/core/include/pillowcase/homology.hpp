#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "pillowcase/errors.hpp"

namespace pillowcase {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    /// Exact determinant (square matrices) by fraction-free elimination.
    BigInt determinant() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> e_;
};

/// U * M * V = S with U, V unimodular and S diagonal with a divisibility
/// chain d1 | d2 | ... (the invariant factors, including any 1s and 0s).
struct SNFResult {
    IntMatrix U, S, V;
    std::vector<BigInt> invariant_factors;
};

SNFResult smith_normal_form(const IntMatrix& M);

/// Invariant factors of Z^rows / column span of M: the nontrivial torsion
/// factors in divisibility order, followed by one 0 per free summand.
std::vector<BigInt> cokernel(const IntMatrix& M);

/// Order of the finite part: product of the nonzero invariant factors.
/// Zero factors (free summands) make the group infinite; returns 0 then.
BigInt group_order(const std::vector<BigInt>& factors);

/// Pretty form such as "Z/4", "Z + Z/2", "0" for the trivial group.
std::string format_factors(const std::vector<BigInt>& factors);

// ---------------------------------------------------------------------------
// Slopes and gluings
// ---------------------------------------------------------------------------

/// A peripheral slope r/s with gcd(|r|, |s|) = 1, stored canonically with
/// r > 0, or r = 0 and s = 1.
struct SlopeClass {
    long r = 0, s = 1;
    SlopeClass() = default;
    SlopeClass(long r_, long s_);
};

/// |r1 s2 - r2 s1|.
long slope_distance(const SlopeClass& s1, const SlopeClass& s2);

/// Gluing of two boundary tori written as mu1 ~ mu2^a lambda2^b,
/// lambda1 ~ mu2^c lambda2^d, with |ad - bc| = 1.
struct GluingMatrix {
    long a = 1, b = 0, c = 0, d = 1;
    GluingMatrix() = default;
    GluingMatrix(long a_, long b_, long c_, long d_);
    long det() const { return a * d - b * c; }
    bool operator==(const GluingMatrix& o) const = default;
    std::string to_string() const;
};

/// H_1 data of a torus-boundary manifold: invariant factors of the ambient
/// group (0 = free summand) and the peripheral images as integer vectors in
/// that presentation.  The longitude image must have finite order.
struct PeripheralHomologyData {
    std::vector<BigInt> ambient;
    std::vector<BigInt> mu_image;
    std::vector<BigInt> lambda_image;
    BigInt longitude_order = 1;

    PeripheralHomologyData(std::vector<BigInt> ambient_, std::vector<BigInt> mu,
                           std::vector<BigInt> lambda);

    /// Knot exterior in a homology sphere: H1 = Z, mu -> 1, lambda -> 0.
    static PeripheralHomologyData knot_exterior();
};

/// Invariant factors of the Dehn filling along r*mu + s*lambda.
std::vector<BigInt> filling_homology(const PeripheralHomologyData& data, const SlopeClass& slope);

/// Invariant factors of the manifold glued from two torus-boundary pieces,
/// imposing mu1 = mu2^a lambda2^b and lambda1 = mu2^c lambda2^d in
/// H1(M1) + H1(M2).
std::vector<BigInt> splice_homology(const GluingMatrix& g, const PeripheralHomologyData& side1,
                                    const PeripheralHomologyData& side2);

// ---------------------------------------------------------------------------
// Normalization of order-4 gluings
// ---------------------------------------------------------------------------

/// The re-coordinatization moves used to bring a gluing to normal form.
/// Twist1(k):  mu1 -> mu1 lambda1^k        (a, b) -> (a + kc, b + kd)
/// Twist2(m):  mu2 -> mu2 lambda2^m        (b, d) -> (b - ma, d - mc)
/// Reverse2:   reverse the orientation of the second knot: negate all entries
/// ReverseBoth: invert both longitudes     (b, c) -> (-b, -c)
struct GluingMove {
    enum class Kind { Twist1, Twist2, Reverse2, ReverseBoth };
    Kind kind = Kind::Twist1;
    long k = 0;
    std::string to_string() const;
};

GluingMatrix apply_move(const GluingMatrix& g, const GluingMove& move);
GluingMatrix apply_moves(const GluingMatrix& g, const std::vector<GluingMove>& moves);

/// Side data transformations matching each move (the moves re-coordinatize
/// the peripheral bases, so the glued manifold is unchanged).
void apply_move_to_sides(const GluingMove& move, PeripheralHomologyData& side1,
                         PeripheralHomologyData& side2);

struct NormalizationResult {
    std::vector<GluingMove> moves;
    GluingMatrix normal;
    bool orientation_reversed = false;
    long n = 4; // |c| of the input
};

/// Brings a determinant -1 gluing with |c| = 4 (generalized: |c| = n with
/// a = +-1 mod n) to the normal form (1, 0, -n, -1).
/// Throws WrongDeterminant or NotNormalizable.
NormalizationResult normalize_order4_gluing(const GluingMatrix& g);

} // namespace pillowcase

#pragma once

// Exact arithmetic substrate: rationals, angular order on integer direction
// vectors, orientation and rational projective maps.

#include <array>
#include <compare>
#include <string>

#include <gmpxx.h>

namespace cak {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical (gcd 1, positive denominator)

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
/// "num/den", with "/den" omitted when den == 1.
std::string to_string(const Rational& q);

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& s, const Point2& p);
/// Total order used for containers only (x, then y).
bool lex_less(const Point2& a, const Point2& b);

/// A nonzero integer vector in primitive form. It stands for the angle of the
/// vector in (0, 2*pi]; (1,0) is the maximal angle 2*pi.
class Direction {
public:
    Direction(Integer dx, Integer dy);
    Direction(long dx, long dy) : Direction(Integer(dx), Integer(dy)) {}
    /// Primitive integer direction of a nonzero rational vector.
    static Direction of(const Rational& x, const Rational& y);

    const Integer& dx() const { return dx_; }
    const Integer& dy() const { return dy_; }
    /// Approximate angle in (0, 2*pi], for presentation only.
    double radians() const;

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    Integer dx_;
    Integer dy_;
};

Rational dot(const Direction& d, const Point2& p);
int sign(const Integer& v);
int sign(const Rational& v);

/// Angular order on (0, 2*pi]. Equal exactly on positive multiples.
std::strong_ordering cmp_angle(const Direction& a, const Direction& b);

/// A direction strictly between a and b; requires a < b and the counter-clockwise
/// arc from a to b shorter than pi.
Direction direction_between(const Direction& a, const Direction& b);

/// Sign of det[q - p, r - p]; +1 is counter-clockwise.
int orient(const Point2& p, const Point2& q, const Point2& r);

/// Fraction of a full turn in (0, 1].
class Turn {
public:
    explicit Turn(Rational value);
    /// Reduces any rational modulo 1 into (0, 1].
    static Turn wrap(const Rational& value);

    const Rational& value() const { return value_; }
    friend auto operator<=>(const Turn& a, const Turn& b) { return cmp(a.value_, b.value_) <=> 0; }
    friend bool operator==(const Turn& a, const Turn& b) { return a.value_ == b.value_; }

private:
    Rational value_;
};

class ProjectiveMap {
public:
    using Matrix = std::array<Rational, 9>;  // row-major 3x3

    explicit ProjectiveMap(Matrix m);
    static ProjectiveMap identity();

    const Matrix& matrix() const { return m_; }
    const Rational& at(int row, int col) const { return m_[static_cast<size_t>(row * 3 + col)]; }
    /// Homogeneous weight of the image of p (the last coordinate before division).
    Rational weight(const Point2& p) const;

    friend bool operator==(const ProjectiveMap&, const ProjectiveMap&) = default;

private:
    Matrix m_;
};

Rational determinant(const ProjectiveMap::Matrix& m);

/// The unique map (normalized up to scale) sending src[i] to dst[i].
/// Both quadruples must be in general position.
ProjectiveMap projective_from_correspondence(const std::array<Point2, 4>& src,
                                             const std::array<Point2, 4>& dst);

/// Throws when p is sent to the line at infinity.
Point2 apply_projective(const ProjectiveMap& map, const Point2& p);

}  // namespace cak

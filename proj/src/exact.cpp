#include "cak/exact.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>

#include "cak/error.hpp"

namespace cak {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::Genericity: return "genericity";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("CAK_LOG");
        if (env == nullptr) return LogLevel::Warn;
        std::string v(env);
        if (v == "error") return LogLevel::Error;
        if (v == "info") return LogLevel::Info;
        if (v == "debug") return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

void log(LogLevel level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    static constexpr const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[cak " << names[static_cast<int>(level)] << "] " << message << '\n';
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        fail(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
    const auto strip = [](const std::string& s) { return s[0] == '+' ? s.substr(1) : s; };
    return make_rational(Integer(strip(num)), Integer(strip(den)));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

bool lex_less(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

int sign(const Integer& v) { return sgn(v); }
int sign(const Rational& v) { return sgn(v); }

Direction::Direction(Integer dx, Integer dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
    if (dx_ == 0 && dy_ == 0) fail(ErrorKind::InvalidInput, "zero direction vector");
    Integer g;
    mpz_gcd(g.get_mpz_t(), dx_.get_mpz_t(), dy_.get_mpz_t());
    if (g != 1) {
        dx_ /= g;
        dy_ /= g;
    }
}

Direction Direction::of(const Rational& x, const Rational& y) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
    Rational sx = x * l, sy = y * l;
    return Direction(sx.get_num(), sy.get_num());
}

double Direction::radians() const {
    double a = std::atan2(dy_.get_d(), dx_.get_d());
    if (a <= 0) a += 2 * std::numbers::pi;
    return a;
}

Rational dot(const Direction& d, const Point2& p) { return d.dx() * p.x + d.dy() * p.y; }

namespace {

// 0 for angles in (0, pi], 1 for (pi, 2*pi].
int half_of(const Direction& d) {
    if (d.dy() > 0) return 0;
    if (d.dy() == 0 && d.dx() < 0) return 0;
    return 1;
}

}  // namespace

std::strong_ordering cmp_angle(const Direction& a, const Direction& b) {
    const int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha <=> hb;
    const Integer cross = a.dx() * b.dy() - a.dy() * b.dx();
    const int s = sgn(cross);
    if (s > 0) return std::strong_ordering::less;
    if (s < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Direction direction_between(const Direction& a, const Direction& b) {
    if (cmp_angle(a, b) != std::strong_ordering::less)
        fail(ErrorKind::InvalidInput, "direction_between: first direction is not below the second");
    const Integer cross = a.dx() * b.dy() - a.dy() * b.dx();
    if (cross <= 0) fail(ErrorKind::InvalidInput, "direction_between: arc is not shorter than pi");
    return Direction(a.dx() + b.dx(), a.dy() + b.dy());
}

int orient(const Point2& p, const Point2& q, const Point2& r) {
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

Turn::Turn(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (value_ <= 0 || value_ > 1) fail(ErrorKind::InvalidInput, "turn outside (0, 1]: " + to_string(value_));
}

Turn Turn::wrap(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    Rational r = v - fl;
    if (r == 0) r = 1;
    return Turn(r);
}

Rational determinant(const ProjectiveMap::Matrix& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

ProjectiveMap::ProjectiveMap(Matrix m) : m_(std::move(m)) {
    if (determinant(m_) == 0) fail(ErrorKind::InvalidInput, "singular projective matrix");
}

ProjectiveMap ProjectiveMap::identity() {
    return ProjectiveMap({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1), Rational(0),
                          Rational(0), Rational(0), Rational(1)});
}

Rational ProjectiveMap::weight(const Point2& p) const { return at(2, 0) * p.x + at(2, 1) * p.y + at(2, 2); }

namespace {

using Matrix = ProjectiveMap::Matrix;

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s = 0;
            for (int k = 0; k < 3; ++k) s += a[i * 3 + k] * b[k * 3 + j];
            c[i * 3 + j] = s;
        }
    return c;
}

Matrix inverse(const Matrix& m) {
    const Rational det = determinant(m);
    Matrix adj = {m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8], m[1] * m[5] - m[2] * m[4],
                  m[5] * m[6] - m[3] * m[8], m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
                  m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7], m[0] * m[4] - m[1] * m[3]};
    for (auto& v : adj) v /= det;
    return adj;
}

// Matrix whose columns are the homogeneous points 0..2 scaled so that they sum to point 3.
Matrix frame(const std::array<Point2, 4>& pts) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0)
                    fail(ErrorKind::InvalidInput, "projective frame has three collinear points");
    Matrix base = {pts[0].x, pts[1].x, pts[2].x, pts[0].y, pts[1].y, pts[2].y, Rational(1), Rational(1), Rational(1)};
    const Matrix inv = inverse(base);
    const Rational lambda[3] = {inv[0] * pts[3].x + inv[1] * pts[3].y + inv[2],
                                inv[3] * pts[3].x + inv[4] * pts[3].y + inv[5],
                                inv[6] * pts[3].x + inv[7] * pts[3].y + inv[8]};
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) base[row * 3 + col] *= lambda[col];
    return base;
}

}  // namespace

ProjectiveMap projective_from_correspondence(const std::array<Point2, 4>& src, const std::array<Point2, 4>& dst) {
    Matrix m = multiply(frame(dst), inverse(frame(src)));
    // Fix the scale: the last nonzero entry becomes 1.
    for (int i = 8; i >= 0; --i) {
        if (m[i] != 0) {
            const Rational s = m[i];
            for (auto& v : m) v /= s;
            break;
        }
    }
    ProjectiveMap map(m);
    for (size_t i = 0; i < 4; ++i)
        if (!(apply_projective(map, src[i]) == dst[i]))
            fail(ErrorKind::Internal, "projective map does not reproduce its correspondence");
    return map;
}

Point2 apply_projective(const ProjectiveMap& map, const Point2& p) {
    const Rational w = map.weight(p);
    if (w == 0) fail(ErrorKind::InvalidInput, "point is sent to the line at infinity");
    return {(map.at(0, 0) * p.x + map.at(0, 1) * p.y + map.at(0, 2)) / w,
            (map.at(1, 0) * p.x + map.at(1, 1) * p.y + map.at(1, 2)) / w};
}

}  // namespace cak

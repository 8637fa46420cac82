#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

namespace optact {

/// Real 2x2 matrix, row-major.
struct Mat2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;

    static constexpr Mat2 identity() noexcept { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() noexcept { return {}; }

    constexpr bool operator==(const Mat2&) const noexcept = default;

    [[nodiscard]] bool isfinite() const noexcept;
    [[nodiscard]] constexpr Mat2 transposed() const noexcept { return {a11, a21, a12, a22}; }
};

constexpr Mat2 operator+(const Mat2& a, const Mat2& b) noexcept {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

constexpr Mat2 operator-(const Mat2& a, const Mat2& b) noexcept {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

constexpr Mat2 operator-(const Mat2& a) noexcept { return {-a.a11, -a.a12, -a.a21, -a.a22}; }

constexpr Mat2 operator*(double s, const Mat2& a) noexcept {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}

constexpr Mat2 mul2(const Mat2& a, const Mat2& b) noexcept {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

constexpr Mat2 operator*(const Mat2& a, const Mat2& b) noexcept { return mul2(a, b); }

/// a11 a22 - a12 a21, with the cancellation compensated through fma.
double det2(const Mat2& a) noexcept;

constexpr double trace2(const Mat2& a) noexcept { return a.a11 + a.a22; }

constexpr Mat2 commutator2(const Mat2& a, const Mat2& b) noexcept { return a * b - b * a; }

double frobenius(const Mat2& a) noexcept;
double distance(const Mat2& a, const Mat2& b) noexcept;

/// Real forms of the three pure-imaginary Sp(2) generators.
///
/// J is the rotation generator, K1 squeezes along the coordinate axes and
/// K2 squeezes along the diagonals. The algebra closes with integer
/// structure constants:
///   [J, K1] = 2 K2,  [J, K2] = -2 K1,  [K1, K2] = -2 J.
namespace generators {
inline constexpr Mat2 J{0.0, -1.0, 1.0, 0.0};
inline constexpr Mat2 K1{1.0, 0.0, 0.0, -1.0};
inline constexpr Mat2 K2{0.0, 1.0, 1.0, 0.0};
}  // namespace generators

/// Thrown when a truncated series fails to reach its tolerance.
class SeriesNotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kSeriesTolerance = 1e-14;
inline constexpr int kSeriesMaxTerms = 64;

/// Taylor series sum_n a^n / n!.
///
/// Summation stops once the Frobenius norm of the next term drops to
/// `tol` times the norm of the leading identity term. A term that is
/// exactly zero (nilpotent input) ends the series immediately. Entries are
/// accumulated with Neumaier compensation. Throws SeriesNotConverged when
/// `max_terms` terms are consumed first.
Mat2 expm2_series(const Mat2& a, double tol = kSeriesTolerance, int max_terms = kSeriesMaxTerms);

/// Real 4x4 matrix over Minkowski coordinates (x, y, z, t), row-major.
struct Mat4 {
    std::array<double, 16> m{};

    static constexpr Mat4 identity() noexcept {
        Mat4 r;
        r.m[0] = r.m[5] = r.m[10] = r.m[15] = 1.0;
        return r;
    }

    constexpr double& operator()(std::size_t row, std::size_t col) noexcept { return m[row * 4 + col]; }
    constexpr double operator()(std::size_t row, std::size_t col) const noexcept { return m[row * 4 + col]; }

    constexpr bool operator==(const Mat4&) const noexcept = default;

    [[nodiscard]] bool isfinite() const noexcept;
    [[nodiscard]] Mat4 transposed() const noexcept;
};

struct FourVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;

    constexpr bool operator==(const FourVector&) const noexcept = default;
};

Mat4 mul4(const Mat4& a, const Mat4& b) noexcept;
inline Mat4 operator*(const Mat4& a, const Mat4& b) noexcept { return mul4(a, b); }

FourVector apply4(const Mat4& a, const FourVector& v) noexcept;

/// x_u x_v + y_u y_v + z_u z_v - t_u t_v
constexpr double minkowski(const FourVector& u, const FourVector& v) noexcept {
    return u.x * v.x + u.y * v.y + u.z * v.z - u.t * v.t;
}

double frobenius(const Mat4& a) noexcept;
double distance(const Mat4& a, const Mat4& b) noexcept;

/// Euclidean norm of u - v over all four components.
double euclidean_distance(const FourVector& u, const FourVector& v) noexcept;

/// Metric diag(1, 1, 1, -1).
inline constexpr Mat4 kMinkowskiMetric = [] {
    Mat4 g = Mat4::identity();
    g.m[15] = -1.0;
    return g;
}();

/// Frobenius norm of L^T g L - g; zero for a Lorentz transformation.
double lorentz_defect(const Mat4& l) noexcept;

}  // namespace optact

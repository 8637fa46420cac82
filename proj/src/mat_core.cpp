#include "optact/mat_core.hpp"

#include <cmath>
#include <string>

namespace optact {

namespace {

// Neumaier-compensated running sum of one scalar.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) noexcept {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }

    [[nodiscard]] double value() const noexcept { return sum + carry; }
};

}  // namespace

bool Mat2::isfinite() const noexcept {
    return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
}

double det2(const Mat2& a) noexcept {
    const double w = a.a12 * a.a21;
    const double e = std::fma(-a.a12, a.a21, w);
    const double f = std::fma(a.a11, a.a22, -w);
    return f + e;
}

double frobenius(const Mat2& a) noexcept {
    return std::sqrt(a.a11 * a.a11 + a.a12 * a.a12 + a.a21 * a.a21 + a.a22 * a.a22);
}

double distance(const Mat2& a, const Mat2& b) noexcept { return frobenius(a - b); }

Mat2 expm2_series(const Mat2& a, double tol, int max_terms) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("expm2_series: tolerance must be positive");
    }
    if (max_terms < 1) {
        throw std::invalid_argument("expm2_series: max_terms must be at least 1");
    }

    const double threshold = tol * frobenius(Mat2::identity());
    std::array<CompensatedSum, 4> acc;
    Mat2 term = Mat2::identity();
    auto accumulate = [&acc](const Mat2& t) {
        acc[0].add(t.a11);
        acc[1].add(t.a12);
        acc[2].add(t.a21);
        acc[3].add(t.a22);
    };
    auto result = [&acc] {
        return Mat2{acc[0].value(), acc[1].value(), acc[2].value(), acc[3].value()};
    };

    accumulate(term);
    for (int n = 1; n < max_terms; ++n) {
        term = (1.0 / n) * (term * a);
        const double norm = frobenius(term);
        if (norm == 0.0) {
            return result();
        }
        accumulate(term);
        if (norm <= threshold) {
            return result();
        }
    }
    throw SeriesNotConverged("expm2_series: no convergence within " + std::to_string(max_terms) +
                             " terms");
}

bool Mat4::isfinite() const noexcept {
    for (double v : m) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

Mat4 Mat4::transposed() const noexcept {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

Mat4 mul4(const Mat4& a, const Mat4& b) noexcept {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                s += a(i, k) * b(k, j);
            }
            r(i, j) = s;
        }
    }
    return r;
}

FourVector apply4(const Mat4& a, const FourVector& v) noexcept {
    const std::array<double, 4> in{v.x, v.y, v.z, v.t};
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            s += a(i, k) * in[k];
        }
        out[i] = s;
    }
    return {out[0], out[1], out[2], out[3]};
}

double frobenius(const Mat4& a) noexcept {
    double s = 0.0;
    for (double v : a.m) {
        s += v * v;
    }
    return std::sqrt(s);
}

double distance(const Mat4& a, const Mat4& b) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
        const double d = a.m[i] - b.m[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double euclidean_distance(const FourVector& u, const FourVector& v) noexcept {
    const double dx = u.x - v.x;
    const double dy = u.y - v.y;
    const double dz = u.z - v.z;
    const double dt = u.t - v.t;
    return std::sqrt(dx * dx + dy * dy + dz * dz + dt * dt);
}

double lorentz_defect(const Mat4& l) noexcept {
    return distance(l.transposed() * kMinkowskiMetric * l, kMinkowskiMetric);
}

}  // namespace optact

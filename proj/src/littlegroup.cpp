#include "optact/littlegroup.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace optact {

namespace {

using cplx = std::complex<double>;

// Complex 2x2, row-major.
using CMat2 = std::array<cplx, 4>;

CMat2 coordinate_matrix(const FourVector& v) {
    const cplx i{0.0, 1.0};
    return {v.t + v.z, v.x - i * v.y, v.x + i * v.y, v.t - v.z};
}

FourVector coordinates(const CMat2& x) {
    return {0.5 * (x[1] + x[2]).real(), 0.5 * (x[2] - x[1]).imag(), 0.5 * (x[0] - x[3]).real(),
            0.5 * (x[0] + x[3]).real()};
}

CMat2 congruence(const Mat2& m, const CMat2& x) {
    // m x
    const CMat2 mx{m.a11 * x[0] + m.a12 * x[2], m.a11 * x[1] + m.a12 * x[3],
                   m.a21 * x[0] + m.a22 * x[2], m.a21 * x[1] + m.a22 * x[3]};
    // (m x) m^T
    return {mx[0] * m.a11 + mx[1] * m.a12, mx[0] * m.a21 + mx[1] * m.a22,
            mx[2] * m.a11 + mx[3] * m.a12, mx[2] * m.a21 + mx[3] * m.a22};
}

Mat4 hyperbolic_block(std::size_t space, double rapidity) {
    Mat4 r = Mat4::identity();
    const double c = std::cosh(rapidity);
    const double s = std::sinh(rapidity);
    r(space, space) = c;
    r(space, 3) = s;
    r(3, space) = s;
    r(3, 3) = c;
    return r;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Mat4 boost_z(double eta) { return hyperbolic_block(2, 2.0 * eta); }

Mat4 boost_x(double w) { return hyperbolic_block(0, 2.0 * w); }

Mat4 rot_zx(double angle) {
    Mat4 r = Mat4::identity();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    r(0, 0) = c;
    r(0, 2) = s;
    r(2, 0) = -s;
    r(2, 2) = c;
    return r;
}

Mat4 gauge_matrix(double g) {
    const double a = 2.0 * g;
    const double b = 2.0 * g * g;
    Mat4 r;
    r.m = {1.0, 0.0, -a, a,  //
           0.0, 1.0, 0.0, 0.0,  //
           a, 0.0, 1.0 - b, b,  //
           a, 0.0, -b, 1.0 + b};
    return r;
}

Mat4 lift(const Mat2& m) {
    if (!m.isfinite() || !(std::abs(det2(m) - 1.0) <= kLiftDetTolerance)) {
        throw NotUnimodular("lift: matrix is not unimodular (det = " + std::to_string(det2(m)) + ")");
    }
    static constexpr std::array<FourVector, 4> basis{
        FourVector{1, 0, 0, 0}, FourVector{0, 1, 0, 0}, FourVector{0, 0, 1, 0}, FourVector{0, 0, 0, 1}};
    Mat4 out;
    for (std::size_t col = 0; col < 4; ++col) {
        const FourVector image = coordinates(congruence(m, coordinate_matrix(basis[col])));
        out(0, col) = image.x;
        out(1, col) = image.y;
        out(2, col) = image.z;
        out(3, col) = image.t;
    }
    return out;
}

double atanh_log(double x) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("atanh_log: |x| must be below 1");
    }
    return 0.5 * std::log((1.0 + x) / (1.0 - x));
}

double rapidity_massive(double momentum, double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw InvalidKinematics("massive: mass must be positive");
    }
    if (!(momentum >= 0.0) || !std::isfinite(momentum)) {
        throw InvalidKinematics("massive: momentum must be non-negative");
    }
    // atanh(p / E) = ln((E + p) / m) with E = sqrt(p^2 + m^2).
    return 0.5 * std::log((std::hypot(momentum, mass) + momentum) / mass);
}

double rapidity_spacelike(double momentum, double energy) {
    if (!(momentum > 0.0) || !std::isfinite(momentum)) {
        throw InvalidKinematics("spacelike: momentum must be positive");
    }
    if (!(energy >= 0.0) || !std::isfinite(energy)) {
        throw InvalidKinematics("spacelike: energy must be non-negative");
    }
    if (!(energy < momentum)) {
        throw InvalidKinematics("not space-like: energy must be below momentum");
    }
    // atanh(e / p) with 1 +- x scaled by p so that p - e is never rounded away.
    return 0.25 * std::log((momentum + energy) / (momentum - energy));
}

std::string_view kind_name(const LittleGroupKind& kind) noexcept {
    switch (kind.index()) {
        case 0: return "massive";
        case 1: return "spacelike";
        default: return "lightlike";
    }
}

void validate(const LittleGroupKind& kind) {
    std::visit(overloaded{
                   [](const Massive& k) { (void)rapidity_massive(k.momentum, k.mass); },
                   [](const Spacelike& k) { (void)rapidity_spacelike(k.momentum, k.energy); },
                   [](const Lightlike& k) {
                       if (!(k.momentum > 0.0) || !std::isfinite(k.momentum)) {
                           throw InvalidKinematics("lightlike: momentum must be positive");
                       }
                   },
               },
               kind);
}

FourVector reference_vector(const LittleGroupKind& kind) {
    validate(kind);
    return std::visit(overloaded{
                          [](const Massive& k) {
                              return FourVector{0.0, 0.0, k.momentum, std::hypot(k.momentum, k.mass)};
                          },
                          [](const Spacelike& k) { return FourVector{0.0, 0.0, k.momentum, k.energy}; },
                          [](const Lightlike& k) { return FourVector{0.0, 0.0, k.momentum, k.momentum}; },
                      },
                      kind);
}

Mat4 little_group_element(const LittleGroupKind& kind, double param) {
    validate(kind);
    return std::visit(overloaded{
                          [param](const Massive& k) {
                              const double eta = rapidity_massive(k.momentum, k.mass);
                              return boost_z(eta) * rot_zx(param) * boost_z(-eta);
                          },
                          [param](const Spacelike& k) {
                              const double eta = rapidity_spacelike(k.momentum, k.energy);
                              return boost_z(eta) * boost_x(param) * boost_z(-eta);
                          },
                          [param](const Lightlike&) { return gauge_matrix(param); },
                      },
                      kind);
}

double invariance_residual(const Mat4& l, const FourVector& v) noexcept {
    return euclidean_distance(apply4(l, v), v);
}

}  // namespace optact

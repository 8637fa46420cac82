#include "optact/medium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "optact/optics.hpp"

namespace optact {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

// Below this |D| z^2 the trigonometric/hyperbolic ratio is replaced by its series.
constexpr double kSeriesSwitch = 1e-8;

}  // namespace

Attenuation decompose_attenuation(double mu1, double mu2) {
    require_finite(mu1, "mu1");
    require_finite(mu2, "mu2");
    return {(mu2 + mu1) / 2.0, (mu2 - mu1) / 2.0};
}

MediumParams MediumParams::from_coefficients(double gamma, double mu1, double mu2) {
    require_finite(gamma, "gamma");
    const Attenuation a = decompose_attenuation(mu1, mu2);
    return {gamma, mu1, mu2, a.lambda, a.mu};
}

MediumParams MediumParams::from_lambda_mu(double gamma, double lambda, double mu) {
    require_finite(gamma, "gamma");
    require_finite(lambda, "lambda");
    require_finite(mu, "mu");
    return {gamma, lambda - mu, lambda + mu, lambda, mu};
}

std::string_view regime_name(const Regime& r) noexcept {
    switch (r.index()) {
        case 0: return "elliptic";
        case 1: return "parabolic";
        default: return "hyperbolic";
    }
}

Mat2 generator(double gamma, double mu) { return {0.0, -(gamma - mu), gamma + mu, 0.0}; }

Regime classify(double gamma, double mu, double rel_tol) {
    if (!(rel_tol >= 0.0)) {
        throw std::invalid_argument("classify: rel_tol must be non-negative");
    }
    require_finite(gamma, "gamma");
    require_finite(mu, "mu");

    const double ag = std::abs(gamma);
    const double am = std::abs(mu);
    const double scale = std::max({ag, am, kClassifyFloor});
    if (std::abs(ag - am) <= rel_tol * scale) {
        return Parabolic{gamma};
    }
    const double minus = gamma - mu;
    const double plus = gamma + mu;
    if (ag > am) {
        return Elliptic{std::sqrt(minus * plus), 0.25 * std::log(minus / plus)};
    }
    return Hyperbolic{std::sqrt(-minus * plus), 0.25 * std::log(-minus / plus)};
}

TransferResult transfer_closed(const MediumParams& params, double z) {
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw std::invalid_argument("transfer_closed: z must be finite and non-negative");
    }
    const double gamma = params.gamma();
    const double mu = params.mu();
    const double minus = gamma - mu;
    const double plus = gamma + mu;
    const double disc = minus * plus;
    const double x2 = disc * z * z;

    double c = 1.0;
    double s = z;
    if (std::abs(x2) < kSeriesSwitch) {
        c = 1.0 - x2 / 2.0 + x2 * x2 / 24.0;
        s = z * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
    } else if (disc > 0.0) {
        const double r = std::sqrt(disc);
        c = std::cos(r * z);
        s = std::sin(r * z) / r;
    } else {
        const double r = std::sqrt(-disc);
        c = std::cosh(r * z);
        s = std::sinh(r * z) / r;
    }

    const double factor = std::exp(-params.lambda() * z);
    const Mat2 m{factor * c, -factor * minus * s, factor * plus * s, factor * c};
    return {m, classify(gamma, mu), factor};
}

Mat2 transfer_step(const MediumParams& params, double h) {
    return std::exp(-params.lambda() * h) *
           (squeeze_at_angle(kQuarterPi, params.mu() * h) * rotation(params.gamma() * h));
}

Mat2 transfer_product(const MediumParams& params, double z, std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("transfer_product: n must be at least 1");
    }
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw std::invalid_argument("transfer_product: z must be finite and non-negative");
    }
    // Binary powering of the identical steps: the same n-fold product with
    // O(log n) multiplications.
    Mat2 base = transfer_step(params, z / static_cast<double>(n));
    Mat2 acc = Mat2::identity();
    for (std::uint64_t k = n; k > 0; k >>= 1U) {
        if (k & 1U) {
            acc = acc * base;
        }
        base = base * base;
    }
    return acc;
}

}  // namespace optact

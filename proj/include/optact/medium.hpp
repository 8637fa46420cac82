#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "optact/mat_core.hpp"

namespace optact {

/// Isotropic loss `lambda` and squeeze rate `mu` of an attenuation pair.
struct Attenuation {
    double lambda = 0.0;
    double mu = 0.0;
};

/// lambda = (mu2 + mu1) / 2, mu = (mu2 - mu1) / 2.
Attenuation decompose_attenuation(double mu1, double mu2);

/// Homogeneous optically active medium with axis-asymmetric attenuation.
///
/// `gamma` is the rotary power (rad per unit length, either sign). `mu1`
/// and `mu2` are the attenuation coefficients along x and y. Negative
/// coefficients describe gain; they are accepted so that the lossless
/// (lambda = 0) squeeze configurations stay expressible, and
/// `is_passive()` reports whether both coefficients are non-negative.
class MediumParams {
public:
    /// From the physical inputs (gamma, mu1, mu2).
    static MediumParams from_coefficients(double gamma, double mu1, double mu2);
    /// From the decomposed form (gamma, lambda, mu); mu1 = lambda - mu, mu2 = lambda + mu.
    static MediumParams from_lambda_mu(double gamma, double lambda, double mu);

    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double mu1() const noexcept { return mu1_; }
    [[nodiscard]] double mu2() const noexcept { return mu2_; }
    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] double mu() const noexcept { return mu_; }
    [[nodiscard]] bool is_passive() const noexcept { return mu1_ >= 0.0 && mu2_ >= 0.0; }

private:
    MediumParams(double gamma, double mu1, double mu2, double lambda, double mu) noexcept
        : gamma_(gamma), mu1_(mu1), mu2_(mu2), lambda_(lambda), mu_(mu) {}

    double gamma_;
    double mu1_;
    double mu2_;
    double lambda_;
    double mu_;
};

/// |gamma| > |mu|: exp(Gz) is a squeezed rotation, k = sqrt(gamma^2 - mu^2).
struct Elliptic {
    double k;
    double eta;
};

/// |gamma| == |mu|: G is nilpotent and exp(Gz) = I + Gz.
struct Parabolic {
    double gamma;
};

/// |mu| > |gamma|: exp(Gz) is a squeezed boost, k = sqrt(mu^2 - gamma^2).
struct Hyperbolic {
    double k;
    double eta;
};

using Regime = std::variant<Elliptic, Parabolic, Hyperbolic>;

std::string_view regime_name(const Regime& r) noexcept;

inline constexpr double kClassifyRelTol = 1e-9;
inline constexpr double kClassifyFloor = 1e-30;

/// G = [[0, -(gamma - mu)], [gamma + mu, 0]].
Mat2 generator(double gamma, double mu);

/// Regime of the generator for (gamma, mu).
///
/// Parabolic when ||gamma| - |mu|| <= rel_tol * max(|gamma|, |mu|, floor).
/// Otherwise eta is chosen so that B(eta) R(kz) B(-eta) (elliptic) or
/// B(eta) [[cosh, sinh], [sinh, cosh]](kz) B(-eta) (hyperbolic) equals
/// exp(Gz) for gamma > 0 (resp. mu > 0):
///   elliptic   e^{2 eta} = sqrt((gamma - mu) / (gamma + mu))
///   hyperbolic e^{2 eta} = sqrt((mu - gamma) / (mu + gamma))
/// Negative gamma (resp. mu) only reverses the sense of the rotation
/// (resp. boost); k stays non-negative.
Regime classify(double gamma, double mu, double rel_tol = kClassifyRelTol);

struct TransferResult {
    Mat2 matrix;           ///< e^{-lambda z} exp(G z)
    Regime regime;
    double lambda_factor;  ///< e^{-lambda z}
};

/// Macroscopic transfer matrix e^{-lambda z} exp(G z) in closed form.
///
/// Evaluated through a single branch-free expression in (gamma, mu):
///   exp(Gz) = [[c, -(gamma - mu) s], [(gamma + mu) s, c]]
/// with D = gamma^2 - mu^2, c = cos(sqrt(D) z), s = sin(sqrt(D) z)/sqrt(D)
/// (hyperbolic functions for D < 0, a short series for |D| z^2 < 1e-8),
/// so the result is continuous across the parabolic boundary. Requires z >= 0.
TransferResult transfer_closed(const MediumParams& params, double z);

/// One microscopic step e^{-lambda h} S(pi/4, mu h) R(gamma h).
Mat2 transfer_step(const MediumParams& params, double h);

/// The n-fold product of microscopic steps of length z/n.
///
/// Converges to transfer_closed as O(1/n). Requires n >= 1 and z >= 0.
Mat2 transfer_product(const MediumParams& params, double z, std::uint64_t n);

}  // namespace optact

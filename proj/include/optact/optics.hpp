#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "optact/mat_core.hpp"
#include "optact/medium.hpp"

namespace optact {

inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

/// [[cos a, -sin a], [sin a, cos a]]
Mat2 rotation(double alpha);

/// diag(e^beta, e^-beta)
Mat2 squeeze_axis(double beta);

/// Squeeze by e^w along the axis at angle theta from x: R(theta) diag(e^w, e^-w) R(-theta).
///
/// Symmetric and unimodular; at theta = pi/4 this is
/// [[cosh w, sinh w], [sinh w, cosh w]].
Mat2 squeeze_at_angle(double theta, double w);

/// Transverse field (E_x, E_y) of a fully polarized wave.
struct JonesState {
    std::complex<double> ex{};
    std::complex<double> ey{};

    [[nodiscard]] double intensity() const noexcept { return std::norm(ex) + std::norm(ey); }
    [[nodiscard]] bool is_null() const noexcept { return ex == 0.0 && ey == 0.0; }

    bool operator==(const JonesState&) const noexcept = default;
};

JonesState operator*(std::complex<double> c, const JonesState& s) noexcept;
JonesState operator+(const JonesState& a, const JonesState& b) noexcept;

/// ex = A e^{i phi1}, ey = B e^{i phi2}; A, B >= 0.
JonesState jones_from_amp_phase(double amp_x, double amp_y, double phase_x, double phase_y);

/// Carrier e^{i(k z - w t)} common to both components. The wavenumber here
/// is the optical carrier and unrelated to the regime parameter k of the
/// transfer matrix.
struct CarrierPhase {
    double carrier_wavenumber = 0.0;
    double angular_frequency = 0.0;

    [[nodiscard]] std::complex<double> factor(double z, double t) const noexcept;
};

/// State with the carrier phase at (z, t) applied to both components.
JonesState with_carrier(const JonesState& s, const CarrierPhase& carrier, double z, double t) noexcept;

/// Real M applied to real and imaginary parts alike.
JonesState propagate(const JonesState& state, const Mat2& m) noexcept;

struct PolarizationSummary {
    double intensity_x = 0.0;
    double intensity_y = 0.0;
    double intensity_total = 0.0;
    double azimuth = 0.0;            ///< (-pi/2, pi/2]
    double ellipticity_angle = 0.0;  ///< [-pi/4, pi/4]
};

/// Stokes-style readout of a Jones state.
///
/// s0 = |ex|^2 + |ey|^2, s1 = |ex|^2 - |ey|^2, s2 = 2 Re(ex conj(ey)),
/// s3 = -2 Im(ex conj(ey)). Azimuth is atan2(s2, s1) / 2 and the
/// ellipticity angle asin(s3 / s0) / 2, so that ey leading ex by pi/2 reads
/// +pi/4. The null state reads all zeros.
PolarizationSummary summarize(const JonesState& state) noexcept;

struct TrajectoryPoint {
    double z = 0.0;
    JonesState state;
    PolarizationSummary summary;
};

/// `samples` evenly spaced points on [0, z_max], both ends included, each
/// propagated through transfer_closed(params, z).
std::vector<TrajectoryPoint> trajectory(const MediumParams& params, const JonesState& initial,
                                        double z_max, std::size_t samples);

}  // namespace optact

#include "optact/optics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace optact {

Mat2 rotation(double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return {c, -s, s, c};
}

Mat2 squeeze_axis(double beta) { return {std::exp(beta), 0.0, 0.0, std::exp(-beta)}; }

Mat2 squeeze_at_angle(double theta, double w) {
    return rotation(theta) * squeeze_axis(w) * rotation(-theta);
}

JonesState operator*(std::complex<double> c, const JonesState& s) noexcept { return {c * s.ex, c * s.ey}; }

JonesState operator+(const JonesState& a, const JonesState& b) noexcept {
    return {a.ex + b.ex, a.ey + b.ey};
}

JonesState jones_from_amp_phase(double amp_x, double amp_y, double phase_x, double phase_y) {
    if (!(amp_x >= 0.0) || !(amp_y >= 0.0)) {
        throw std::invalid_argument("amplitudes must be non-negative");
    }
    if (!std::isfinite(amp_x) || !std::isfinite(amp_y) || !std::isfinite(phase_x) ||
        !std::isfinite(phase_y)) {
        throw std::invalid_argument("amplitudes and phases must be finite");
    }
    return {std::polar(amp_x, phase_x), std::polar(amp_y, phase_y)};
}

std::complex<double> CarrierPhase::factor(double z, double t) const noexcept {
    return std::polar(1.0, carrier_wavenumber * z - angular_frequency * t);
}

JonesState with_carrier(const JonesState& s, const CarrierPhase& carrier, double z, double t) noexcept {
    return carrier.factor(z, t) * s;
}

JonesState propagate(const JonesState& state, const Mat2& m) noexcept {
    return {m.a11 * state.ex + m.a12 * state.ey, m.a21 * state.ex + m.a22 * state.ey};
}

PolarizationSummary summarize(const JonesState& state) noexcept {
    PolarizationSummary out;
    out.intensity_x = std::norm(state.ex);
    out.intensity_y = std::norm(state.ey);
    out.intensity_total = out.intensity_x + out.intensity_y;
    if (out.intensity_total == 0.0) {
        return out;
    }
    const std::complex<double> cross = state.ex * std::conj(state.ey);
    const double s1 = out.intensity_x - out.intensity_y;
    const double s2 = 2.0 * cross.real();
    const double s3 = -2.0 * cross.imag();

    double azimuth = 0.5 * std::atan2(s2, s1);
    if (azimuth <= -std::numbers::pi / 2.0) {
        azimuth += std::numbers::pi;
    }
    out.azimuth = azimuth;
    out.ellipticity_angle = 0.5 * std::asin(std::clamp(s3 / out.intensity_total, -1.0, 1.0));
    return out;
}

std::vector<TrajectoryPoint> trajectory(const MediumParams& params, const JonesState& initial,
                                        double z_max, std::size_t samples) {
    if (samples < 2) {
        throw std::invalid_argument("trajectory: samples must be at least 2");
    }
    if (!(z_max > 0.0) || !std::isfinite(z_max)) {
        throw std::invalid_argument("trajectory: z_max must be finite and positive");
    }
    std::vector<TrajectoryPoint> out;
    out.reserve(samples);
    const std::size_t last = samples - 1;
    for (std::size_t i = 0; i < samples; ++i) {
        const double z =
            i == last ? z_max : z_max * static_cast<double>(i) / static_cast<double>(last);
        const JonesState s = propagate(initial, transfer_closed(params, z).matrix);
        out.push_back({z, s, summarize(s)});
    }
    return out;
}

}  // namespace optact

#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "optact/medium.hpp"
#include "optact/optics.hpp"
#include "test_support.hpp"

using namespace optact;
using std::numbers::pi;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double angle_mod_pi(double a) {
    double r = std::fmod(a, pi);
    if (r < 0) {
        r += pi;
    }
    return r;
}

// Distance between two angles taken modulo pi.
double angle_gap(double a, double b) {
    const double d = angle_mod_pi(a - b);
    return std::min(d, pi - d);
}

double state_distance(const JonesState& a, const JonesState& b) {
    return std::sqrt(std::norm(a.ex - b.ex) + std::norm(a.ey - b.ey));
}

JonesState random_state(testing::Gen& gen) {
    return jones_from_amp_phase(gen.uniform(0, 2), gen.uniform(0, 2), gen.uniform(-pi, pi), gen.uniform(-pi, pi));
}

}  // namespace

TEST_CASE("rotation") {
    CHECK(rotation(0.0) == Mat2::identity());
    CHECK(distance(rotation(pi), -Mat2::identity()) <= 1e-15);
    CHECK(distance(rotation(pi / 2), Mat2{0, -1, 1, 0}) <= 1e-15);
    for (double a : {-2.0, 0.3, 5.0}) {
        CHECK(det2(rotation(a)) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("squeeze_axis") {
    CHECK(squeeze_axis(0.0) == Mat2::identity());
    CHECK(distance(squeeze_axis(std::log(2.0)), Mat2{2, 0, 0, 0.5}) <= 1e-15);
    for (double b : {-1.5, 0.2, 2.0}) {
        CHECK(distance(squeeze_axis(b) * squeeze_axis(-b), Mat2::identity()) <= 1e-15);
    }
}

TEST_CASE("squeeze_at_angle") {
    for (double w : {-1.0, 0.25, 1.5}) {
        const Mat2 diag45{std::cosh(w), std::sinh(w), std::sinh(w), std::cosh(w)};
        CHECK(distance(squeeze_at_angle(pi / 4, w), diag45) <= 1e-14);
        CHECK(distance(squeeze_at_angle(0.0, w), squeeze_axis(w)) <= 1e-15);
    }
    for (double theta : {-1.0, 0.0, 0.6, 2.0}) {
        CHECK(distance(squeeze_at_angle(theta, 0.0), Mat2::identity()) <= 1e-15);
    }
    testing::Gen gen;
    for (int i = 0; i < 100; ++i) {
        const double theta = gen.uniform(-pi, pi);
        const double w = gen.uniform(-2, 2);
        const Mat2 s = squeeze_at_angle(theta, w);
        CHECK(std::abs(s.a12 - s.a21) <= 1e-13);
        CHECK(det2(s) == doctest::Approx(1.0).epsilon(1e-13));
        // The compressed form carries cos(2 theta) on the diagonal.
        CHECK(s.a11 == doctest::Approx(std::cosh(w) + std::cos(2 * theta) * std::sinh(w)).epsilon(1e-13));
        CHECK(s.a12 == doctest::Approx(std::sin(2 * theta) * std::sinh(w)).epsilon(1e-13));
    }
}

TEST_CASE("jones_from_amp_phase") {
    const JonesState lin_x = jones_from_amp_phase(1, 0, 0, 0);
    CHECK(lin_x.ex == std::complex<double>(1, 0));
    CHECK(lin_x.ey == std::complex<double>(0, 0));

    const JonesState circ = jones_from_amp_phase(kInvSqrt2, kInvSqrt2, 0, pi / 2);
    CHECK(std::abs(circ.ey - std::complex<double>(0, kInvSqrt2)) <= 1e-16);
    CHECK(summarize(circ).ellipticity_angle == doctest::Approx(pi / 4).epsilon(1e-7));

    CHECK(jones_from_amp_phase(0, 0, 1.0, 2.0).is_null());
    CHECK_THROWS_AS(jones_from_amp_phase(-1, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("propagate") {
    testing::Gen gen;
    const JonesState s = random_state(gen);
    CHECK(propagate(s, Mat2::identity()) == s);

    const JonesState lin_x = jones_from_amp_phase(1, 0, 0, 0);
    const JonesState turned = propagate(lin_x, rotation(pi / 2));
    CHECK(state_distance(turned, jones_from_amp_phase(0, 1, 0, 0)) <= 1e-15);

    const double w = 0.7;
    CHECK(std::abs(propagate(lin_x, squeeze_axis(w)).ex - std::exp(w)) <= 1e-15);
}

TEST_CASE("propagate preserves the relative phase under real matrices") {
    const JonesState s = jones_from_amp_phase(0.8, 0.6, 0.4, 1.3);
    const JonesState out = propagate(s, squeeze_axis(0.9));
    CHECK(std::arg(out.ey) - std::arg(out.ex) == doctest::Approx(1.3 - 0.4).epsilon(1e-14));
}

TEST_CASE("summarize") {
    const PolarizationSummary x = summarize(jones_from_amp_phase(1, 0, 0, 0));
    CHECK(x.azimuth == 0.0);
    CHECK(x.ellipticity_angle == 0.0);
    CHECK(x.intensity_total == 1.0);

    const PolarizationSummary left = summarize(jones_from_amp_phase(kInvSqrt2, kInvSqrt2, 0, -pi / 2));
    CHECK(left.ellipticity_angle == doctest::Approx(-pi / 4).epsilon(1e-7));

    const PolarizationSummary diag = summarize(jones_from_amp_phase(kInvSqrt2, kInvSqrt2, 0, 0));
    CHECK(diag.azimuth == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(std::abs(diag.ellipticity_angle) <= 1e-15);

    const PolarizationSummary y = summarize(jones_from_amp_phase(0, 1, 0, 0));
    CHECK(y.azimuth == doctest::Approx(pi / 2));

    const PolarizationSummary null = summarize(JonesState{});
    CHECK(null.intensity_total == 0.0);
    CHECK(null.azimuth == 0.0);
    CHECK(null.ellipticity_angle == 0.0);
}

TEST_CASE("summary invariants") {
    testing::Gen gen;
    for (int i = 0; i < 300; ++i) {
        const JonesState s = random_state(gen);
        const PolarizationSummary base = summarize(s);
        CHECK(base.intensity_total == doctest::Approx(base.intensity_x + base.intensity_y));
        CHECK(base.azimuth > -pi / 2);
        CHECK(base.azimuth <= pi / 2);
        CHECK(std::abs(base.ellipticity_angle) <= pi / 4);

        // Global phase, including a carrier e^{i(kz - wt)}.
        const std::complex<double> c = std::polar(1.0, gen.uniform(-pi, pi));
        const PolarizationSummary phased = summarize(c * s);
        const CarrierPhase carrier{gen.uniform(1, 100), gen.uniform(1, 100)};
        const PolarizationSummary carried = summarize(with_carrier(s, carrier, gen.uniform(0, 5), gen.uniform(0, 5)));
        for (const PolarizationSummary& other : {phased, carried}) {
            CHECK(other.intensity_total == doctest::Approx(base.intensity_total).epsilon(1e-13));
            CHECK(other.ellipticity_angle == doctest::Approx(base.ellipticity_angle).epsilon(1e-9));
            if (std::abs(base.ellipticity_angle) < pi / 4 - 1e-6) {
                CHECK(angle_gap(other.azimuth, base.azimuth) <= 1e-9);
            }
        }

        // Linearity for real coefficients.
        const JonesState s2 = random_state(gen);
        const Mat2 m = gen.mat2(2.0);
        const double a = gen.uniform(-2, 2);
        const double b = gen.uniform(-2, 2);
        const JonesState lhs = propagate(a * s + b * s2, m);
        const JonesState rhs = a * propagate(s, m) + b * propagate(s2, m);
        CHECK(state_distance(lhs, rhs) <= 1e-13);

        // Rotation covariance of the azimuth.
        if (std::abs(base.ellipticity_angle) < pi / 4 - 1e-6) {
            const double alpha = gen.uniform(-pi, pi);
            const PolarizationSummary turned = summarize(propagate(s, rotation(alpha)));
            CHECK(angle_gap(turned.azimuth, base.azimuth + alpha) <= 1e-8);
        }
    }
}

TEST_CASE("trajectory") {
    SUBCASE("pure rotation advances the azimuth linearly") {
        const MediumParams p = MediumParams::from_coefficients(1.0, 0.0, 0.0);
        const auto pts = trajectory(p, jones_from_amp_phase(1, 0, 0, 0), 6.0, 61);
        REQUIRE(pts.size() == 61);
        CHECK(pts.front().z == 0.0);
        CHECK(pts.back().z == 6.0);
        for (const auto& pt : pts) {
            CHECK(angle_gap(pt.summary.azimuth, pt.z) <= 1e-12);
            CHECK(pt.summary.intensity_total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("isotropic loss only scales the intensity") {
        const double lambda = 0.3;
        const MediumParams p = MediumParams::from_coefficients(0.0, lambda, lambda);
        const JonesState initial = jones_from_amp_phase(0.6, 0.8, 0.0, 0.5);
        const PolarizationSummary s0 = summarize(initial);
        for (const auto& pt : trajectory(p, initial, 4.0, 9)) {
            CHECK(pt.summary.intensity_total ==
                  doctest::Approx(std::exp(-2 * lambda * pt.z) * s0.intensity_total).epsilon(1e-13));
            CHECK(pt.summary.azimuth == doctest::Approx(s0.azimuth).epsilon(1e-13));
            CHECK(pt.summary.ellipticity_angle == doctest::Approx(s0.ellipticity_angle).epsilon(1e-13));
        }
    }
    SUBCASE("lossless rotation conserves energy") {
        const MediumParams p = MediumParams::from_coefficients(-2.3, 0.0, 0.0);
        const JonesState initial = jones_from_amp_phase(0.3, 1.1, 0.2, -0.9);
        for (const auto& pt : trajectory(p, initial, 10.0, 101)) {
            CHECK(std::abs(pt.summary.intensity_total - initial.intensity()) <= 1e-12);
        }
    }
    SUBCASE("matches propagation through the step product") {
        const MediumParams p = MediumParams::from_coefficients(2.0, 0.1, 0.3);
        const JonesState initial = jones_from_amp_phase(0.6, 0.8, 0.0, 0.5);
        for (const auto& pt : trajectory(p, initial, 2.0, 11)) {
            const Mat2 m = pt.z == 0.0 ? Mat2::identity() : transfer_product(p, pt.z, 100000);
            CHECK(state_distance(pt.state, propagate(initial, m)) <= 1e-4);
        }
    }
    SUBCASE("is deterministic") {
        const MediumParams p = MediumParams::from_coefficients(0.7, 0.05, 0.4);
        const JonesState initial = jones_from_amp_phase(1, 0.5, 0, 1);
        const auto a = trajectory(p, initial, 3.0, 17);
        const auto b = trajectory(p, initial, 3.0, 17);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].state == b[i].state);
        }
    }
    SUBCASE("invalid arguments") {
        const MediumParams p = MediumParams::from_coefficients(1.0, 0.0, 0.0);
        const JonesState s = jones_from_amp_phase(1, 0, 0, 0);
        CHECK_THROWS_AS(trajectory(p, s, 1.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(trajectory(p, s, 0.0, 5), std::invalid_argument);
    }
}

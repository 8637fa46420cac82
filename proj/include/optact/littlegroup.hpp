#pragma once

#include <stdexcept>
#include <string_view>
#include <variant>

#include "optact/mat_core.hpp"

namespace optact {

// Lorentz transformations on (x, y, z, t). Boost parameters follow the
// optics convention: a 2x2 squeeze diag(e^eta, e^-eta) corresponds to a boost
// of rapidity 2 eta, so boost_z(eta) and boost_x(w) carry cosh(2 eta) and
// cosh(2 w). rot_zx takes the full rotation angle.

/// Boost along z; the (z, t) block is [[cosh 2eta, sinh 2eta], [sinh 2eta, cosh 2eta]].
Mat4 boost_z(double eta);

/// Rotation in the z-x plane: x' = cos a x + sin a z, z' = -sin a x + cos a z.
Mat4 rot_zx(double angle);

/// Boost along x; the (x, t) block is [[cosh 2w, sinh 2w], [sinh 2w, cosh 2w]].
Mat4 boost_x(double w);

/// E(2)-like element leaving (0, 0, p, p) fixed:
///   [[1,  0, -2g,      2g     ],
///    [0,  1,  0,       0      ],
///    [2g, 0,  1 - 2g², 2g²    ],
///    [2g, 0, -2g²,     1 + 2g²]]
Mat4 gauge_matrix(double g);

/// Thrown by lift() for input that is not unimodular within kLiftDetTolerance.
class NotUnimodular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kLiftDetTolerance = 1e-9;

/// Coordinate-matrix map used by lift():
///   X = t I + x s1 + y s2 + z s3 = [[t + z, x - i y], [x + i y, t - z]]
/// acted on by X -> M X M^T. det X = t^2 - x^2 - y^2 - z^2 is preserved for
/// det M = 1, and the y component is fixed because M A M^T = det(M) A for
/// the antisymmetric A carrying y.
struct LiftConvention {
    static constexpr std::string_view description =
        "X = t*I + x*sigma1 + y*sigma2 + z*sigma3; X -> M X M^T";
};

/// 4x4 matrix of X -> m X m^T, read off column by column from the basis
/// four-vectors. Throws NotUnimodular when |det m - 1| > kLiftDetTolerance;
/// strip overall scalars such as e^{-lambda z} first.
Mat4 lift(const Mat2& m);

/// Thrown for four-momenta outside the kind's domain (e.g. E >= p for a space-like kind).
class InvalidKinematics : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// eta with tanh(2 eta) = p / sqrt(p^2 + m^2); m > 0, p >= 0.
double rapidity_massive(double momentum, double mass);

/// eta with tanh(2 eta) = e / p; p > 0, 0 <= e < p.
///
/// Evaluated as ln((p + e) / (p - e)) / 4, which stays finite for every
/// e < p. Near the light cone eta grows like ln(2p / (p - e)) / 4 and is
/// about 8.8 at p - e = 1e-15 p.
double rapidity_spacelike(double momentum, double energy);

/// atanh(x) = ln((1 + x) / (1 - x)) / 2 for |x| < 1; throws std::domain_error otherwise.
double atanh_log(double x);

struct Massive {
    double mass;
    double momentum;
};

struct Spacelike {
    double momentum;
    double energy;
};

struct Lightlike {
    double momentum;
};

using LittleGroupKind = std::variant<Massive, Spacelike, Lightlike>;

std::string_view kind_name(const LittleGroupKind& kind) noexcept;

/// Throws InvalidKinematics unless the kind satisfies its invariants.
void validate(const LittleGroupKind& kind);

/// (0,0,p,sqrt(p^2+m^2)), (0,0,p,E) or (0,0,p,p).
FourVector reference_vector(const LittleGroupKind& kind);

/// Element of the little group of the kind's reference four-momentum.
///
/// Massive:   boost_z(eta) rot_zx(param) boost_z(-eta), eta = rapidity_massive
/// Spacelike: boost_z(eta) boost_x(param) boost_z(-eta), eta = rapidity_spacelike
/// Lightlike: gauge_matrix(param)
Mat4 little_group_element(const LittleGroupKind& kind, double param);

/// |apply4(l, v) - v| in the Euclidean norm.
double invariance_residual(const Mat4& l, const FourVector& v) noexcept;

}  // namespace optact

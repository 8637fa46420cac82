#include "optact/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "emit.hpp"
#include "optact/littlegroup.hpp"
#include "optact/medium.hpp"
#include "optact/optics.hpp"

namespace optact::cli {

namespace {

enum class OutputFormat { Json, Csv };

/// Output contained a non-finite value (overflow in cosh/sinh and the like).
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed flags for every subcommand.
struct RunConfig {
    double gamma = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double lambda = 0.0;
    double z = 0.0;
    double z_max = 0.0;
    std::optional<std::int64_t> n_steps;
    std::int64_t samples = 11;
    std::int64_t steps = 0;
    double mu_from = 0.0;
    double mu_to = 0.0;
    std::string format;
    double amp_x = 1.0;
    double amp_y = 0.0;
    double phase_x = 0.0;
    double phase_y = 0.0;
    std::string kind;
    double mass = 0.0;
    double momentum = 0.0;
    double energy = 0.0;
    double theta = 0.0;
    double boost = 0.0;
    double gauge = 0.0;
};

OutputFormat parse_format(const std::string& s) { return s == "csv" ? OutputFormat::Csv : OutputFormat::Json; }

void require_finite(double v, std::string_view flag) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(fmt::format("{} must be a finite number", flag));
    }
}

void require_finite_output(const Mat2& m) {
    if (!m.isfinite()) {
        throw NumericalFailure("transfer matrix overflowed to a non-finite value");
    }
}

void check_medium_flags(const RunConfig& cfg) {
    require_finite(cfg.gamma, "--gamma");
    require_finite(cfg.mu1, "--mu1");
    require_finite(cfg.mu2, "--mu2");
}

void add_regime(JsonObject& obj, const Regime& regime) {
    obj.string("regime", regime_name(regime));
    std::visit(
        [&obj](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Parabolic>) {
                obj.number("k", 0.0).raw("eta", "null");
            } else {
                obj.number("k", r.k).number("eta", r.eta);
            }
        },
        regime);
}

std::string cmd_classify(const RunConfig& cfg) {
    check_medium_flags(cfg);
    const MediumParams p = MediumParams::from_coefficients(cfg.gamma, cfg.mu1, cfg.mu2);
    JsonObject obj;
    obj.number("lambda", p.lambda()).number("mu", p.mu());
    add_regime(obj, classify(p.gamma(), p.mu()));
    return obj.str() + "\n";
}

std::string cmd_transfer(const RunConfig& cfg) {
    check_medium_flags(cfg);
    require_finite(cfg.z, "--z");
    if (cfg.z < 0.0) {
        throw std::invalid_argument("--z must be non-negative");
    }
    if (cfg.n_steps && *cfg.n_steps < 1) {
        throw std::invalid_argument("--n-steps must be at least 1");
    }
    const MediumParams p = MediumParams::from_coefficients(cfg.gamma, cfg.mu1, cfg.mu2);
    const TransferResult closed = transfer_closed(p, cfg.z);
    require_finite_output(closed.matrix);

    JsonObject obj;
    obj.number("gamma", p.gamma())
        .number("mu1", p.mu1())
        .number("mu2", p.mu2())
        .number("lambda", p.lambda())
        .number("mu", p.mu())
        .number("z", cfg.z)
        .string("regime", regime_name(closed.regime))
        .number("lambda_factor", closed.lambda_factor)
        .raw("closed", json_matrix(closed.matrix))
        .number("det", det2(closed.matrix));
    if (cfg.n_steps) {
        const Mat2 product = transfer_product(p, cfg.z, static_cast<std::uint64_t>(*cfg.n_steps));
        require_finite_output(product);
        obj.raw("n_steps", std::to_string(*cfg.n_steps))
            .raw("product", json_matrix(product))
            .number("distance", distance(product, closed.matrix));
    }
    return obj.str() + "\n";
}

constexpr std::string_view kPropagateHeader =
    "z,ex_re,ex_im,ey_re,ey_im,intensity_x,intensity_y,intensity_total,azimuth,ellipticity";

std::string cmd_propagate(const RunConfig& cfg) {
    check_medium_flags(cfg);
    require_finite(cfg.z_max, "--z-max");
    if (!(cfg.z_max > 0.0)) {
        throw std::invalid_argument("--z-max must be positive");
    }
    if (cfg.samples < 2) {
        throw std::invalid_argument("--samples must be at least 2");
    }
    const MediumParams p = MediumParams::from_coefficients(cfg.gamma, cfg.mu1, cfg.mu2);
    const JonesState initial = jones_from_amp_phase(cfg.amp_x, cfg.amp_y, cfg.phase_x, cfg.phase_y);
    const auto points = trajectory(p, initial, cfg.z_max, static_cast<std::size_t>(cfg.samples));

    const auto values = [](const TrajectoryPoint& pt) {
        return std::array<double, 10>{pt.z,
                                      pt.state.ex.real(),
                                      pt.state.ex.imag(),
                                      pt.state.ey.real(),
                                      pt.state.ey.imag(),
                                      pt.summary.intensity_x,
                                      pt.summary.intensity_y,
                                      pt.summary.intensity_total,
                                      pt.summary.azimuth,
                                      pt.summary.ellipticity_angle};
    };
    for (const auto& pt : points) {
        for (double v : values(pt)) {
            if (!std::isfinite(v)) {
                throw NumericalFailure("trajectory overflowed to a non-finite value");
            }
        }
    }

    std::string out;
    if (parse_format(cfg.format) == OutputFormat::Csv) {
        out += kPropagateHeader;
        out += '\n';
        for (const auto& pt : points) {
            const auto v = values(pt);
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                out += csv_number(v[i]);
            }
            out += '\n';
        }
        return out;
    }
    std::vector<std::string> rows;
    rows.reserve(points.size());
    for (const auto& pt : points) {
        const auto v = values(pt);
        JsonObject row;
        row.number("z", v[0])
            .number("ex_re", v[1])
            .number("ex_im", v[2])
            .number("ey_re", v[3])
            .number("ey_im", v[4])
            .number("intensity_x", v[5])
            .number("intensity_y", v[6])
            .number("intensity_total", v[7])
            .number("azimuth", v[8])
            .number("ellipticity", v[9]);
        rows.push_back(row.str());
    }
    return json_array(rows) + "\n";
}

constexpr std::string_view kSweepHeader = "mu,mu1,mu2,regime,m11,m12,m21,m22,det";

std::string cmd_sweep(const RunConfig& cfg) {
    require_finite(cfg.gamma, "--gamma");
    require_finite(cfg.lambda, "--lambda");
    require_finite(cfg.mu_from, "--mu-from");
    require_finite(cfg.mu_to, "--mu-to");
    require_finite(cfg.z, "--z");
    if (cfg.z < 0.0) {
        throw std::invalid_argument("--z must be non-negative");
    }
    if (cfg.steps < 2) {
        throw std::invalid_argument("--steps must be at least 2");
    }
    const auto last = static_cast<std::size_t>(cfg.steps - 1);
    const bool csv = parse_format(cfg.format) == OutputFormat::Csv;
    std::string out;
    std::vector<std::string> rows;
    if (csv) {
        out += kSweepHeader;
        out += '\n';
    }
    for (std::size_t i = 0; i <= last; ++i) {
        const double mu = i == last ? cfg.mu_to
                                    : cfg.mu_from + (cfg.mu_to - cfg.mu_from) * static_cast<double>(i) /
                                                        static_cast<double>(last);
        const MediumParams p = MediumParams::from_lambda_mu(cfg.gamma, cfg.lambda, mu);
        const TransferResult r = transfer_closed(p, cfg.z);
        require_finite_output(r.matrix);
        const Mat2& m = r.matrix;
        if (csv) {
            out += fmt::format("{},{},{},{},{},{},{},{},{}\n", csv_number(mu), csv_number(p.mu1()),
                               csv_number(p.mu2()), regime_name(r.regime), csv_number(m.a11),
                               csv_number(m.a12), csv_number(m.a21), csv_number(m.a22),
                               csv_number(det2(m)));
        } else {
            JsonObject row;
            row.number("mu", mu)
                .number("mu1", p.mu1())
                .number("mu2", p.mu2())
                .string("regime", regime_name(r.regime))
                .number("m11", m.a11)
                .number("m12", m.a12)
                .number("m21", m.a21)
                .number("m22", m.a22)
                .number("det", det2(m));
            rows.push_back(row.str());
        }
    }
    return csv ? out : json_array(rows) + "\n";
}

std::string cmd_littlegroup(const RunConfig& cfg, const CLI::App& sub) {
    for (const auto& [flag, v] : {std::pair{"--mass", cfg.mass}, {"--momentum", cfg.momentum},
                                  {"--energy", cfg.energy}, {"--theta", cfg.theta},
                                  {"--boost", cfg.boost}, {"--gauge", cfg.gauge}}) {
        require_finite(v, flag);
    }
    const auto given = [&sub](const char* flag) { return sub.count(flag) > 0; };
    const auto forbid = [&](std::initializer_list<const char*> flags) {
        for (const char* f : flags) {
            if (given(f)) {
                throw std::invalid_argument(fmt::format("{} does not apply to kind {}", f, cfg.kind));
            }
        }
    };
    const auto need = [&](const char* f) {
        if (!given(f)) {
            throw std::invalid_argument(fmt::format("kind {} requires {}", cfg.kind, f));
        }
    };

    LittleGroupKind kind = Lightlike{0.0};
    double param = 0.0;
    if (cfg.kind == "massive") {
        need("--mass");
        need("--momentum");
        forbid({"--energy", "--boost", "--gauge"});
        kind = Massive{cfg.mass, cfg.momentum};
        param = cfg.theta;
    } else if (cfg.kind == "spacelike") {
        need("--momentum");
        need("--energy");
        forbid({"--mass", "--theta", "--gauge"});
        kind = Spacelike{cfg.momentum, cfg.energy};
        param = cfg.boost;
    } else {
        need("--momentum");
        forbid({"--mass", "--energy", "--theta", "--boost"});
        kind = Lightlike{cfg.momentum};
        param = cfg.gauge;
    }

    const Mat4 l = little_group_element(kind, param);
    if (!l.isfinite()) {
        throw NumericalFailure("little-group element overflowed to a non-finite value");
    }
    const FourVector ref = reference_vector(kind);
    const double residual = invariance_residual(l, ref);
    const double defect = lorentz_defect(l);

    if (parse_format(cfg.format) == OutputFormat::Csv) {
        std::string header = "kind,param,residual,lorentz_defect,ref_x,ref_y,ref_z,ref_t";
        std::string row = fmt::format("{},{},{},{},{},{},{},{}", kind_name(kind), csv_number(param),
                                      csv_number(residual), csv_number(defect), csv_number(ref.x),
                                      csv_number(ref.y), csv_number(ref.z), csv_number(ref.t));
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                header += fmt::format(",l{}{}", r, c);
                row += ',' + csv_number(l(r, c));
            }
        }
        return header + '\n' + row + '\n';
    }
    JsonObject obj;
    obj.string("kind", kind_name(kind))
        .number("param", param)
        .raw("matrix", json_matrix(l))
        .raw("reference", json_vector(ref))
        .number("residual", residual)
        .number("lorentz_defect", defect);
    return obj.str() + "\n";
}

void write_error(std::ostream& err, std::string_view kind, std::string_view message) {
    JsonObject obj;
    obj.string("error", kind).string("message", message);
    err << obj.str() << '\n';
}

void add_medium_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--gamma", cfg.gamma, "rotary power (rad per unit length)")->required();
    sub->add_option("--mu1", cfg.mu1, "attenuation coefficient along x")->required();
    sub->add_option("--mu2", cfg.mu2, "attenuation coefficient along y")->required();
}

void add_format_flag(CLI::App* sub, RunConfig& cfg, std::string_view default_format) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_str(std::string(default_format));
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transfer matrices of optically active media with asymmetric attenuation, "
                 "and their Lorentz-group counterparts"};
    app.name("optact");
    app.require_subcommand(1);

    RunConfig cfg;

    auto* classify_cmd = app.add_subcommand("classify", "regime of the rotation-attenuation generator");
    add_medium_flags(classify_cmd, cfg);

    auto* transfer_cmd = app.add_subcommand("transfer", "closed-form transfer matrix, optionally with the step product");
    add_medium_flags(transfer_cmd, cfg);
    transfer_cmd->add_option("--z", cfg.z, "propagation distance")->required();
    transfer_cmd->add_option("--n-steps", cfg.n_steps, "number of microscopic steps for the product oracle");

    auto* propagate_cmd = app.add_subcommand("propagate", "polarization trajectory along z");
    add_medium_flags(propagate_cmd, cfg);
    propagate_cmd->add_option("--z-max", cfg.z_max, "end of the trajectory")->required();
    propagate_cmd->add_option("--samples", cfg.samples, "number of z samples, endpoints included")
        ->capture_default_str();
    propagate_cmd->add_option("--amp-x", cfg.amp_x, "initial x amplitude")->capture_default_str();
    propagate_cmd->add_option("--amp-y", cfg.amp_y, "initial y amplitude")->capture_default_str();
    propagate_cmd->add_option("--phase-x", cfg.phase_x, "initial x phase (rad)")->capture_default_str();
    propagate_cmd->add_option("--phase-y", cfg.phase_y, "initial y phase (rad)")->capture_default_str();
    add_format_flag(propagate_cmd, cfg, "csv");

    auto* sweep_cmd = app.add_subcommand("sweep", "transfer matrix across a range of squeeze rates mu");
    sweep_cmd->add_option("--gamma", cfg.gamma, "rotary power (rad per unit length)")->required();
    sweep_cmd->add_option("--lambda", cfg.lambda, "isotropic attenuation (mu1 + mu2) / 2")
        ->capture_default_str();
    sweep_cmd->add_option("--mu-from", cfg.mu_from, "first mu")->required();
    sweep_cmd->add_option("--mu-to", cfg.mu_to, "last mu")->required();
    sweep_cmd->add_option("--steps", cfg.steps, "number of mu values, endpoints included")->required();
    sweep_cmd->add_option("--z", cfg.z, "propagation distance")->required();
    add_format_flag(sweep_cmd, cfg, "csv");

    auto* lg_cmd = app.add_subcommand("littlegroup", "little-group element and its invariance residual");
    lg_cmd->add_option("--kind", cfg.kind, "massive, spacelike or lightlike")
        ->required()
        ->check(CLI::IsMember({"massive", "spacelike", "lightlike"}));
    lg_cmd->add_option("--mass", cfg.mass, "rest mass (massive)");
    lg_cmd->add_option("--momentum", cfg.momentum, "momentum along z");
    lg_cmd->add_option("--energy", cfg.energy, "energy (spacelike, below momentum)");
    lg_cmd->add_option("--theta", cfg.theta, "rotation angle (massive)");
    lg_cmd->add_option("--boost", cfg.boost, "transverse boost parameter (spacelike)");
    lg_cmd->add_option("--gauge", cfg.gauge, "gauge parameter (lightlike)");
    add_format_flag(lg_cmd, cfg, "json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        write_error(err, "usage", e.what());
        return kUsageError;
    }

    const auto use_default_format = [&cfg](std::string_view fallback) {
        if (cfg.format.empty()) {
            cfg.format = std::string(fallback);
        }
    };

    try {
        std::string report;
        if (*classify_cmd) {
            report = cmd_classify(cfg);
        } else if (*transfer_cmd) {
            report = cmd_transfer(cfg);
        } else if (*propagate_cmd) {
            use_default_format("csv");
            report = cmd_propagate(cfg);
        } else if (*sweep_cmd) {
            use_default_format("csv");
            report = cmd_sweep(cfg);
        } else {
            use_default_format("json");
            report = cmd_littlegroup(cfg, *lg_cmd);
        }
        out << report;
        out.flush();
        return kOk;
    } catch (const std::invalid_argument& e) {
        write_error(err, "validation", e.what());
        return kUsageError;
    } catch (const std::domain_error& e) {
        write_error(err, "validation", e.what());
        return kUsageError;
    } catch (const std::exception& e) {
        write_error(err, "numerical", e.what());
        return kNumericalFailure;
    }
}

}  // namespace optact::cli

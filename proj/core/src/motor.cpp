#include "metaopt/motor.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace metaopt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSqrt3 = 1.7320508075688772;
} // namespace

MotorParams MotorParams::from_array(std::span<const double> v) {
    if (v.size() != 5) throw std::invalid_argument("MotorParams: need 5 values");
    MotorParams p;
    p.Rs = v[0];
    p.Rr = v[1];
    p.Lll = v[2];
    p.Lm = v[3];
    p.J = v[4];
    return p;
}

void MotorParams::validate() const {
    for (double v : as_array())
        if (!(v > 0.0)) throw std::invalid_argument("MotorParams: parameters must be positive");
    if (!(Ld() > 0.0)) throw std::invalid_argument("MotorParams: Ld must be positive");
}

SearchSpace motor_search_space() {
    SearchSpace s;
    s.dims = 5;
    s.init_lo = {1.0, 1.0, 0.002, 0.05, 0.00005};
    s.init_hi = {20.0, 20.0, 1.0, 5.0, 0.001};
    s.hard_lo = s.init_lo;
    s.boundary = BoundaryPolicy::ClampLowerOnly;
    return s;
}

MotorParams true_motor_params() { return MotorParams{}; }

std::array<double, 3> SupplyWaveform::at(double t) const {
    const double wt = kTwoPi * freq_hz * t;
    return {v_peak * std::cos(wt), v_peak * std::cos(wt - kTwoPi / 3.0),
            v_peak * std::cos(wt + kTwoPi / 3.0)};
}

std::array<double, 2> park_forward(double v1, double v2, double v3) {
    return {(2.0 * v1 - v2 - v3) / 3.0, (v2 - v3) / kSqrt3};
}

std::array<double, 3> park_inverse(double i_sd, double i_sq) {
    return {i_sd, -0.5 * i_sd + 0.5 * kSqrt3 * i_sq, -0.5 * i_sd - 0.5 * kSqrt3 * i_sq};
}

std::array<double, 2> stator_currents(const MotorState& s, const MotorParams& p) {
    const double ld = p.Ld();
    const double x1 = (p.Lrl() + p.Lm) / ld;
    const double beta = p.Lm / ld;
    return {x1 * s.psi_sd - beta * s.psi_rd, x1 * s.psi_sq - beta * s.psi_rq};
}

MotorState flux_derivatives(const MotorState& s, const MotorParams& p, double v_sd, double v_sq) {
    const double ld = p.Ld();
    if (!(ld > 0.0)) throw std::invalid_argument("flux_derivatives: Ld must be positive");
    const double x1 = (p.Lrl() + p.Lm) / ld; // stator current coefficient
    const double x2 = (p.Lsl() + p.Lm) / ld; // rotor current coefficient
    const double beta = p.Lm / ld;

    const double i_sd = x1 * s.psi_sd - beta * s.psi_rd;
    const double i_sq = x1 * s.psi_sq - beta * s.psi_rq;

    MotorState d;
    d.psi_sd = -p.Rs * x1 * s.psi_sd + p.Rs * beta * s.psi_rd + v_sd;
    d.psi_sq = -p.Rs * x1 * s.psi_sq + p.Rs * beta * s.psi_rq + v_sq;
    d.psi_rd = -p.Rr * x2 * s.psi_rd + p.Rr * beta * s.psi_sd - s.omega_r * s.psi_rq;
    d.psi_rq = -p.Rr * x2 * s.psi_rq + p.Rr * beta * s.psi_sq + s.omega_r * s.psi_rd;
    // Electromagnetic torque over the inertia, pole pairs = 1, no load.
    d.omega_r = 1.5 / p.J * (i_sq * s.psi_sd - i_sd * s.psi_sq);
    return d;
}

std::array<double, 5> statespace_derivatives(const std::array<double, 5>& x,
                                             const MotorParams& p, double v_sd, double v_sq) {
    const double Ls = p.Lsl() + p.Lm;
    const double Lr = p.Lrl() + p.Lm;
    const double det = Ls * Lr - p.Lm * p.Lm; // equals Ld
    if (!(det > 0.0))
        throw std::invalid_argument("statespace_derivatives: leakage factor must be positive");

    const double eta = p.Rr / Lr;
    const double sigma_ls = det / Lr; // sigma * Ls
    const double gamma = (p.Rs * Lr * Lr + p.Rr * p.Lm * p.Lm) / (Lr * det);
    const double mu = p.Lm / det;

    const double i_sd = x[0], i_sq = x[1], lam_rd = x[2], lam_rq = x[3], omega = x[4];

    std::array<double, 5> d;
    d[0] = -gamma * i_sd + mu * eta * lam_rd + mu * omega * lam_rq + v_sd / sigma_ls;
    d[1] = -gamma * i_sq - mu * omega * lam_rd + mu * eta * lam_rq + v_sq / sigma_ls;
    d[2] = eta * p.Lm * i_sd - eta * lam_rd - omega * lam_rq;
    d[3] = eta * p.Lm * i_sq + omega * lam_rd - eta * lam_rq;
    // Torque via the rotor-flux form; identical to the flux model's term for
    // pole pairs = 1 because psi_s x i_s = (Lm/Lr) (lambda_r x i_s).
    d[4] = 1.5 / p.J * (p.Lm / Lr) * (lam_rd * i_sq - lam_rq * i_sd);
    return d;
}

std::vector<CurrentSample> simulate_startup(const MotorParams& params,
                                            const SupplyWaveform& supply, double duration,
                                            std::size_t samples, const Rk45Options& options,
                                            MotorModel model) {
    params.validate();
    if (!(duration > 0.0)) throw std::invalid_argument("simulate_startup: duration must be positive");
    if (samples == 0) throw std::invalid_argument("simulate_startup: need at least one sample");

    OdeRhs rhs;
    if (model == MotorModel::FluxLinkage) {
        rhs = [&params, &supply](double t, std::span<const double> y, std::span<double> dy) {
            const auto [v1, v2, v3] = supply.at(t);
            const auto [v_sd, v_sq] = park_forward(v1, v2, v3);
            MotorState s{y[0], y[1], y[2], y[3], y[4]};
            const MotorState d = flux_derivatives(s, params, v_sd, v_sq);
            dy[0] = d.psi_sd;
            dy[1] = d.psi_sq;
            dy[2] = d.psi_rd;
            dy[3] = d.psi_rq;
            dy[4] = d.omega_r;
        };
    } else {
        rhs = [&params, &supply](double t, std::span<const double> y, std::span<double> dy) {
            const auto [v1, v2, v3] = supply.at(t);
            const auto [v_sd, v_sq] = park_forward(v1, v2, v3);
            const std::array<double, 5> x{y[0], y[1], y[2], y[3], y[4]};
            const auto d = statespace_derivatives(x, params, v_sd, v_sq);
            for (std::size_t i = 0; i < 5; ++i) dy[i] = d[i];
        };
    }

    const double y0[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
    const DenseOutput solution = integrate_rk45(rhs, y0, 0.0, duration, options);

    std::vector<CurrentSample> out;
    out.reserve(samples + 1);
    std::vector<double> y(5);
    for (std::size_t k = 0; k <= samples; ++k) {
        const double t = duration * static_cast<double>(k) / static_cast<double>(samples);
        solution.sample(t, y);
        double i_sd, i_sq;
        if (model == MotorModel::FluxLinkage) {
            MotorState s{y[0], y[1], y[2], y[3], y[4]};
            const auto i = stator_currents(s, params);
            i_sd = i[0];
            i_sq = i[1];
        } else {
            i_sd = y[0];
            i_sq = y[1];
        }
        const auto [i1, i2, i3] = park_inverse(i_sd, i_sq);
        out.push_back({t, i1, i2, i3});
    }
    return out;
}

IdentProblem IdentProblem::make(const MotorParams& true_params, const SupplyWaveform& supply,
                                double duration, std::size_t samples) {
    IdentProblem prob;
    prob.supply = supply;
    prob.duration = duration;
    prob.samples = samples;
    prob.reference = simulate_startup(true_params, supply, duration, samples, {1e-7, 1e-9});

    // Penalty baseline: the fitness of a model producing no current at all.
    const double dt = duration / static_cast<double>(samples);
    double zero_fitness = 0.0;
    for (const auto& s : prob.reference)
        zero_fitness += (std::abs(s.i1) + std::abs(s.i2) + std::abs(s.i3)) * dt;
    prob.failure_penalty = 10.0 * zero_fitness;
    return prob;
}

double IdentProblem::fitness(const MotorParams& candidate) const {
    std::vector<CurrentSample> estimated;
    try {
        estimated = simulate_startup(candidate, supply, duration, samples, candidate_options);
    } catch (const IntegrationError&) {
        return failure_penalty;
    }
    const double dt = duration / static_cast<double>(samples);
    double err = 0.0;
    for (std::size_t k = 0; k < reference.size(); ++k)
        err += (std::abs(reference[k].i1 - estimated[k].i1) +
                std::abs(reference[k].i2 - estimated[k].i2) +
                std::abs(reference[k].i3 - estimated[k].i3)) *
               dt;
    return err;
}

ScalarObjective IdentProblem::objective() const {
    return [this](std::span<const double> x) { return fitness(MotorParams::from_array(x)); };
}

void write_current_csv(std::ostream& os, std::span<const CurrentSample> samples) {
    os << "t,i1,i2,i3\n";
    char buf[160];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.t, s.i1, s.i2, s.i3);
        os << buf;
    }
}

std::vector<CurrentSample> read_current_csv(std::istream& is) {
    std::vector<CurrentSample> out;
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,i1,i2,i3", 0) != 0)
        throw std::runtime_error("read_current_csv: missing header row");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        CurrentSample s{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &s.t, &s.i1, &s.i2, &s.i3) != 4)
            throw std::runtime_error("read_current_csv: malformed row: " + line);
        out.push_back(s);
    }
    return out;
}

} // namespace metaopt

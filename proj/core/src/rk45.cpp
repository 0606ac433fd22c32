#include "metaopt/rk45.hpp"

#include <algorithm>
#include <cmath>

namespace metaopt {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// 5th-order minus embedded 4th-order weights (error estimator).
constexpr double e1 = b1 - 5179.0 / 57600;
constexpr double e3 = b3 - 7571.0 / 16695;
constexpr double e4 = b4 - 393.0 / 640;
constexpr double e5 = b5 + 92097.0 / 339200;
constexpr double e6 = b6 - 187.0 / 2100;
constexpr double e7 = -1.0 / 40;
// Dense-output weights of the 4th-order interpolant.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

} // namespace

std::vector<double> DenseOutput::at(double t) const {
    std::vector<double> y(dims_);
    sample(t, y);
    return y;
}

void DenseOutput::sample(double t, std::span<double> y) const {
    if (segments_.empty()) throw IntegrationError("DenseOutput: empty solution");
    const double lo = std::min(t0_, t1_), hi = std::max(t0_, t1_);
    if (t < lo - 1e-12 * (hi - lo + 1.0) || t > hi + 1e-12 * (hi - lo + 1.0))
        throw IntegrationError("DenseOutput: sample time outside the integration span");
    t = std::clamp(t, lo, hi);

    // Binary search for the step containing t.
    std::size_t first = 0, count = segments_.size();
    while (count > 1) {
        const std::size_t half = count / 2;
        const std::size_t mid = first + half;
        if (segments_[mid].t <= t) {
            first = mid;
            count -= half;
        } else {
            count = half;
        }
    }
    const Segment& s = segments_[first];
    const double theta = std::clamp((t - s.t) / s.h, 0.0, 1.0);
    const double omt = 1.0 - theta;
    for (std::size_t i = 0; i < dims_; ++i)
        y[i] = s.c0[i] +
               theta * (s.c1[i] + omt * (s.c2[i] + theta * (s.c3[i] + omt * s.c4[i])));
}

DenseOutput integrate_rk45(const OdeRhs& rhs, std::span<const double> y0, double t0, double t1,
                           const Rk45Options& options) {
    if (!(options.rel_tol > 0.0) || !(options.abs_tol > 0.0))
        throw std::invalid_argument("integrate_rk45: tolerances must be positive");
    if (t1 < t0) throw std::invalid_argument("integrate_rk45: backward spans not supported");

    const std::size_t n = y0.size();
    DenseOutput out;
    out.dims_ = n;
    out.t0_ = t0;
    out.t1_ = t1;
    if (t1 == t0) {
        DenseOutput::Segment s;
        s.t = t0;
        s.h = 1.0;
        s.c0.assign(y0.begin(), y0.end());
        s.c1.assign(n, 0.0);
        s.c2.assign(n, 0.0);
        s.c3.assign(n, 0.0);
        s.c4.assign(n, 0.0);
        out.segments_.push_back(std::move(s));
        return out;
    }

    std::vector<double> y(y0.begin(), y0.end());
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    std::vector<double> ytmp(n), ynew(n);

    double t = t0;
    rhs(t, y, k1);

    // Conservative first step; the controller expands it quickly.
    double h = (t1 - t0) * 1e-4;
    const double h_min = (t1 - t0) * 1e-14;
    const double safety = 0.9, shrink_limit = 0.2;
    double grow_limit = 10.0;

    std::size_t steps = 0;
    while (t < t1) {
        if (++steps > options.max_steps)
            throw IntegrationError("integrate_rk45: step limit exceeded");
        if (h < h_min) throw IntegrationError("integrate_rk45: step size underflow");
        if (t + h > t1) h = t1 - t;

        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a21 * k1[i]);
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] =
                y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ei =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale =
                options.abs_tol + options.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / scale) * (ei / scale);
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (!(err <= 1.0) || !std::isfinite(err)) {
            // Rejected: shrink and retry (NaN counts as a hard rejection).
            const double factor = std::isfinite(err)
                                      ? std::max(shrink_limit, safety * std::pow(err, -0.2))
                                      : shrink_limit;
            h *= factor;
            grow_limit = 1.0;
            continue;
        }

        DenseOutput::Segment seg;
        seg.t = t;
        seg.h = h;
        seg.c0 = y;
        seg.c1.resize(n);
        seg.c2.resize(n);
        seg.c3.resize(n);
        seg.c4.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double dy = ynew[i] - y[i];
            const double bspl = h * k1[i] - dy;
            seg.c1[i] = dy;
            seg.c2[i] = bspl;
            seg.c3[i] = dy - h * k7[i] - bspl;
            seg.c4[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                             d7 * k7[i]);
        }
        out.segments_.push_back(std::move(seg));

        t += h;
        y.swap(ynew);
        k1.swap(k7); // first-same-as-last

        const double factor = err == 0.0 ? grow_limit
                                         : std::min(grow_limit, std::max(shrink_limit,
                                                                         safety * std::pow(err, -0.2)));
        h *= factor;
        grow_limit = 10.0;
    }
    return out;
}

} // namespace metaopt

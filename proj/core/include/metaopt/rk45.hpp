#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace metaopt {

// dy/dt = f(t, y, dy) writing the derivative into dy.
using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dy)>;

class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Rk45Options {
    double rel_tol = 1e-6;
    double abs_tol = 1e-8;
    std::size_t max_steps = 2'000'000;
};

// Dense solution of one integration: each accepted step carries the quartic
// interpolation polynomial of the Dormand-Prince pair, so states at
// arbitrary times inside the span can be sampled after the fact.
class DenseOutput {
public:
    std::vector<double> at(double t) const;
    void sample(double t, std::span<double> y) const;

    double t_begin() const { return t0_; }
    double t_end() const { return t1_; }
    std::size_t dimension() const { return dims_; }
    std::size_t steps() const { return segments_.size(); }

private:
    friend DenseOutput integrate_rk45(const OdeRhs&, std::span<const double>, double, double,
                                      const Rk45Options&);
    struct Segment {
        double t;
        double h;
        // Interpolant coefficients: y(t + theta h) =
        //   c0 + theta (c1 + (1-theta)(c2 + theta (c3 + (1-theta) c4)))
        std::vector<double> c0, c1, c2, c3, c4;
    };
    std::vector<Segment> segments_;
    double t0_ = 0.0, t1_ = 0.0;
    std::size_t dims_ = 0;
};

// Adaptive Dormand-Prince 4(5) integration with the standard mixed-tolerance
// error norm.  Throws IntegrationError on step-size underflow or when
// max_steps is exceeded (stiff blow-up is reported, never clamped).
DenseOutput integrate_rk45(const OdeRhs& rhs, std::span<const double> y0, double t0, double t1,
                           const Rk45Options& options = {});

} // namespace metaopt

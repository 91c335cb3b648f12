#include "jackweight/integrator.hpp"

#include <cmath>
#include <vector>

#include <boost/numeric/odeint.hpp>

namespace jw {

namespace {

using State = std::vector<double>;

Eigen::Map<const CMat> view(const State& s, int n) {
    return Eigen::Map<const CMat>(reinterpret_cast<const cplx*>(s.data()), n, n);
}

Eigen::Map<CMat> view(State& s, int n) {
    return Eigen::Map<CMat>(reinterpret_cast<cplx*>(s.data()), n, n);
}

}  // namespace

FlowResult integrate_matrix_ode(const Generator& G, const CMat& init, Side side, const FlowOptions& opts) {
    namespace odeint = boost::numeric::odeint;
    const int n = static_cast<int>(init.rows());
    State y(2 * static_cast<size_t>(n) * n);
    view(y, n) = init;

    CMat g(n, n);
    auto system = [&](const State& s, State& ds, double t) {
        G(t, g);
        if (side == Side::Right)
            view(ds, n).noalias() = view(s, n) * g;
        else
            view(ds, n).noalias() = g * view(s, n);
    };

    auto stepper = odeint::make_controlled(opts.tol, opts.tol, odeint::runge_kutta_fehlberg78<State>());
    double t = 0.0;
    double dt = opts.initialStep;
    long steps = 0;
    long attempts = 0;
    while (t < 1.0 - 1e-15) {
        if (t + dt > 1.0) dt = 1.0 - t;
        odeint::controlled_step_result r = stepper.try_step(system, y, t, dt);
        if (r == odeint::success) {
            ++steps;
        } else if (dt < opts.minStep) {
            throw StepUnderflow("matrix flow: step size fell below floor at t=" + std::to_string(t));
        }
        if (++attempts > opts.maxSteps) throw StepUnderflow("matrix flow: step budget exhausted");
    }

    FlowResult res;
    res.value = view(y, n);
    if (!res.value.allFinite()) throw NonFinite("matrix flow produced non-finite values");
    res.stepCount = steps;
    res.errorEstimate = opts.tol * static_cast<double>(steps) * std::max(1.0, res.value.norm());
    return res;
}

}  // namespace jw

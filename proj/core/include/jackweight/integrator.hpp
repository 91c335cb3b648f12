#pragma once

#include <functional>

#include "jackweight/common.hpp"

namespace jw {

struct FlowOptions {
    double tol = 1e-11;            // absolute and relative local error per step
    double minStep = 1e-13;        // step floor on t in [0,1]
    double initialStep = 1e-2;
    double singularFloor = 1e-12;  // minimum pairwise distance allowed in generators
    long maxSteps = 2000000;
};

struct FlowResult {
    CMat value;
    double errorEstimate = 0.0;
    long stepCount = 0;
};

// Generator G(t) of dY/dt = Y G(t) (right) or dY/dt = G(t) Y (left), t in [0,1].
using Generator = std::function<void(double t, CMat& G)>;

enum class Side { Right, Left };

FlowResult integrate_matrix_ode(const Generator& G, const CMat& init, Side side, const FlowOptions& opts);

}  // namespace jw

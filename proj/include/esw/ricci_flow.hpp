#pragma once

#include "esw/lichnerowicz.hpp"

namespace esw {

enum class FlowTerminal { ConvergedToEinstein, MaxTimeReached, Diverged };
const char* to_string(FlowTerminal t);

/// Stored samples of one normalized-Ricci-flow trajectory on the space of
/// diagonal metrics: an ascent flow of scalar curvature on the fixed-volume
/// slice. States are renormalized each step so sum_k d_k ln x_k stays at its
/// initial value.
struct FlowTrajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<double> scalars;
    FlowTerminal terminal = FlowTerminal::MaxTimeReached;
    double terminal_residual = 0;  // Einstein residual at the final state
};

struct FlowOptions {
    double t_max = 100.0;
    double dt = 1e-3;
    double converge_residual = 1e-10;
    double box_min = 1e-6;
    double box_max = 1e6;
};

/// Classical RK4 on dx_k/dt = -2 x_k rho_k + (2 Sc / n) x_k with per-step
/// volume renormalization. Terminates early on convergence (residual below
/// converge_residual) or when any coefficient leaves [box_min, box_max].
/// States are stored every ceil(1/(100 dt)) steps.
FlowTrajectory flow(const SpaceDescriptor& space, const DiagonalMetric& x0, double t_max, double dt);
FlowTrajectory flow(const SpaceDescriptor& space, const DiagonalMetric& x0, const FlowOptions& opts);

/// Counts the TT eigendirections of the Lichnerowicz matrix along which the
/// flow escapes from an Einstein metric (scalar curvature rises past the
/// critical value); equals the coindex of the classification verdict.
int unstable_dimension_probe(const SpaceDescriptor& space, const DiagonalMetric& g_einstein,
                             int n_probes);

/// CSV export: header "t,x1,...,xr,scalar", one row per stored step.
void write_trajectory_csv(const FlowTrajectory& traj, const std::string& path);
std::string trajectory_csv(const FlowTrajectory& traj);

}  // namespace esw

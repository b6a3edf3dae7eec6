#include "esw/ricci_flow.hpp"

#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>

namespace esw {

const char* to_string(FlowTerminal t) {
    switch (t) {
        case FlowTerminal::ConvergedToEinstein: return "converged-to-einstein";
        case FlowTerminal::MaxTimeReached: return "max-time-reached";
        case FlowTerminal::Diverged: return "diverged";
    }
    return "?";
}

namespace {

void rhs(const CompiledSpace& cs, const std::vector<double>& x, std::vector<double>& out,
         std::vector<double>& rho) {
    ricci_eigenvalues_d(cs, x.data(), rho.data());
    double sc = 0;
    for (int k = 0; k < cs.r; ++k) sc += cs.dims[k] * rho[k];
    for (int k = 0; k < cs.r; ++k) out[k] = -2.0 * x[k] * rho[k] + (2.0 * sc / cs.n) * x[k];
}

}  // namespace

FlowTrajectory flow(const SpaceDescriptor& space, const DiagonalMetric& x0, double t_max, double dt) {
    FlowOptions opts;
    opts.t_max = t_max;
    opts.dt = dt;
    return flow(space, x0, opts);
}

FlowTrajectory flow(const SpaceDescriptor& space, const DiagonalMetric& x0, const FlowOptions& opts) {
    if (!(opts.dt > 0) || !(opts.t_max > 0))
        throw std::invalid_argument("flow: requires dt > 0 and t_max > 0");
    if (x0.r() != space.r) throw ValidationError("flow: metric/descriptor rank mismatch");

    CompiledSpace cs = compile_space(space);
    const int r = cs.r;
    std::vector<double> x = x0.to_doubles();

    double log_volume = 0;
    for (int k = 0; k < r; ++k) log_volume += cs.dims[k] * std::log(x[k]);

    const long store_every = std::max(1L, static_cast<long>(std::ceil(1.0 / (100.0 * opts.dt))));
    const long steps = static_cast<long>(std::ceil(opts.t_max / opts.dt));

    FlowTrajectory traj;
    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.states.push_back(x);
        traj.scalars.push_back(scalar_curvature_d(cs, x.data()));
    };

    std::vector<double> k1(r), k2(r), k3(r), k4(r), tmp(r), rho(r), xn(r);
    double t = 0;
    record(t);
    traj.terminal_residual = einstein_residual_d(cs, x.data());
    if (traj.terminal_residual < opts.converge_residual) {
        traj.terminal = FlowTerminal::ConvergedToEinstein;
        return traj;
    }

    double sc_cur = scalar_curvature_d(cs, x.data());
    bool recorded_last = true;
    for (long step = 1; step <= steps; ++step) {
        const double h = opts.dt;
        rhs(cs, x, k1, rho);
        for (int k = 0; k < r; ++k) tmp[k] = x[k] + 0.5 * h * k1[k];
        rhs(cs, tmp, k2, rho);
        for (int k = 0; k < r; ++k) tmp[k] = x[k] + 0.5 * h * k2[k];
        rhs(cs, tmp, k3, rho);
        for (int k = 0; k < r; ++k) tmp[k] = x[k] + h * k3[k];
        rhs(cs, tmp, k4, rho);
        for (int k = 0; k < r; ++k)
            xn[k] = x[k] + h / 6.0 * (k1[k] + 2 * k2[k] + 2 * k3[k] + k4[k]);

        bool bad = false;
        for (int k = 0; k < r; ++k)
            if (!std::isfinite(xn[k]) || xn[k] <= opts.box_min || xn[k] >= opts.box_max) bad = true;
        double sc_new = sc_cur;
        if (!bad) {
            // restore the volume slice exactly
            double lv = 0;
            for (int k = 0; k < r; ++k) lv += cs.dims[k] * std::log(xn[k]);
            double fix = std::exp((log_volume - lv) / cs.n);
            for (int k = 0; k < r; ++k) xn[k] *= fix;
            sc_new = scalar_curvature_d(cs, xn.data());
            // the exact flow ascends Sc; a drop means the fixed step left its
            // stability region, which only happens on the way to collapse
            if (!std::isfinite(sc_new) || sc_new < sc_cur - std::max(1e-9, 1e-9 * std::fabs(sc_cur)))
                bad = true;
        }
        if (bad) {
            // keep the last good state, never the runaway candidate
            if (!recorded_last) record(t);
            traj.terminal = FlowTerminal::Diverged;
            traj.terminal_residual = einstein_residual_d(cs, x.data());
            return traj;
        }

        x = xn;
        sc_cur = sc_new;
        t = static_cast<double>(step) * opts.dt;
        double res = einstein_residual_d(cs, x.data());
        recorded_last = (step % store_every == 0 || step == steps || res < opts.converge_residual);
        if (recorded_last) record(t);
        if (res < opts.converge_residual) {
            traj.terminal = FlowTerminal::ConvergedToEinstein;
            traj.terminal_residual = res;
            return traj;
        }
    }
    if (!recorded_last) record(t);
    traj.terminal = FlowTerminal::MaxTimeReached;
    traj.terminal_residual = einstein_residual_d(cs, x.data());
    return traj;
}

int unstable_dimension_probe(const SpaceDescriptor& space, const DiagonalMetric& g_einstein,
                             int n_probes) {
    StabilityVerdict verdict = classify(space, g_einstein);  // throws if not Einstein
    TTEigenDirections eig = tt_eigen_directions(space, g_einstein);

    CompiledSpace cs = compile_space(space);
    std::vector<double> xe = g_einstein.to_doubles();
    double sc_star = scalar_curvature_d(cs, xe.data());

    const double eps = 1e-2;
    int escapes = 0;
    int probes = std::min<int>(n_probes, static_cast<int>(eig.values.size()));
    for (int c = 0; c < probes; ++c) {
        double gap = verdict.two_rho - eig.values[c];
        std::vector<double> start(xe);
        for (int k = 0; k < space.r; ++k) start[k] *= std::exp(eps * eig.directions[c][k]);
        FlowOptions opts;
        opts.t_max = 10.0;
        opts.dt = 1e-3;
        FlowTrajectory traj = flow(space, DiagonalMetric::from_doubles(start), opts);
        double peak = -std::numeric_limits<double>::infinity();
        for (double scv : traj.scalars) peak = std::max(peak, scv);
        // A direction with positive second variation starts (and stays, the
        // flow being a Sc ascent) above the critical value.
        if (peak > sc_star + 0.25 * eps * eps * std::fabs(gap)) ++escapes;
    }
    return escapes;
}

std::string trajectory_csv(const FlowTrajectory& traj) {
    std::string out = "t";
    size_t r = traj.states.empty() ? 0 : traj.states.front().size();
    for (size_t k = 1; k <= r; ++k) out += ",x" + std::to_string(k);
    out += ",scalar\n";
    char buf[64];
    for (size_t i = 0; i < traj.times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", traj.times[i]);
        out += buf;
        for (double v : traj.states[i]) {
            std::snprintf(buf, sizeof buf, ",%.12g", v);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, ",%.12g\n", traj.scalars[i]);
        out += buf;
    }
    return out;
}

void write_trajectory_csv(const FlowTrajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trajectory file: " + path);
    out << trajectory_csv(traj);
}

}  // namespace esw

#include "hopwheel/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "hopwheel/dynamics.hpp"

namespace hopwheel {

namespace {

constexpr double kRatioSentinel = 1e300;  // |lambda1|/lambda2 where lambda2 <= 0

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

// Max residual of a least-squares quadratic fit to y_com(t) over one segment.
double parabola_residual(const std::vector<TrajectorySample>& samples,
                         std::size_t first, std::size_t last) {
    const std::size_t n = last - first + 1;
    if (n < 3) return 0.0;
    const double t0 = samples[first].t;
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = samples[first + i].t - t0;
        A(i, 0) = 1.0;
        A(i, 1) = dt;
        A(i, 2) = dt * dt;
        b(i) = samples[first + i].y_com;
    }
    const Eigen::Vector3d coef = A.colPivHouseholderQr().solve(b);
    return (A * coef - b).cwiseAbs().maxCoeff();
}

}  // namespace

double angular_momentum_about_com(const RobotParams& params, const SimState& s) {
    const ComKinematics com = com_kinematics(params, s);
    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);

    const double px = s.x - params.l_p * sn;
    const double py = s.y - params.l_p * c;
    const double pvx = s.dx - params.l_p * s.dtheta * c;
    const double pvy = s.dy + params.l_p * s.dtheta * sn;

    return params.I_o * s.dphi +
           params.m_o * cross2(s.x - com.x, s.y - com.y, s.dx - com.dx, s.dy - com.dy) +
           params.m_p * cross2(px - com.x, py - com.y, pvx - com.dx, pvy - com.dy);
}

DiagnosticsReport diagnostics(const TrajectoryRecord& record,
                              const RobotParams& params, double mu) {
    DiagnosticsReport report;
    const auto& samples = record.samples;
    if (samples.empty()) return report;

    const double e0 = samples.front().e_kin + samples.front().e_pot;
    const double w0 = samples.front().work;
    for (const TrajectorySample& row : samples) {
        const double resid = std::abs(row.e_kin + row.e_pot - e0 - (row.work - w0));
        report.max_energy_residual = std::max(report.max_energy_residual, resid);
        if (row.phase == Phase::Rolling) {
            const double cr = std::max(std::abs(row.x - params.R * row.phi), std::abs(row.y));
            report.max_rolling_constraint_residual =
                std::max(report.max_rolling_constraint_residual, cr);
        }
    }

    // Slip feasibility: the dynamics enforce pure rolling regardless; these
    // intervals show where that would demand more friction than mu allows.
    bool open = false;
    SlipInterval current;
    auto close = [&] {
        if (open) report.slip_intervals.push_back(current);
        open = false;
    };
    for (const TrajectorySample& row : samples) {
        const bool slipping =
            row.phase == Phase::Rolling && std::abs(row.lambda1) > mu * row.lambda2;
        if (slipping) {
            const double ratio =
                row.lambda2 > 0.0 ? std::abs(row.lambda1) / row.lambda2 : kRatioSentinel;
            if (!open) {
                open = true;
                current = {row.t, row.t, ratio};
            } else {
                current.t_end = row.t;
                current.max_ratio = std::max(current.max_ratio, ratio);
            }
        } else {
            close();
        }
    }
    close();

    for (const FlightSegment& seg : flight_segments(record)) {
        if (seg.last <= seg.first) continue;
        report.flight_parabola_residual =
            std::max(report.flight_parabola_residual,
                     parabola_residual(samples, seg.first, seg.last));

        const double duration = samples[seg.last].t - samples[seg.first].t;
        if (duration <= 0.0) continue;
        const double l0 = angular_momentum_about_com(params, samples[seg.first].state());
        double max_drift = 0.0;
        for (std::size_t i = seg.first; i <= seg.last; ++i) {
            const double l = angular_momentum_about_com(params, samples[i].state());
            max_drift = std::max(max_drift, std::abs(l - l0));
        }
        const double scale = std::max(std::abs(l0), 1e-12);
        report.flight_ang_momentum_drift =
            std::max(report.flight_ang_momentum_drift, max_drift / scale / duration);
    }
    return report;
}

}  // namespace hopwheel

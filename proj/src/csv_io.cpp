#include "hopwheel/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace hopwheel {

std::string trajectory_csv_header() {
    return "t,phase,phi,theta,x,y,dphi,dtheta,dx,dy,tau,lambda1,lambda2,"
           "x_com,y_com,e_kin,e_pot,slip_flag";
}

void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& record) {
    os << trajectory_csv_header() << '\n';
    char buf[64];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        os << buf << sep;
    };
    for (const TrajectorySample& r : record.samples) {
        put(r.t, ',');
        os << static_cast<int>(r.phase) << ',';
        put(r.phi, ',');
        put(r.theta, ',');
        put(r.x, ',');
        put(r.y, ',');
        put(r.dphi, ',');
        put(r.dtheta, ',');
        put(r.dx, ',');
        put(r.dy, ',');
        put(r.tau, ',');
        put(r.lambda1, ',');
        put(r.lambda2, ',');
        put(r.x_com, ',');
        put(r.y_com, ',');
        put(r.e_kin, ',');
        put(r.e_pot, ',');
        os << (r.slip_flag ? 1 : 0) << '\n';
    }
}

void write_trajectory_csv_file(const std::string& path, const TrajectoryRecord& record) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_trajectory_csv(os, record);
}

}  // namespace hopwheel

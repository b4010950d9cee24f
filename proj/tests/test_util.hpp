#pragma once

#include <random>

#include "hopwheel/robot_params.hpp"
#include "hopwheel/state.hpp"

namespace test_util {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234u);
    return gen;
}

inline double uniform(std::mt19937& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline hopwheel::RobotParams random_params(std::mt19937& gen) {
    hopwheel::RobotParams p;
    p.m_o = uniform(gen, 0.05, 5.0);
    p.m_p = uniform(gen, 0.02, 3.0);
    p.R = uniform(gen, 0.03, 0.6);
    p.l_p = p.R * uniform(gen, 0.2, 0.95);
    p.I_o = p.m_o * p.R * p.R * uniform(gen, 0.3, 3.0);
    p.g = uniform(gen, 1.0, 25.0);
    return p;
}

inline hopwheel::SimState random_rolling_state(std::mt19937& gen,
                                               const hopwheel::RobotParams& p) {
    hopwheel::SimState s;
    s.phase = hopwheel::Phase::Rolling;
    s.phi = uniform(gen, -10.0, 10.0);
    s.theta = uniform(gen, -7.0, 7.0);
    s.x = p.R * s.phi;
    s.y = 0.0;
    s.dphi = uniform(gen, -30.0, 30.0);
    s.dtheta = uniform(gen, -60.0, 60.0);
    s.dx = p.R * s.dphi;
    s.dy = 0.0;
    return s;
}

inline hopwheel::SimState random_flight_state(std::mt19937& gen) {
    hopwheel::SimState s;
    s.phase = hopwheel::Phase::Flight;
    s.phi = uniform(gen, -10.0, 10.0);
    s.theta = uniform(gen, -7.0, 7.0);
    s.x = uniform(gen, -2.0, 2.0);
    s.y = uniform(gen, 0.01, 2.0);
    s.dphi = uniform(gen, -30.0, 30.0);
    s.dtheta = uniform(gen, -60.0, 60.0);
    s.dx = uniform(gen, -3.0, 3.0);
    s.dy = uniform(gen, -3.0, 3.0);
    return s;
}

}  // namespace test_util

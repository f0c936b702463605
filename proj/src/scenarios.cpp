#include "chemofront/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace chemofront {

std::vector<std::array<double, 2>> colony_centers(ScenarioKind s) {
    switch (s) {
        case ScenarioKind::T1:
        case ScenarioKind::T2:
        case ScenarioKind::Custom:
            return {{0.5, 0.5}};
        case ScenarioKind::T3:
            return {{0.2, 0.5}, {0.8, 0.5}};
    }
    return {{0.5, 0.5}};
}

namespace {

void require_grid(int grid_n) {
    if (grid_n < 16) throw std::invalid_argument("initial condition: grid_n must be >= 16");
}

}  // namespace

StateSnapshot initial_condition_T1(int grid_n) {
    require_grid(grid_n);
    StateSnapshot s(grid_n);
    const double dx = s.u.dx();
    for (int j = 0; j < grid_n; ++j) {
        const double y = j * dx;
        for (int i = 0; i < grid_n; ++i) {
            const double x = i * dx;
            const double rc = (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5);
            s.v(i, j) = 3.0 * std::exp(-1000.0 * rc);
            const double q = (x - 0.2) * (x - 0.2) + (y - 0.2) * (y - 0.2);
            s.u(i, j) = 10.0 / (std::exp(1000.0 * q) + std::exp(-1000.0 * q));
        }
    }
    return s;
}

StateSnapshot initial_condition_T2(int grid_n) { return initial_condition_T1(grid_n); }

StateSnapshot initial_condition_T3(int grid_n) {
    require_grid(grid_n);
    StateSnapshot s(grid_n);
    const double dx = s.u.dx();
    for (int j = 0; j < grid_n; ++j) {
        const double y = j * dx;
        for (int i = 0; i < grid_n; ++i) {
            const double x = i * dx;
            const double left = (x - 0.2) * (x - 0.2) + (y - 0.5) * (y - 0.5);
            const double right = (x - 0.8) * (x - 0.8) + (y - 0.5) * (y - 0.5);
            s.v(i, j) = 3.0 * (std::exp(-1000.0 * left) + std::exp(-1000.0 * right));
            s.u(i, j) = 0.21;
        }
    }
    return s;
}

StateSnapshot build_initial_condition(ScenarioKind s, int grid_n) {
    switch (s) {
        case ScenarioKind::T1: return initial_condition_T1(grid_n);
        case ScenarioKind::T2: return initial_condition_T2(grid_n);
        case ScenarioKind::T3: return initial_condition_T3(grid_n);
        case ScenarioKind::Custom:
            throw std::invalid_argument("custom scenario has no built-in initial condition");
    }
    throw std::invalid_argument("unknown scenario");
}

}  // namespace chemofront

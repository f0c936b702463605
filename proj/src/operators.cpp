#include "chemofront/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "chemofront/exec.hpp"

namespace chemofront {

void laplacian_neumann_into(const Field& f, Field& out) {
    const int n = f.n();
    if (out.n() != n) throw std::invalid_argument("laplacian_neumann: shape mismatch");
    exec::parallel_rows(n, [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            for (int i = 0; i < n; ++i) {
                out(i, j) = stencil::lap5(f, i, j);
            }
        }
    });
}

Field laplacian_neumann(const Field& f) {
    Field out(f.n());
    laplacian_neumann_into(f, out);
    return out;
}

void chemotactic_divergence_into(const Field& u, const Field& c, double chi0, Field& out) {
    const int n = u.n();
    if (c.n() != n || out.n() != n) {
        throw std::invalid_argument("chemotactic_divergence: shape mismatch");
    }
    exec::parallel_rows(n, [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            for (int i = 0; i < n; ++i) {
                out(i, j) = stencil::chem_div(u, c, chi0, i, j);
            }
        }
    });
}

Field chemotactic_divergence(const Field& u, const Field& c, double chi0) {
    Field out(u.n());
    chemotactic_divergence_into(u, c, chi0, out);
    return out;
}

std::vector<ProfilePoint> cross_section(const Field& f, Axis axis, double offset) {
    if (offset < 0.0 || offset > 1.0) {
        throw std::domain_error("cross_section: offset outside [0,1]");
    }
    const int n = f.n();
    const int line = static_cast<int>(std::lround(offset * (n - 1)));
    std::vector<ProfilePoint> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double coord = f.x(k);
        const double value = axis == Axis::X ? f(k, line) : f(line, k);
        out.push_back({coord, value});
    }
    return out;
}

}  // namespace chemofront

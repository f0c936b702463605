#pragma once

#include <vector>

#include "chemofront/field.hpp"
#include "chemofront/params.hpp"

namespace chemofront {

namespace stencil {

/// 5-point Laplacian at one node with mirror ghosts (ghost = first interior
/// value), which zeroes the normal derivative at the wall to second order.
inline double lap5(const Field& f, int i, int j) {
    const int n = f.n();
    const double w = f(i > 0 ? i - 1 : 1, j);
    const double e = f(i < n - 1 ? i + 1 : n - 2, j);
    const double s = f(i, j > 0 ? j - 1 : 1);
    const double nb = f(i, j < n - 1 ? j + 1 : n - 2);
    return (w + e + s + nb - 4.0 * f(i, j)) * f.inv_dx2();
}

/// Flux-form chemotaxis divergence at one node: face fluxes
/// F = chi0 * mean(u) * dc/dn on interior faces, zero on boundary faces,
/// divergence = face difference / dx. The telescoping face sum makes the
/// node-sum of the output vanish to rounding.
inline double chem_div(const Field& u, const Field& c, double chi0, int i, int j) {
    const int n = u.n();
    const double inv_dx = u.inv_dx();
    const double fe = i < n - 1
        ? chi0 * (0.5 * (u(i, j) + u(i + 1, j))) * ((c(i + 1, j) - c(i, j)) * inv_dx) : 0.0;
    const double fw = i > 0
        ? chi0 * (0.5 * (u(i - 1, j) + u(i, j))) * ((c(i, j) - c(i - 1, j)) * inv_dx) : 0.0;
    const double fn = j < n - 1
        ? chi0 * (0.5 * (u(i, j) + u(i, j + 1))) * ((c(i, j + 1) - c(i, j)) * inv_dx) : 0.0;
    const double fs = j > 0
        ? chi0 * (0.5 * (u(i, j - 1) + u(i, j))) * ((c(i, j) - c(i, j - 1)) * inv_dx) : 0.0;
    return ((fe - fw) + (fn - fs)) * inv_dx;
}

}  // namespace stencil

void laplacian_neumann_into(const Field& f, Field& out);
Field laplacian_neumann(const Field& f);

void chemotactic_divergence_into(const Field& u, const Field& c, double chi0, Field& out);
Field chemotactic_divergence(const Field& u, const Field& c, double chi0);

struct ProfilePoint {
    double coord;
    double value;
};

/// Values along the grid line nearest to `offset`, running along `axis`.
/// Coordinates are the physical positions along the line.
std::vector<ProfilePoint> cross_section(const Field& f, Axis axis, double offset);

}  // namespace chemofront

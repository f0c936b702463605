#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "chemofront/analytic.hpp"
#include "chemofront/field.hpp"
#include "chemofront/solver.hpp"

namespace chemofront {

/// Closed level-set polyline extracted from a field. Points are ordered along
/// the curve and the first point is repeated at the end.
struct FrontContour {
    std::vector<std::array<double, 2>> points;
    double level = 0.0;
    std::array<double, 2> center{0.5, 0.5};

    /// Shoelace area (absolute).
    double area() const;
    bool contains(const std::array<double, 2>& p) const;
};

/// Marching squares with linear edge interpolation; saddle cells are resolved
/// by the cell-average value. Returns the closed contours ordered by
/// descending enclosed area (open boundary-clipped chains are discarded).
/// Throws no_contour when the level misses the field range entirely.
std::vector<FrontContour> extract_contours(const Field& f, double level,
                                           std::array<double, 2> center);

struct RadiusEstimate {
    double mean_radius = 0.0;
    double std_radius = 0.0;
    int n_points = 0;
};

/// Arc-length weighted mean and standard deviation of vertex distances to the
/// contour's center.
RadiusEstimate front_radius(const FrontContour& c);

/// Radius statistics of the v = 0.5 contour enclosing `center`. Requires a
/// near-binary field; throws no_contour when max - min < 0.5 (no plateau) or
/// when no contour encloses the center.
RadiusEstimate plateau_radius_numeric(const Field& v, std::array<double, 2> center);

struct ComparisonMetric {
    std::string metric;
    double numeric;
    double analytic;
    double rel_error;
};

struct ComparisonReport {
    std::vector<ComparisonMetric> rows;
    double threshold_u2 = 0.0;       ///< extraction level after the fixed-point pass
    std::vector<FrontContour> front_contours;
    std::vector<FrontContour> plateau_contours;
};

/// Numeric-vs-analytic statistics for a finished run: plateau radius against
/// R1 and front radius against R0 about each colony center, plus (single
/// colony only) the max relative deviation of the c cross-section against the
/// stationary solution on the interior, excluding a 5-node margin where the
/// square and circular dishes genuinely differ. The front is extracted at
/// u = u2 refined by one fixed-point pass; the radius at level 0.5 is also
/// reported as threshold sensitivity.
ComparisonReport compare_to_analytic(const RunManifest& m, const AnalyticSteadyState& s,
                                     const FrontEquilibrium& eq);

void write_report_csv(std::ostream& os, const ComparisonReport& r);
void write_contour_csv(std::ostream& os, const FrontContour& c);

}  // namespace chemofront

#pragma once

#include <stdexcept>
#include <string>

namespace chemofront {

/// A model parameter violates its admissible range. Carries the field name.
class invalid_parameter : public std::invalid_argument {
public:
    invalid_parameter(std::string field, const std::string& what)
        : std::invalid_argument(what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Config text could not be parsed. Carries the offending 1-based line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Config parsed but describes a run we refuse (Courant bound, bad grid, ...).
class config_rejected : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The initial Gaussian mass admits no plateau. Distinguishes which bound of
/// the admissibility window failed: Lower means the bump never reaches the
/// threshold (v dies everywhere), Upper means the plateau would not fit in
/// the dish.
class no_plateau : public std::runtime_error {
public:
    enum class Bound { Lower, Upper };
    no_plateau(Bound which, const std::string& what)
        : std::runtime_error(what), bound_(which) {}
    Bound bound() const { return bound_; }

private:
    Bound bound_;
};

/// The shifted bistable equilibria became complex: no front can exist.
class complex_roots : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The equilibrium polynomial has no zero in the admissible radius interval.
class no_equilibrium : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A field stopped being finite during time stepping.
class blow_up : public std::runtime_error {
public:
    blow_up(long step, int i, int j, std::string field)
        : std::runtime_error("blow-up in field '" + field + "' at step " +
                             std::to_string(step) + ", node (" + std::to_string(i) + "," +
                             std::to_string(j) + ")"),
          step_(step), i_(i), j_(j), field_(std::move(field)) {}
    long step() const { return step_; }
    int node_i() const { return i_; }
    int node_j() const { return j_; }
    const std::string& field() const { return field_; }

private:
    long step_;
    int i_, j_;
    std::string field_;
};

/// Requested level does not intersect the field's value range.
class no_contour : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The 1D front reached a boundary before the measurement window closed.
class window_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chemofront

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace chemofront {

/// Square node-centered scalar grid on [0,1]^2 with spacing dx = 1/(n-1),
/// row-major (j indexes rows / the y direction).
class Field {
public:
    explicit Field(int n, double fill = 0.0);

    int n() const { return n_; }
    double dx() const { return dx_; }
    double inv_dx() const { return inv_dx_; }
    double inv_dx2() const { return inv_dx2_; }

    double x(int i) const { return i * dx_; }
    double y(int j) const { return j * dx_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * n_ + i]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * n_ + i]; }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    double min() const;
    double max() const;
    bool all_finite() const;
    /// Linear index of the first non-finite value, or -1.
    std::ptrdiff_t first_non_finite() const;

    bool operator==(const Field&) const = default;

private:
    int n_;
    double dx_, inv_dx_, inv_dx2_;
    std::vector<double> data_;
};

struct StateSnapshot {
    double t = 0.0;
    Field u, v, c;

    StateSnapshot(double time, Field u_, Field v_, Field c_);
    explicit StateSnapshot(int n) : u(n), v(n), c(n) {}
};

/// One field block: magic "CFLD", version u32, n u32, t f64, then n*n
/// little-endian f64 values row-major.
void write_field_block(std::ostream& os, const Field& f, double t);
Field read_field_block(std::istream& is, double& t);

/// A snapshot file is three consecutive field blocks (u, v, c) sharing n and t.
void save_snapshot(const StateSnapshot& s, const std::filesystem::path& path);
StateSnapshot load_snapshot(const std::filesystem::path& path);

}  // namespace chemofront

#include "chemofront/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace chemofront {

Field::Field(int n, double fill) : n_(n) {
    if (n < 3) throw std::invalid_argument("Field: n must be at least 3");
    dx_ = 1.0 / (n - 1);
    inv_dx_ = static_cast<double>(n - 1);
    inv_dx2_ = inv_dx_ * inv_dx_;
    data_.assign(static_cast<std::size_t>(n) * n, fill);
}

double Field::min() const { return *std::min_element(data_.begin(), data_.end()); }

double Field::max() const { return *std::max_element(data_.begin(), data_.end()); }

bool Field::all_finite() const { return first_non_finite() < 0; }

std::ptrdiff_t Field::first_non_finite() const {
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (!std::isfinite(data_[k])) return static_cast<std::ptrdiff_t>(k);
    }
    return -1;
}

StateSnapshot::StateSnapshot(double time, Field u_, Field v_, Field c_)
    : t(time), u(std::move(u_)), v(std::move(v_)), c(std::move(c_)) {
    if (u.n() != v.n() || u.n() != c.n()) {
        throw std::invalid_argument("StateSnapshot: inconsistent grid sizes");
    }
    if (!(t >= 0.0)) throw std::invalid_argument("StateSnapshot: t must be non-negative");
}

namespace {

constexpr char magic[4] = {'C', 'F', 'L', 'D'};
constexpr std::uint32_t format_version = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

double get_f64(std::istream& is) {
    double v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

}  // namespace

void write_field_block(std::ostream& os, const Field& f, double t) {
    os.write(magic, sizeof magic);
    put_u32(os, format_version);
    put_u32(os, static_cast<std::uint32_t>(f.n()));
    put_f64(os, t);
    os.write(reinterpret_cast<const char*>(f.data().data()),
             static_cast<std::streamsize>(f.data().size() * sizeof(double)));
}

Field read_field_block(std::istream& is, double& t) {
    char m[4];
    is.read(m, sizeof m);
    if (!is || std::memcmp(m, magic, sizeof magic) != 0) {
        throw std::runtime_error("field block: bad magic");
    }
    const std::uint32_t version = get_u32(is);
    if (version != format_version) {
        throw std::runtime_error("field block: unsupported version " + std::to_string(version));
    }
    const std::uint32_t n = get_u32(is);
    if (n < 3 || n > 1 << 16) throw std::runtime_error("field block: implausible n");
    t = get_f64(is);
    Field f(static_cast<int>(n));
    is.read(reinterpret_cast<char*>(f.data().data()),
            static_cast<std::streamsize>(f.data().size() * sizeof(double)));
    if (!is) throw std::runtime_error("field block: truncated payload");
    return f;
}

void save_snapshot(const StateSnapshot& s, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_field_block(os, s.u, s.t);
    write_field_block(os, s.v, s.t);
    write_field_block(os, s.c, s.t);
    os.flush();
    if (!os) throw std::runtime_error("write failed for " + path.string());
}

StateSnapshot load_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    double tu, tv, tc;
    Field u = read_field_block(is, tu);
    Field v = read_field_block(is, tv);
    Field c = read_field_block(is, tc);
    if (u.n() != v.n() || u.n() != c.n() || tu != tv || tu != tc) {
        throw std::runtime_error("snapshot blocks disagree in " + path.string());
    }
    return StateSnapshot(tu, std::move(u), std::move(v), std::move(c));
}

}  // namespace chemofront

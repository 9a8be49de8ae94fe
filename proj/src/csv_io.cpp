#include "maglab/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace maglab {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& cell, std::size_t row) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("trajectory CSV: bad number '" + cell + "' in row " + std::to_string(row));
    }
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    const int n = traj.n();
    out << 't';
    for (int i = 1; i <= n; ++i) out << ",x" << i;
    for (int i = 1; i <= n; ++i) out << ",y" << i;
    out << ",z";
    for (int i = 1; i <= n; ++i) out << ",a" << i;
    for (int i = 1; i <= n; ++i) out << ",b" << i;
    out << ",c\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        out << format_double(traj.t[k]);
        const Point& p = traj.points[k];
        const FrameTangent& v = traj.velocities[k];
        for (int i = 0; i < n; ++i) out << ',' << format_double(p.x[i]);
        for (int i = 0; i < n; ++i) out << ',' << format_double(p.y[i]);
        out << ',' << format_double(p.z);
        for (int i = 0; i < n; ++i) out << ',' << format_double(v.a[i]);
        for (int i = 0; i < n; ++i) out << ',' << format_double(v.b[i]);
        out << ',' << format_double(v.c) << '\n';
    }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_trajectory_csv(out, traj);
}

Trajectory read_trajectory_csv(std::istream& in, double strength) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("trajectory CSV: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_line(line);
    // columns: t, n x's, n y's, z, n a's, n b's, c  ->  4n + 3
    if (header.size() < 7 || (header.size() - 3) % 4 != 0 || header.front() != "t") {
        throw std::runtime_error("trajectory CSV: malformed header");
    }
    const int n = static_cast<int>((header.size() - 3) / 4);

    Trajectory traj;
    traj.strength = strength;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != header.size()) {
            throw std::runtime_error("trajectory CSV: row " + std::to_string(row) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(header.size()));
        }
        std::size_t at = 0;
        traj.t.push_back(parse_double(cells[at++], row));
        Point p = Point::origin(n);
        FrameTangent v = FrameTangent::zero(n);
        for (int i = 0; i < n; ++i) p.x[i] = parse_double(cells[at++], row);
        for (int i = 0; i < n; ++i) p.y[i] = parse_double(cells[at++], row);
        p.z = parse_double(cells[at++], row);
        for (int i = 0; i < n; ++i) v.a[i] = parse_double(cells[at++], row);
        for (int i = 0; i < n; ++i) v.b[i] = parse_double(cells[at++], row);
        v.c = parse_double(cells[at++], row);
        traj.points.push_back(std::move(p));
        traj.velocities.push_back(std::move(v));
        ++row;
    }
    if (traj.t.size() < 2) throw std::runtime_error("trajectory CSV: need at least 2 rows");
    traj.dt = traj.t[1] - traj.t[0];
    traj.cos_theta = traj.velocities.front().c;
    return traj;
}

Trajectory read_trajectory_csv(const std::string& path, double strength) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return read_trajectory_csv(in, strength);
}

}  // namespace maglab

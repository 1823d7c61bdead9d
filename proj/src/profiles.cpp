#include "corrlat/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "corrlat/constants.hpp"

namespace corrlat {

RoughnessProfile RoughnessProfile::from_modes(std::vector<CosineMode> modes) {
    for (const auto& m : modes) {
        if (m.amplitude < 0.0)
            throw DomainError("RoughnessProfile: mode amplitude must be >= 0");
    }
    RoughnessProfile p;
    p.modes_ = std::move(modes);
    return p;
}

RoughnessProfile RoughnessProfile::from_grid(int nx, int ny, double dx, double dy,
                                             std::vector<double> heights_row_major) {
    if (nx < 1 || ny < 1) throw DomainError("RoughnessProfile: grid needs nx, ny >= 1");
    if (!(dx > 0.0) || !(dy > 0.0))
        throw DomainError("RoughnessProfile: grid spacing must be > 0");
    if (static_cast<int>(heights_row_major.size()) != nx * ny)
        throw DomainError("RoughnessProfile: expected nx*ny heights");
    RoughnessProfile p;
    p.nx_ = nx;
    p.ny_ = ny;
    p.dx_ = dx;
    p.dy_ = dy;
    p.heights_ = std::move(heights_row_major);
    return p;
}

RoughnessProfile RoughnessProfile::from_csv(std::istream& in) {
    auto next_fields = [&in](std::vector<double>& out) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::stringstream ss(line);
            std::string cell;
            out.clear();
            while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
            return true;
        }
        return false;
    };
    std::vector<double> header;
    if (!next_fields(header) || header.size() != 4)
        throw ConfigError("height map CSV: expected header row nx,ny,dx_m,dy_m");
    const int nx = static_cast<int>(header[0]);
    const int ny = static_cast<int>(header[1]);
    std::vector<double> heights;
    heights.reserve(static_cast<size_t>(nx) * ny);
    std::vector<double> row;
    for (int j = 0; j < ny; ++j) {
        if (!next_fields(row) || static_cast<int>(row.size()) != nx)
            throw ConfigError("height map CSV: expected " + std::to_string(ny) +
                              " rows of " + std::to_string(nx) + " heights");
        heights.insert(heights.end(), row.begin(), row.end());
    }
    return from_grid(nx, ny, header[2], header[3], std::move(heights));
}

RoughnessProfile RoughnessProfile::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("height map CSV: cannot open " + path);
    return from_csv(in);
}

std::vector<SpectralLine> RoughnessProfile::fourier_modes() const {
    if (modes_.empty() && !has_grid())
        throw EmptyProfile("fourier_modes: profile has neither modes nor a grid");

    std::vector<SpectralLine> lines;
    for (const auto& m : modes_) {
        // a cos(k.r - phi) = (a/2) e^{-i phi} e^{i k.r} + (a/2) e^{+i phi} e^{-i k.r}
        const std::complex<double> half(0.5 * m.amplitude * std::cos(m.phase),
                                        -0.5 * m.amplitude * std::sin(m.phase));
        if (m.wavevector.norm() == 0.0) {
            lines.push_back({m.wavevector, 2.0 * half.real()});
            continue;
        }
        lines.push_back({m.wavevector, half});
        lines.push_back({{-m.wavevector.qx, -m.wavevector.qy}, std::conj(half)});
    }

    if (has_grid()) {
        // Discrete transform of the periodic window; exact reconstruction on
        // the grid points by sum of c_mn e^{i q.r}.
        const double lx = nx_ * dx_;
        const double ly = ny_ * dy_;
        for (int m = 0; m < nx_; ++m) {
            const int mm = (m <= nx_ / 2) ? m : m - nx_;
            for (int n = 0; n < ny_; ++n) {
                const int nn = (n <= ny_ / 2) ? n : n - ny_;
                std::complex<double> c(0.0, 0.0);
                for (int j = 0; j < nx_; ++j) {
                    for (int kk = 0; kk < ny_; ++kk) {
                        const double arg = 2.0 * kPi * (double(mm) * j / nx_ +
                                                        double(nn) * kk / ny_);
                        c += heights_[static_cast<size_t>(kk) * nx_ + j] *
                             std::complex<double>(std::cos(arg), -std::sin(arg));
                    }
                }
                c /= static_cast<double>(nx_) * ny_;
                lines.push_back({{2.0 * kPi * mm / lx, 2.0 * kPi * nn / ly}, c});
            }
        }
    }
    return lines;
}

double RoughnessProfile::evaluate(double x, double y) const {
    if (modes_.empty() && !has_grid())
        throw EmptyProfile("evaluate: profile has neither modes nor a grid");
    double h = 0.0;
    for (const auto& m : modes_)
        h += m.amplitude *
             std::cos(m.wavevector.qx * x + m.wavevector.qy * y - m.phase);
    if (has_grid()) {
        const double lx = nx_ * dx_;
        const double ly = ny_ * dy_;
        if (x < 0.0 || x > lx || y < 0.0 || y > ly)
            throw OutOfGrid("evaluate: point outside the sampled window");
        const double fx = x / dx_;
        const double fy = y / dy_;
        const int i0 = std::min(static_cast<int>(fx), nx_ - 1);
        const int j0 = std::min(static_cast<int>(fy), ny_ - 1);
        const int i1 = (i0 + 1) % nx_; // periodic window closes the last cell
        const int j1 = (j0 + 1) % ny_;
        const double tx = fx - i0;
        const double ty = fy - j0;
        auto at = [this](int i, int j) {
            return heights_[static_cast<size_t>(j) * nx_ + i];
        };
        h += (1 - tx) * (1 - ty) * at(i0, j0) + tx * (1 - ty) * at(i1, j0) +
             (1 - tx) * ty * at(i0, j1) + tx * ty * at(i1, j1);
    }
    return h;
}

double RoughnessProfile::max_height() const {
    double bound = 0.0;
    for (const auto& m : modes_) bound += m.amplitude;
    if (has_grid()) {
        double gmax = 0.0;
        for (double h : heights_) gmax = std::max(gmax, std::abs(h));
        bound += gmax;
    }
    return bound;
}

} // namespace corrlat

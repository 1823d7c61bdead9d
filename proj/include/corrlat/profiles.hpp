#ifndef CORRLAT_PROFILES_HPP
#define CORRLAT_PROFILES_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "corrlat/errors.hpp"
#include "corrlat/response.hpp"

namespace corrlat {

/// One corrugation mode h = amplitude * cos(k . r - phase).
struct CosineMode {
    double amplitude = 0.0; // length, >= 0
    WaveVector wavevector;
    double phase = 0.0; // radians
};

/// One spectral line of h: contribution amplitude * exp(i q . r).
struct SpectralLine {
    WaveVector q;
    std::complex<double> amplitude;
};

/// Corrugation geometry: a list of cosine modes and/or a sampled height grid
/// (periodic window). Immutable after construction.
class RoughnessProfile {
public:
    static RoughnessProfile from_modes(std::vector<CosineMode> modes);
    static RoughnessProfile from_grid(int nx, int ny, double dx, double dy,
                                      std::vector<double> heights_row_major);
    /// CSV height map: first row "nx,ny,dx_m,dy_m" (values), then ny rows of
    /// nx heights in meters, row-major.
    static RoughnessProfile from_csv(std::istream& in);
    static RoughnessProfile from_csv_file(const std::string& path);

    /// Spectral lines such that h(r) = sum of amplitude * exp(i q . r).
    /// Cosine modes give exact conjugate pairs at +-q; grids give the
    /// discrete transform over the periodic window.
    std::vector<SpectralLine> fourier_modes() const;

    /// h at (x, y); mode summation or bilinear grid interpolation.
    /// Throws OutOfGrid for sampled profiles evaluated outside the window.
    double evaluate(double x, double y) const;

    /// Sum-of-amplitudes bound for mode profiles, grid max otherwise.
    double max_height() const;

    bool has_grid() const { return nx_ > 0; }
    const std::vector<CosineMode>& modes() const { return modes_; }

private:
    RoughnessProfile() = default;

    std::vector<CosineMode> modes_;
    int nx_ = 0, ny_ = 0;
    double dx_ = 0.0, dy_ = 0.0;
    std::vector<double> heights_;
};

} // namespace corrlat

#endif

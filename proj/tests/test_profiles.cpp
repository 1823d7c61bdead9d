#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "corrlat/constants.hpp"
#include "corrlat/profiles.hpp"

using namespace corrlat;

TEST_CASE("single cosine mode decomposes into a conjugate pair") {
    const double a = 2e-9, k = 2.0 * kPi / 8.5e-9;
    const auto profile = RoughnessProfile::from_modes({CosineMode{a, {k, 0.0}, 0.0}});
    const auto lines = profile.fourier_modes();
    REQUIRE(lines.size() == 2);
    bool saw_plus = false, saw_minus = false;
    for (const auto& line : lines) {
        CHECK(line.q.qy == 0.0);
        CHECK(std::abs(line.amplitude - std::complex<double>(0.5 * a, 0.0)) < 1e-24);
        if (line.q.qx > 0) saw_plus = true;
        if (line.q.qx < 0) saw_minus = true;
        CHECK(std::abs(std::abs(line.q.qx) - k) < 1e-6 * k);
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
}

TEST_CASE("two-mode profile carries the phase on the second pair") {
    const double k1 = 1.0e9, k2 = 2.3e9, phase = kPi / 3.0;
    const auto profile = RoughnessProfile::from_modes(
        {CosineMode{1e-9, {k1, 0.0}, 0.0}, CosineMode{2e-9, {k2, 0.0}, -phase}});
    const auto lines = profile.fourier_modes();
    REQUIRE(lines.size() == 4);
    // h2 = a2 cos(k2 x + pi/3): the +k2 line is (a2/2) e^{-i(-pi/3)}.
    for (const auto& line : lines) {
        if (std::abs(line.q.qx - k2) < 1.0) {
            CHECK(std::arg(line.amplitude) == doctest::Approx(phase).epsilon(1e-12));
            CHECK(std::abs(line.amplitude) == doctest::Approx(1e-9).epsilon(1e-12));
        }
        if (std::abs(line.q.qx + k2) < 1.0)
            CHECK(std::arg(line.amplitude) == doctest::Approx(-phase).epsilon(1e-12));
    }
}

TEST_CASE("sinusoid evaluation") {
    const double a = 2e-9, lambda = 8.5e-9, k = 2.0 * kPi / lambda;
    const auto profile = RoughnessProfile::from_modes({CosineMode{a, {k, 0.0}, 0.0}});
    CHECK(profile.evaluate(0.0, 0.0) == doctest::Approx(a).epsilon(1e-14));
    CHECK(profile.evaluate(0.5 * lambda, 0.0) == doctest::Approx(-a).epsilon(1e-12));
    CHECK(profile.evaluate(0.25 * lambda, 3.0e-9) ==
          doctest::Approx(0.0).scale(a).epsilon(1e-12));
    CHECK(profile.max_height() == doctest::Approx(a).epsilon(1e-15));
}

TEST_CASE("sum profile is the mode-by-mode sum") {
    const CosineMode m1{1.5e-9, {9e8, 2e8}, 0.3};
    const CosineMode m2{0.7e-9, {3e8, -5e8}, 1.1};
    const auto p1 = RoughnessProfile::from_modes({m1});
    const auto p2 = RoughnessProfile::from_modes({m2});
    const auto sum = RoughnessProfile::from_modes({m1, m2});
    for (double x : {0.0, 1.3e-9, -4.2e-9})
        for (double y : {0.0, 2.7e-9}) {
            CHECK(sum.evaluate(x, y) ==
                  doctest::Approx(p1.evaluate(x, y) + p2.evaluate(x, y)).epsilon(1e-12));
        }
    CHECK(sum.max_height() == doctest::Approx(2.2e-9).epsilon(1e-15));
}

TEST_CASE("fourier round trip reproduces the height field") {
    const auto profile = RoughnessProfile::from_modes(
        {CosineMode{1.5e-9, {9e8, 2e8}, 0.3}, CosineMode{0.7e-9, {3e8, -5e8}, 1.1}});
    const auto lines = profile.fourier_modes();
    for (double x : {0.0, 0.8e-9, -2.6e-9, 5.1e-9})
        for (double y : {0.0, -1.9e-9, 3.3e-9}) {
            std::complex<double> h(0.0, 0.0);
            for (const auto& line : lines) {
                const double arg = line.q.qx * x + line.q.qy * y;
                h += line.amplitude * std::complex<double>(std::cos(arg), std::sin(arg));
            }
            CHECK(std::abs(h.imag()) < 1e-10 * profile.max_height());
            CHECK(h.real() ==
                  doctest::Approx(profile.evaluate(x, y)).epsilon(1e-10));
        }
}

TEST_CASE("constant grid gives a single q = 0 line") {
    const double c = 1.2e-9;
    const auto grid =
        RoughnessProfile::from_grid(4, 4, 1e-9, 1e-9, std::vector<double>(16, c));
    const auto lines = grid.fourier_modes();
    std::complex<double> at_zero(0.0, 0.0);
    for (const auto& line : lines) {
        if (line.q.norm() == 0.0)
            at_zero += line.amplitude;
        else
            CHECK(std::abs(line.amplitude) < 1e-12 * c);
    }
    CHECK(std::abs(at_zero - std::complex<double>(c, 0.0)) < 1e-12 * c);
    CHECK(grid.max_height() == doctest::Approx(c).epsilon(1e-15));
}

TEST_CASE("grid DFT recovers a commensurate cosine") {
    const int n = 16;
    const double dx = 1e-9, L = n * dx, k = 2.0 * kPi / L;
    std::vector<double> h(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            h[static_cast<std::size_t>(j) * n + i] = 2e-9 * std::cos(k * i * dx);
    const auto grid = RoughnessProfile::from_grid(n, n, dx, dx, h);
    double recovered = 0.0;
    for (const auto& line : grid.fourier_modes()) {
        if (std::abs(line.q.qx - k) < 0.5 * k && std::abs(line.q.qy) < 0.5 * k)
            recovered += std::abs(line.amplitude);
    }
    CHECK(recovered == doctest::Approx(1e-9).epsilon(1e-10)); // a/2 at +k
}

TEST_CASE("grid interpolation and window bounds") {
    // 2x2 checkerboard of heights; bilinear interpolation between nodes.
    const auto grid =
        RoughnessProfile::from_grid(2, 2, 1e-9, 1e-9, {0.0, 1e-9, 1e-9, 0.0});
    CHECK(grid.evaluate(0.0, 0.0) == doctest::Approx(0.0).scale(1e-9));
    CHECK(grid.evaluate(0.5e-9, 0.0) == doctest::Approx(0.5e-9).epsilon(1e-12));
    CHECK(grid.evaluate(0.5e-9, 0.5e-9) == doctest::Approx(0.5e-9).epsilon(1e-12));
    CHECK_THROWS_AS(grid.evaluate(5e-9, 0.0), OutOfGrid);
}

TEST_CASE("csv ingestion matches from_grid") {
    std::stringstream csv;
    csv << "2,3,1e-9,2e-9\n"
        << "0,1e-9\n"
        << "2e-9,3e-9\n"
        << "4e-9,5e-9\n";
    const auto profile = RoughnessProfile::from_csv(csv);
    CHECK(profile.has_grid());
    CHECK(profile.evaluate(0.0, 0.0) == doctest::Approx(0.0).scale(1e-9));
    CHECK(profile.evaluate(1e-9, 2e-9) == doctest::Approx(3e-9).epsilon(1e-12));
    CHECK(profile.max_height() == doctest::Approx(5e-9).epsilon(1e-15));
}

#pragma once

#include "cherednik/cyclotomic.hpp"
#include "cherednik/matrix.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace testsupport {

using cherednik::Cyc;
using cherednik::Matrix;

// Floating evaluation straight from the power basis coefficients.
inline std::complex<double> approx(const Cyc& z) {
    const double n = z.conductor();
    std::complex<double> v = 0;
    const auto& c = z.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k)
        v += c[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
    return v;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    cherednik::Rational rational() {
        return cherednik::Rational(integer(-9, 9), integer(1, 6));
    }

    // Random element of Q(zeta_n), a few terms.
    Cyc element(int n) {
        Cyc z;
        const long terms = integer(1, 3);
        for (long t = 0; t < terms; ++t) z += Cyc(rational()) * Cyc::root_of_unity(n, integer(0, n - 1));
        return z;
    }

    Matrix matrix(std::size_t r, std::size_t c, int n, int zero_percent = 30) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (integer(0, 99) >= zero_percent) m(i, j) = element(n);
        return m;
    }

private:
    std::mt19937 rng_;
};

}  // namespace testsupport

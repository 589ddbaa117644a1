#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "torus_spectra/errors.hpp"

namespace torus_spectra {

// A flat torus shape: the positive-definite binary quadratic form
//   q(m, n) = alpha1 m^2 + alpha2 m n + alpha3 n^2,  4 a1 a3 > a2^2.
// `reduced` records membership in the fundamental domain
//   0 <= alpha2 <= alpha1 <= alpha3.
struct TorusShape {
    double alpha1 = 1.0;
    double alpha2 = 0.0;
    double alpha3 = 1.0;
    bool reduced = false;
};

// Validates positive-definiteness and flags reduction.
// Throws NotPositiveDefinite when 4 a1 a3 <= a2^2.
TorusShape validate_shape(double alpha1, double alpha2, double alpha3);

inline double discriminant(const TorusShape& s) {
    return 4.0 * s.alpha1 * s.alpha3 - s.alpha2 * s.alpha2;
}

// pi / sqrt(4 a1 a3 - a2^2): rescales eigenvalues to mean spacing one.
double spectrum_normalizer(const TorusShape& s);

// q evaluated at a lattice point, times the normalizer.
double normalized_value(const TorusShape& s, std::int64_t m, std::int64_t n);

// Applies the unimodular substitution (m, n) -> (u00 m + u01 n, u10 m + u11 n)
// to the form. |det U| must be 1.
TorusShape transform_shape(const TorusShape& s, const std::array<std::array<int, 2>, 2>& u);

// GL2(Z)-reduction of a positive-definite form into the fundamental domain.
// The output represents the same torus (identical normalized spectrum).
TorusShape reduce_shape(const TorusShape& s);

// The desymmetrized, normalized spectrum: the N smallest values of
// normalizer * q(m, n) over m > 0 or (m = 0, n >= 1), sorted ascending
// with multiplicity. Ties are ordered by (m, n) for determinism.
struct NormalizedSpectrum {
    TorusShape shape;
    std::vector<double> values;
    std::int64_t count() const { return static_cast<std::int64_t>(values.size()); }
};

NormalizedSpectrum enumerate_spectrum(const TorusShape& s, std::int64_t n_values);

// Groups consecutive spectrum values differing by at most tol.
std::vector<std::pair<double, std::int64_t>>
spectrum_multiplicities(const NormalizedSpectrum& spec, double tol);

} // namespace torus_spectra

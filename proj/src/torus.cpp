#include "torus_spectra/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace torus_spectra {

namespace {

bool in_fundamental_domain(double a1, double a2, double a3) {
    return 0.0 <= a2 && a2 <= a1 && a1 <= a3;
}

} // namespace

TorusShape validate_shape(double alpha1, double alpha2, double alpha3) {
    if (!(4.0 * alpha1 * alpha3 > alpha2 * alpha2))
        throw NotPositiveDefinite("form is not positive definite: 4*a1*a3 <= a2^2");
    TorusShape s{alpha1, alpha2, alpha3, in_fundamental_domain(alpha1, alpha2, alpha3)};
    return s;
}

double spectrum_normalizer(const TorusShape& s) {
    return std::numbers::pi / std::sqrt(discriminant(s));
}

double normalized_value(const TorusShape& s, std::int64_t m, std::int64_t n) {
    double dm = static_cast<double>(m);
    double dn = static_cast<double>(n);
    double q = s.alpha1 * dm * dm + s.alpha2 * dm * dn + s.alpha3 * dn * dn;
    return spectrum_normalizer(s) * q;
}

TorusShape transform_shape(const TorusShape& s, const std::array<std::array<int, 2>, 2>& u) {
    int p = u[0][0], q = u[0][1], r = u[1][0], t = u[1][1];
    int det = p * t - q * r;
    if (det != 1 && det != -1)
        throw DegenerateInput("transform_shape: matrix is not unimodular");
    double a1 = s.alpha1 * p * p + s.alpha2 * p * r + s.alpha3 * r * r;
    double a2 = 2.0 * s.alpha1 * p * q + s.alpha2 * (p * t + q * r) + 2.0 * s.alpha3 * r * t;
    double a3 = s.alpha1 * q * q + s.alpha2 * q * t + s.alpha3 * t * t;
    return validate_shape(a1, a2, a3);
}

TorusShape reduce_shape(const TorusShape& s) {
    double a1 = s.alpha1, a2 = s.alpha2, a3 = s.alpha3;
    // Gauss reduction: translate a2 into [-a1, a1], swap if a1 > a3, repeat.
    for (int iter = 0; iter < 256; ++iter) {
        double t = std::round(a2 / (2.0 * a1));
        if (t != 0.0) {
            double na2 = a2 - 2.0 * t * a1;
            double na3 = a1 * t * t - a2 * t + a3;
            a2 = na2;
            a3 = na3;
        }
        if (a1 > a3) {
            std::swap(a1, a3);
            continue;
        }
        if (std::abs(a2) <= a1) break;
    }
    if (a2 < 0.0) a2 = -a2; // (m, n) -> (m, -n)
    return validate_shape(a1, a2, a3);
}

NormalizedSpectrum enumerate_spectrum(const TorusShape& s, std::int64_t n_values) {
    if (n_values < 1) throw DegenerateInput("enumerate_spectrum: need N >= 1");
    TorusShape shape = validate_shape(s.alpha1, s.alpha2, s.alpha3);

    struct Entry {
        double v;
        std::int64_t m, n;
    };

    const double a1 = shape.alpha1, a2 = shape.alpha2, a3 = shape.alpha3;
    const double disc = discriminant(shape);
    const double c = spectrum_normalizer(shape);

    // Weyl law: #{Lambda <= X} ~ X, so a threshold slightly above N almost
    // always yields N values; grow geometrically when it does not.
    double threshold = 1.2 * static_cast<double>(n_values) + 16.0;
    std::vector<Entry> entries;
    for (;;) {
        entries.clear();
        const double q_cap = threshold / c;

        // m = 0 axis: a3 n^2 <= q_cap, n >= 1.
        for (std::int64_t n = 1;; ++n) {
            double q = a3 * static_cast<double>(n) * static_cast<double>(n);
            if (q > q_cap) break;
            entries.push_back({c * q, 0, n});
        }

        // m >= 1: for each n, the m-range comes from the quadratic in m.
        const std::int64_t n_max =
            static_cast<std::int64_t>(std::floor(std::sqrt(4.0 * a1 * q_cap / disc))) + 1;
        for (std::int64_t n = -n_max; n <= n_max; ++n) {
            double dn = static_cast<double>(n);
            double d = a2 * a2 * dn * dn - 4.0 * a1 * (a3 * dn * dn - q_cap);
            if (d < 0.0) continue;
            double r = std::sqrt(d);
            double lo = (-a2 * dn - r) / (2.0 * a1);
            double hi = (-a2 * dn + r) / (2.0 * a1);
            std::int64_t m_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(lo)) - 1);
            std::int64_t m_hi = static_cast<std::int64_t>(std::floor(hi)) + 1;
            for (std::int64_t m = m_lo; m <= m_hi; ++m) {
                double dm = static_cast<double>(m);
                double q = a1 * dm * dm + a2 * dm * dn + a3 * dn * dn;
                if (q <= q_cap) entries.push_back({c * q, m, n});
            }
        }

        if (static_cast<std::int64_t>(entries.size()) >= n_values) break;
        threshold *= 1.5;
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        if (x.v != y.v) return x.v < y.v;
        if (x.m != y.m) return x.m < y.m;
        return x.n < y.n;
    });

    NormalizedSpectrum spec;
    spec.shape = shape;
    spec.values.reserve(static_cast<std::size_t>(n_values));
    for (std::int64_t i = 0; i < n_values; ++i)
        spec.values.push_back(entries[static_cast<std::size_t>(i)].v);
    return spec;
}

std::vector<std::pair<double, std::int64_t>>
spectrum_multiplicities(const NormalizedSpectrum& spec, double tol) {
    if (tol < 0.0) throw DegenerateInput("spectrum_multiplicities: tol must be >= 0");
    std::vector<std::pair<double, std::int64_t>> groups;
    double last = 0.0;
    for (double v : spec.values) {
        if (!groups.empty() && v - last <= tol) {
            ++groups.back().second;
        } else {
            groups.emplace_back(v, 1);
        }
        last = v;
    }
    return groups;
}

} // namespace torus_spectra

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "torus_spectra/errors.hpp"
#include "torus_spectra/torus.hpp"

namespace torus_spectra {

// Correlation window. A window given as (lo, hi) is the half-open
// interval (lo, hi]; the degenerate window (0, 0) counts exact ties of
// distinct indices. Half-openness makes window additivity exact, and
// excluding ties from (0, hi] keeps rectangular tori (whose
// desymmetrized spectra carry the q(m,n) = q(m,-n) doubling) comparable
// with the Poissonian limit.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval of(double lo, double hi) { return Interval{lo, hi}; }

    bool is_tie_window() const { return lo == 0.0 && hi == 0.0; }

    bool contains(double d) const {
        if (is_tie_window()) return d == 0.0;
        return lo < d && d <= hi;
    }

    // d = 0 membership, i.e. whether the self-pair would be counted.
    bool contains_zero() const { return is_tie_window() || (lo < 0.0 && 0.0 <= hi); }

    Interval intersect(const Interval& o) const;
};

enum class CorrelationMethod { oracle, optimized };

// One n-correlation evaluation. `count` is the exact tuple count before
// division by the sample size.
struct CorrelationStat {
    int order = 2;
    std::vector<Interval> intervals;
    std::int64_t sample_size = 0;
    std::int64_t count = 0;
    double value = 0.0;
    CorrelationMethod method = CorrelationMethod::optimized;
};

// T_2: ordered pairs (i1, i2), i1 != i2, both <= N, with
// Lambda_{i2} - Lambda_{i1} in the window, divided by N.
CorrelationStat pair_correlation(const NormalizedSpectrum& spec, Interval window,
                                 std::int64_t n_used);

// T_3 over pairwise-distinct (i1, i2, i3): differences to Lambda_{i1}
// in I1 resp. I2. The optimized path multiplies the two window counts
// per i1 and subtracts the i2 = i3 diagonal (the I1 ∩ I2 window count).
CorrelationStat triple_correlation(const NormalizedSpectrum& spec, Interval window1,
                                   Interval window2, std::int64_t n_used);

// Literal nested-loop ground truth for n in {2, 3}. Guarded at N <= 5000.
CorrelationStat n_correlation_oracle(const NormalizedSpectrum& spec,
                                     std::span<const Interval> windows, std::int64_t n_used);

// T_2([0,b]) or T_3([0,b],[0,b]) on an ascending grid of b values.
std::vector<CorrelationStat> correlation_curve(const NormalizedSpectrum& spec,
                                               std::span<const double> b_grid, int order,
                                               std::int64_t n_used);

// Window counting over raw sorted values; used by the modules that work
// on sequences other than torus spectra.
std::int64_t pair_count_sorted(std::span<const double> values, Interval window,
                               std::int64_t n_used);

} // namespace torus_spectra

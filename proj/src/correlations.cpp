#include "torus_spectra/correlations.hpp"

#include <algorithm>

namespace torus_spectra {

namespace {

constexpr std::int64_t kOracleGuard = 5000;

void check_sample(std::int64_t n_used, std::int64_t available) {
    if (n_used < 1) throw DegenerateInput("correlation: need N >= 1");
    if (n_used > available)
        throw SampleTooLarge("correlation: N exceeds the spectrum size");
}

// Per-base window counting over a sorted array with two monotone
// pointers; the membership predicate is identical to Interval::contains
// (differences are formed the same way, v[j] - v[i]), so counts agree
// with the oracle exactly.
class WindowCounter {
  public:
    WindowCounter(std::span<const double> v, Interval w)
        : v_(v), w_(w), empty_(!w.is_tie_window() && !(w.lo < w.hi)) {}

    // Count of j != i with v[j] - v[i] in the window; i scans ascending.
    std::int64_t count_at(std::size_t i) {
        if (empty_) return 0;
        const double base = v_[i];
        if (w_.is_tie_window()) {
            while (lo_ < v_.size() && v_[lo_] - base < 0.0) ++lo_;
            while (hi_ < v_.size() && v_[hi_] - base <= 0.0) ++hi_;
            return static_cast<std::int64_t>(hi_ - lo_) - 1; // self is always a tie
        }
        while (lo_ < v_.size() && v_[lo_] - base <= w_.lo) ++lo_;
        while (hi_ < v_.size() && v_[hi_] - base <= w_.hi) ++hi_;
        std::int64_t raw = static_cast<std::int64_t>(hi_ - lo_);
        if (w_.contains_zero()) --raw; // remove the self pair
        return raw;
    }

  private:
    std::span<const double> v_;
    Interval w_;
    bool empty_;
    std::size_t lo_ = 0, hi_ = 0;
};

} // namespace

Interval Interval::intersect(const Interval& o) const {
    const Interval kEmpty{1.0, 0.0};
    if (is_tie_window() && o.is_tie_window()) return Interval{0.0, 0.0};
    if (is_tie_window()) return o.contains_zero() ? Interval{0.0, 0.0} : kEmpty;
    if (o.is_tie_window()) return contains_zero() ? Interval{0.0, 0.0} : kEmpty;
    double l = std::max(lo, o.lo);
    double h = std::min(hi, o.hi);
    if (l == 0.0 && h == 0.0) return kEmpty; // (0, 0] is empty, not the tie window
    return Interval{l, h};
}

CorrelationStat pair_correlation(const NormalizedSpectrum& spec, Interval window,
                                 std::int64_t n_used) {
    check_sample(n_used, spec.count());
    std::span<const double> v(spec.values.data(), static_cast<std::size_t>(n_used));
    WindowCounter wc(v, window);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < v.size(); ++i) count += wc.count_at(i);
    CorrelationStat st;
    st.order = 2;
    st.intervals = {window};
    st.sample_size = n_used;
    st.count = count;
    st.value = static_cast<double>(count) / static_cast<double>(n_used);
    st.method = CorrelationMethod::optimized;
    return st;
}

CorrelationStat triple_correlation(const NormalizedSpectrum& spec, Interval window1,
                                   Interval window2, std::int64_t n_used) {
    check_sample(n_used, spec.count());
    std::span<const double> v(spec.values.data(), static_cast<std::size_t>(n_used));
    WindowCounter w1(v, window1);
    WindowCounter w2(v, window2);
    WindowCounter ov(v, window1.intersect(window2));
    std::int64_t count = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t c1 = w1.count_at(i);
        std::int64_t c2 = w2.count_at(i);
        std::int64_t diag = ov.count_at(i); // i2 = i3 would land here
        count += c1 * c2 - diag;
    }
    CorrelationStat st;
    st.order = 3;
    st.intervals = {window1, window2};
    st.sample_size = n_used;
    st.count = count;
    st.value = static_cast<double>(count) / static_cast<double>(n_used);
    st.method = CorrelationMethod::optimized;
    return st;
}

CorrelationStat n_correlation_oracle(const NormalizedSpectrum& spec,
                                     std::span<const Interval> windows, std::int64_t n_used) {
    const int order = static_cast<int>(windows.size()) + 1;
    if (order != 2 && order != 3)
        throw DegenerateInput("n_correlation_oracle: order must be 2 or 3");
    check_sample(n_used, spec.count());
    if (n_used > kOracleGuard)
        throw OracleTooLarge("n_correlation_oracle: N exceeds the O(N^n) guard");

    const std::size_t n = static_cast<std::size_t>(n_used);
    const double* v = spec.values.data();
    std::int64_t count = 0;
    if (order == 2) {
        for (std::size_t i1 = 0; i1 < n; ++i1)
            for (std::size_t i2 = 0; i2 < n; ++i2) {
                if (i2 == i1) continue;
                if (windows[0].contains(v[i2] - v[i1])) ++count;
            }
    } else {
        for (std::size_t i1 = 0; i1 < n; ++i1)
            for (std::size_t i2 = 0; i2 < n; ++i2) {
                if (i2 == i1) continue;
                if (!windows[0].contains(v[i2] - v[i1])) continue;
                for (std::size_t i3 = 0; i3 < n; ++i3) {
                    if (i3 == i1 || i3 == i2) continue;
                    if (windows[1].contains(v[i3] - v[i1])) ++count;
                }
            }
    }
    CorrelationStat st;
    st.order = order;
    st.intervals.assign(windows.begin(), windows.end());
    st.sample_size = n_used;
    st.count = count;
    st.value = static_cast<double>(count) / static_cast<double>(n_used);
    st.method = CorrelationMethod::oracle;
    return st;
}

std::vector<CorrelationStat> correlation_curve(const NormalizedSpectrum& spec,
                                               std::span<const double> b_grid, int order,
                                               std::int64_t n_used) {
    if (order != 2 && order != 3)
        throw DegenerateInput("correlation_curve: order must be 2 or 3");
    for (std::size_t i = 1; i < b_grid.size(); ++i)
        if (b_grid[i] < b_grid[i - 1])
            throw DegenerateInput("correlation_curve: b grid must be ascending");
    std::vector<CorrelationStat> out;
    out.reserve(b_grid.size());
    for (double b : b_grid) {
        Interval w = Interval::of(0.0, b);
        out.push_back(order == 2 ? pair_correlation(spec, w, n_used)
                                 : triple_correlation(spec, w, w, n_used));
    }
    return out;
}

std::int64_t pair_count_sorted(std::span<const double> values, Interval window,
                               std::int64_t n_used) {
    if (n_used < 1 || n_used > static_cast<std::int64_t>(values.size()))
        throw SampleTooLarge("pair_count_sorted: bad N");
    std::span<const double> v = values.subspan(0, static_cast<std::size_t>(n_used));
    WindowCounter wc(v, window);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < v.size(); ++i) count += wc.count_at(i);
    return count;
}

} // namespace torus_spectra

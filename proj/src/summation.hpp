#pragma once

// Internal series engines. Both drivers share one stopping rule, applied per
// component: a component is quiet when its current |term| stays below
// rel_tol * (running sum of |terms|) for three consecutive indices AND the
// geometric tail estimate |term| / (1 - ratio) also falls below that bound.
// The tail estimate is only trusted once successive-term ratios have dropped
// below 1 (terms decay super-geometrically past the peak, so ratios keep
// shrinking and the estimate is a true upper bound).

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "pentropy/config.hpp"

namespace pentropy::detail {

template <int N>
struct SumOutcome {
    std::array<double, N> sums{};
    std::array<double, N> tails{};  // absolute tail estimates, 0 when a side ran out of indices
    std::int64_t terms = 0;
};

template <int N>
class Accumulator {
public:
    explicit Accumulator(double rel_tol) : rel_tol_(rel_tol) {}

    // Adds one term vector; returns true once the stop rule is satisfied.
    bool add(const std::array<double, N>& t) {
        bool all_small = true;
        bool armed = true;
        bool tail_ok = true;
        for (int c = 0; c < N; ++c) {
            const double y = t[c] - comp_[c];
            const double v = sum_[c] + y;
            comp_[c] = (v - sum_[c]) - y;
            sum_[c] = v;

            const double mag = std::fabs(t[c]);
            abs_sum_[c] += mag;

            double ratio;
            if (mag == 0.0)
                ratio = 0.0;
            else if (prev_[c] > 0.0)
                ratio = mag / prev_[c];
            else
                ratio = 1.0;  // unknown growth, refuse to arm this step
            prev_[c] = mag;

            const double budget = rel_tol_ * abs_sum_[c];
            if (mag > budget) all_small = false;
            if (ratio >= 1.0) {
                armed = false;
            } else {
                tail_[c] = mag / (1.0 - ratio);
                if (tail_[c] > budget) tail_ok = false;
            }
        }
        small_run_ = all_small ? small_run_ + 1 : 0;
        return small_run_ >= 3 && armed && tail_ok;
    }

    const std::array<double, N>& sums() const { return sum_; }
    const std::array<double, N>& tails() const { return tail_; }
    void clear_tails() { tail_.fill(0.0); }

private:
    double rel_tol_;
    std::array<double, N> sum_{};
    std::array<double, N> comp_{};
    std::array<double, N> abs_sum_{};
    std::array<double, N> prev_{};
    std::array<double, N> tail_{};
    int small_run_ = 0;
};

// Sums term(i) for i >= 0 walking outward from `center`, right side first.
template <int N, class TermFn>
SumOutcome<N> sum_mode_centered(std::int64_t center, const SeriesConfig& cfg, TermFn&& term) {
    SumOutcome<N> out;
    Accumulator<N> right(cfg.rel_tol);
    std::int64_t used = 0;

    bool right_stopped = false;
    for (std::int64_t i = center;; ++i) {
        if (++used > cfg.max_terms)
            throw truncation_failure("series did not converge within max_terms (right tail)");
        if (right.add(term(i))) {
            right_stopped = true;
            break;
        }
    }

    Accumulator<N> left(cfg.rel_tol);
    bool left_stopped = false;
    for (std::int64_t i = center - 1; i >= 0; --i) {
        if (++used > cfg.max_terms)
            throw truncation_failure("series did not converge within max_terms (left tail)");
        if (left.add(term(i))) {
            left_stopped = true;
            break;
        }
    }

    for (int c = 0; c < N; ++c) {
        out.sums[c] = right.sums()[c] + left.sums()[c];
        out.tails[c] = (right_stopped ? right.tails()[c] : 0.0) +
                       (left_stopped ? left.tails()[c] : 0.0);
    }
    out.terms = used;
    return out;
}

// Sums term(i) for i = start, start+1, ...
template <int N, class TermFn>
SumOutcome<N> sum_ascending(std::int64_t start, const SeriesConfig& cfg, TermFn&& term) {
    SumOutcome<N> out;
    Accumulator<N> acc(cfg.rel_tol);
    std::int64_t used = 0;
    for (std::int64_t i = start;; ++i) {
        if (++used > cfg.max_terms)
            throw truncation_failure("series did not converge within max_terms");
        if (acc.add(term(i))) break;
    }
    out.sums = acc.sums();
    out.tails = acc.tails();
    out.terms = used;
    return out;
}

}  // namespace pentropy::detail

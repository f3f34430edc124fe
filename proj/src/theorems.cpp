#include "picod/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace picod {

namespace {

void check_consecutive_range(int m, int t, int smin, int smax) {
    if (t < 1 || m < 1) throw std::invalid_argument("bad m or t");
    if (!(0 <= smin && smin <= smax && smax <= m - t)) {
        throw std::invalid_argument("need 0 <= smin <= smax <= m-t");
    }
    if (smin == 0 && smax == 0) {
        throw std::invalid_argument("S = {0} has no solvable instance");
    }
}

} // namespace

Rational optimal_length_consecutive(int m, int t, int smin, int smax) {
    check_consecutive_range(m, t, smin, smax);
    if (smin == smax && smax == m - t) {
        const std::int64_t n = binomial(m, m - t);
        if (n < 2) throw std::domain_error("single-user multicast group");
        return {static_cast<std::int64_t>(t) * n, n - 1};
    }
    return {std::min(smax + t, m - smin)};
}

Rational optimal_length_complement(int m, int t, int smin, int smax) {
    if (t < 1 || m < 1) throw std::invalid_argument("bad m or t");
    if (!(0 < smin && smin <= smax && smax < m - t)) {
        throw std::invalid_argument("complement excision needs 0 < smin <= smax < m-t");
    }
    const int s_count = (m - t + 1) - (smax - smin + 1);
    return {std::min(m, s_count + 2 * t - 2)};
}

Rational fano_lower_bound(int m, int t, int s) {
    if (t < 1 || m < 1) throw std::invalid_argument("bad m or t");
    if (s != m - t) {
        throw std::invalid_argument("counting bound applies to the single size s = m-t");
    }
    const std::int64_t n = binomial(m, s);
    if (n < 2) throw std::domain_error("counting bound needs at least two users");
    return {static_cast<std::int64_t>(t) * n, n - 1};
}

Rational centralized_length(const ProblemInstance& inst) {
    switch (inst.kind) {
        case SKind::consecutive:
            if (inst.smin == inst.smax && inst.smax == inst.m - inst.t) {
                return {inst.t};
            }
            return {std::min(inst.smax + inst.t, inst.m - inst.smin)};
        case SKind::complement_consecutive:
            return optimal_length_complement(inst.m, inst.t, inst.smin, inst.smax);
        case SKind::other:
            break;
    }
    throw std::domain_error("no closed form in scope for this size set");
}

LengthBound optimal_length(const ProblemInstance& inst) {
    LengthBound out;
    switch (inst.kind) {
        case SKind::consecutive:
            out.value = optimal_length_consecutive(inst.m, inst.t, inst.smin, inst.smax);
            out.source = (inst.smin == inst.smax && inst.smax == inst.m - inst.t)
                             ? "consecutive-fractional"
                             : "consecutive-minimum";
            break;
        case SKind::complement_consecutive:
            out.value = optimal_length_complement(inst.m, inst.t, inst.smin, inst.smax);
            out.source = "complement-minimum";
            break;
        case SKind::other:
            throw std::domain_error("no closed form in scope for this size set");
    }
    // Every valid decentralized code is strictly longer than t (the
    // transmitter of the first row gains nothing from it). A closed-form
    // value at or below that floor signals a formula applied out of range.
    out.below_floor = out.value <= Rational{inst.t};
    return out;
}

} // namespace picod

#pragma once

#include <string>

#include "picod/model.hpp"
#include "picod/rational.hpp"

namespace picod {

/// Optimal normalized length of a decentralized code for consecutive
/// S = [smin..smax]:
///   - smin = smax = m-t (every user one short of full knowledge): the
///     fractional value t*C(m,m-t) / (C(m,m-t)-1)
///   - otherwise: min(smax+t, m-smin)
/// Pre: 0 <= smin <= smax <= m-t, t >= 1, and not S = {0}.
Rational optimal_length_consecutive(int m, int t, int smin, int smax);

/// Optimal normalized length for complement-consecutive S, identified by the
/// excised interval: min(m, |S| + 2t - 2) with |S| = (m-t+1) - (smax-smin+1).
/// Pre: 0 < smin <= smax < m-t.
Rational optimal_length_complement(int m, int t, int smin, int smax);

/// Counting lower bound for the single-size case s = m-t: a transmitting
/// user learns nothing from its own rows, so with n = C(m, s) users,
/// any decentralized code needs length >= t*n/(n-1). Pre: n >= 2
/// (std::domain_error otherwise).
Rational fano_lower_bound(int m, int t, int s);

/// Optimal length with a centralized sender for the same instance, for
/// side-by-side reporting: consecutive -> min(smax+t, m-smin) except t when
/// smin = smax = m-t; complement -> same value as the decentralized optimum.
Rational centralized_length(const ProblemInstance& inst);

/// Closed-form decentralized optimum with provenance for reports.
struct LengthBound {
    Rational value;
    std::string source;     // which closed-form case produced the value
    bool below_floor;       // true if value <= t, which no valid code attains;
                            // flags the formula for manual review
};

/// Dispatch on instance kind. Throws std::domain_error for kind == other
/// (no closed form in scope).
LengthBound optimal_length(const ProblemInstance& inst);

} // namespace picod

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "picod/gf.hpp"
#include "picod/linalg.hpp"
#include "picod/model.hpp"

namespace picod {

/// Cyclic-window support pattern for the sparse-MDS construction. Cell (i,j)
/// is allowed to be nonzero iff (i+j) mod cols < cols - t, which gives every
/// row exactly t zeros and the rows pairwise distinct zero sets.
struct ZeroPattern {
    int rows = 0;
    int cols = 0;
    int zeros_per_row = 0;
    std::vector<std::uint8_t> allowed; // row-major, 1 = may be nonzero

    bool one_at(int i, int j) const {
        return allowed[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(j)] != 0;
    }
    std::vector<int> row_support(int i) const;
    std::vector<int> row_zero_set(int i) const;
};

/// Pattern for consecutive S = [smin..smax]: (m-smin) x (smax+t), each row
/// with smax allowed entries. Pre: t < m-smin < smax+t.
ZeroPattern build_zero_pattern(int m, int t, int smin, int smax);

/// Existence test for an MDS-compatible completion of the pattern: for every
/// nonempty row subset P, |P| + |common zero columns of P| <= ell must hold.
/// On failure, `violating_rows` is the first offending subset (subsets
/// scanned in increasing bitmask order).
struct MdsConditionResult {
    bool holds = false;
    std::vector<int> violating_rows;
};
MdsConditionResult check_mds_condition(const ZeroPattern& z, int ell);

/// Retry budget for randomized sampling; PICOD_RETRY_BUDGET overrides the
/// default of 1000. Throws std::invalid_argument on an unparsable value.
int retry_budget_from_env();

/// Samples a matrix that is zero exactly off the pattern and uniformly
/// random nonzero on it, resampling until every ell x ell column submatrix is
/// invertible (which makes every p-column submatrix, p <= ell, full rank).
/// Pre: z.rows == ell, the MDS condition holds, and the field has at least
/// z.rows + z.cols - 1 elements. Throws ConstructionError when the budget
/// runs out.
Matrix sample_sparse_mds(const ZeroPattern& z, int ell, const Field& field,
                         std::uint64_t seed, int retry_budget = retry_budget_from_env());

/// Transmission of messages 0..smax+t-1 in the clear, one per row, each row
/// sent by the first enumerated user that holds the message. Valid for
/// consecutive S with smax+t <= m-smin (every user then sees at least t
/// unknown messages among the sent ones).
DecentralizedCode scheme_uncoded(const ProblemInstance& inst, const Field& field);

/// Sparse-MDS scheme for consecutive S with t < m-smin < smax+t: generator
/// [C | 0] with C sampled on the cyclic-window pattern; row i is sent by the
/// size-smax user whose side information is exactly the row support.
/// Length m-smin.
DecentralizedCode scheme_sparse_mds(const ProblemInstance& inst, const Field& field,
                                    std::uint64_t seed);

/// Message-split scheme for the single size s = m-t. Each message is split
/// into beta = (n-1)/gcd(n-1, m-s) sub-messages and user i sends
/// l' = (m-s)*beta/(n-1) rows supported on its own side information,
/// resampled until every user's square decoding system (all other rows,
/// restricted to its unknown sub-columns) is invertible.
/// Length t*n/(n-1) with n = C(m, m-t).
DecentralizedCode scheme_split_vector(const ProblemInstance& inst, const Field& field,
                                      std::uint64_t seed);

/// Scheme for complement-consecutive S (excised interval [smin..smax]):
///  - if m <= |S|+2t-2: all m messages in the clear (static);
///  - else if smax+1 == m-t: messages 0..smin+t-2 in the clear, then a user
///    that is already satisfied (and hence, sequentially, knows everything)
///    sends t rows whose t x m block has every t-column submatrix invertible
///    (sequential);
///  - else: the uncoded prefix for the small-side users concatenated with a
///    sparse-MDS block serving the sizes in [smax+1, m-t] (static).
/// Length min(m, |S|+2t-2) in all three branches.
DecentralizedCode scheme_complement(const ProblemInstance& inst, const Field& field,
                                    std::uint64_t seed);

/// Smallest power-of-two field that covers the sampling requirements of the
/// scheme dispatched for this instance (at least 4):
///  - consecutive: m-smin+smax+t-1
///  - complement: max(m+t-1, 2m-smax-2), covering both inner samplers
FieldSpec default_field_spec(const ProblemInstance& inst);

/// Dispatches on kind and regime. Throws std::domain_error for kind==other.
DecentralizedCode synthesize(const ProblemInstance& inst,
                             const std::optional<FieldSpec>& field_override,
                             std::uint64_t seed);

} // namespace picod

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picod/errors.hpp"
#include "picod/gf.hpp"
#include "picod/model.hpp"
#include "picod/rational.hpp"

namespace picod {

/// One exhaustive-search question: does a valid decentralized code with
/// exactly `total_subslots` generator rows exist for this instance, message
/// split `beta`, and row entries drawn from `field`?
struct SearchSpace {
    ProblemInstance instance;
    FieldSpec field;
    int beta = 1;
    int total_subslots = 0;
    KnowledgeMode mode = KnowledgeMode::static_side_info;
};

struct SearchConfig {
    /// Refuse (SearchCeilingError) when the pre-search leaf estimate exceeds
    /// this. A runtime node counter aborts at four times the ceiling as a
    /// safety net against estimates that undercount interior nodes.
    std::uint64_t ceiling = 100'000'000;

    /// Prune by message relabeling: a complete-S instance is invariant under
    /// any permutation of the m messages, so the search may force its first
    /// (lowest-indexed) row candidate to be minimal within its relabeling
    /// orbit. Applied in static mode for m <= 6; ignored otherwise.
    bool prune_symmetry = true;

    /// Enumerate strictly increasing candidate sequences, skipping repeated
    /// rows. Sound only when no valid code with fewer rows exists (a repeat
    /// could then be dropped, contradicting minimality), which the ascending
    /// protocol in certified_minimum establishes level by level. Standalone
    /// existence queries should leave this false: exists(L) stays monotone in
    /// L only because a shorter witness can be padded with a repeated row.
    /// Static mode only; sequential search always allows repeats.
    bool reduced = false;
};

struct SearchOutcome {
    bool found = false;
    std::optional<DecentralizedCode> witness; // passes validate(); set iff found
    std::uint64_t nodes_visited = 0;          // candidate placements tried
    std::uint64_t leaves_evaluated = 0;       // full-length assignments checked
    double estimated_size = 0.0;              // pre-search leaf estimate
};

/// Pre-search leaf estimate for the exact enumeration exists_valid_code
/// would run (same symmetry and repeat handling). This is what the ceiling
/// is compared against.
double estimate_search_size(const SearchSpace& space, const SearchConfig& config = {});

/// Exhaustive search over all candidate generator rows. A candidate is a
/// (transmitter, nonzero row) pair where the row is supported on sub-columns
/// of messages the transmitter knows. In static mode row order is
/// irrelevant, so the search enumerates non-decreasing candidate sequences;
/// in sequential mode it enumerates ordered sequences and lets a
/// transmitter's support grow with what it can already decode. GF(2) spaces
/// with m*beta <= 64 run on a bit-packed fast path; everything else uses
/// generic field arithmetic.
///
/// Throws SearchCeilingError when the estimate exceeds config.ceiling (or
/// the runtime safety net trips), std::invalid_argument on malformed input.
SearchOutcome exists_valid_code(const SearchSpace& space, const SearchConfig& config = {});

/// Analytic per-beta lower bound on the subslot count of any valid
/// decentralized code: a row restricted to its own transmitter's unknown
/// sub-columns is zero, so each of the n users needs t*beta rank from rows
/// sent by others. Summing L - L_u >= t*beta over all users, with
/// sum(L_u) = L, gives (n-1) * L >= n * t * beta. Holds for every size set,
/// every field, and both knowledge modes.
int counting_floor_subslots(const ProblemInstance& inst, int beta);

/// Search record for one message-split value.
struct BetaLeg {
    int beta = 1;
    int counting_floor = 0; // counting_floor_subslots(inst, beta)
    int unexcluded = 0;     // least subslot count the searches did not rule out
    std::optional<int> least;  // certified minimum subslots; set iff exact
    std::optional<int> upper;  // witness-backed upper bound when not exact
    bool exact = false;
    std::optional<DecentralizedCode> witness; // for least or upper
    std::uint64_t nodes = 0;                  // total over all levels searched
    std::string note;                         // why a leg stopped early, if it did
};

struct CertifiedMinimum {
    Rational value;               // min over legs of (least or upper) / beta
    bool exact = false;           // value is the true minimum over beta <= beta_max
    bool fully_certified = false; // ... over every beta, via the counting floor
    std::vector<BetaLeg> legs;
};

/// Optimal normalized length by exhaustive search, one ascending sweep per
/// beta in [1, beta_max]. Each sweep starts at the counting floor (levels
/// below it are excluded analytically) and walks upward with reduced
/// searches, so the first witness found is a certified per-beta minimum. A
/// sweep that hits the ceiling reports a witness-backed upper bound instead:
/// the m unit rows for beta = 1, or the beta-fold row split of the beta = 1
/// bound otherwise.
///
/// `exact` holds when every leg is certified or floored at or above the
/// value; `fully_certified` additionally needs value == t*n/(n-1), the
/// infimum of the counting floor over all beta, which then excludes splits
/// beyond beta_max as well.
CertifiedMinimum certified_minimum(const ProblemInstance& inst, const FieldSpec& field,
                                   int beta_max,
                                   KnowledgeMode mode = KnowledgeMode::static_side_info,
                                   const SearchConfig& config = {});

} // namespace picod

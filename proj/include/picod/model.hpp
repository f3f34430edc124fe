#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picod/linalg.hpp"
#include "picod/rational.hpp"

namespace picod {

/// Shape of the size set S of a complete-S instance.
///  - consecutive: S = [smin..smax]
///  - complement_consecutive: S = [0..m-t] minus an excised interval
///    [smin..smax] with 0 < smin <= smax < m-t (so 0 and m-t are in S)
///  - other: neither; no closed-form length is in scope for it
enum class SKind { consecutive, complement_consecutive, other };

std::string to_string(SKind kind);

/// Complete-S pliable instance: m messages, one user per subset of {0..m-1}
/// whose size lies in S, and every user wants any t messages it does not
/// already hold. All indices are 0-based.
///
/// For kind == complement_consecutive, smin/smax describe the excised
/// interval, not the span of S.
struct ProblemInstance {
    int m = 0;
    int t = 0;
    std::vector<int> sizes; // sorted, distinct
    SKind kind = SKind::other;
    int smin = -1;
    int smax = -1;

    /// Validates and classifies an arbitrary size set.
    /// Throws std::invalid_argument if S is empty, S = {0} (unsolvable:
    /// the lone user can learn nothing), any size is outside [0, m-t],
    /// t < 1, or m < 1.
    static ProblemInstance complete(int m, int t, std::vector<int> s);

    static ProblemInstance consecutive(int m, int t, int smin, int smax);

    /// S = [0..m-t] with [smin..smax] removed; bounds checked as above.
    static ProblemInstance complement(int m, int t, int smin, int smax);

    std::int64_t user_count() const;
};

/// One user: id is its position in enumerate_users order, side_info the
/// sorted message set it starts with.
struct User {
    int id;
    std::vector<int> side_info;
};

/// All users ordered by (side-info size, then subset lexicographically).
std::vector<User> enumerate_users(const ProblemInstance& inst);

/// How a transmitting user's row support is constrained:
///  - static_side_info: rows touch only messages in the transmitter's A_j
///  - sequential: rows may also touch messages the transmitter can already
///    decode from the rows sent before it
enum class KnowledgeMode { static_side_info, sequential };

std::string to_string(KnowledgeMode mode);

/// Transmitter assignment, one user id per generator row, in send order.
struct Schedule {
    std::vector<int> transmitter;
    KnowledgeMode mode = KnowledgeMode::static_side_info;
};

/// A decentralized linear code. Each message is split into beta sub-messages;
/// generator column j*beta+k carries sub-message k of message j, so the
/// generator is (total sub-slots) x (m*beta). Normalized length is
/// sub-slots / beta, kept exact.
struct DecentralizedCode {
    ProblemInstance instance;
    int beta = 1;
    Matrix generator;
    Schedule schedule;

    Rational length() const { return {generator.rows(), beta}; }
};

std::int64_t binomial(int n, int k);

} // namespace picod

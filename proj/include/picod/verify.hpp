#pragma once

#include <set>
#include <vector>

#include "picod/model.hpp"
#include "picod/rational.hpp"

namespace picod {

/// Messages user `user` can decode from the whole code: restrict the
/// generator to the user's unknown sub-columns; message d is decodable iff
/// all beta unit rows of its sub-columns lie in the restricted row space.
std::set<int> decodable_messages(const DecentralizedCode& code, const User& user);

/// Same, but using only generator rows before `row_limit`. This is the
/// knowledge a transmitter has accumulated in sequential mode.
std::set<int> decodable_messages_prefix(const DecentralizedCode& code, const User& user,
                                        int row_limit);

struct ScheduleViolation {
    int row;
    int transmitter;
    int message; // touched by the row but unknown to the transmitter
};

struct UserReport {
    int user;
    std::vector<int> decodable;
    bool satisfied;
    std::vector<int> desired; // lexicographically smallest t decodable, if satisfied
};

struct VerificationReport {
    bool valid = false;
    bool schedule_ok = false;
    std::vector<ScheduleViolation> violations;
    std::vector<UserReport> per_user;
    Rational length;
};

/// Full check of a code: every row's support must stay inside its
/// transmitter's knowledge (side information, plus previously decodable
/// messages in sequential mode), and every user must decode at least t
/// messages. Structural defects (wrong generator width, schedule length
/// mismatch, transmitter ids out of range, beta < 1) are usage errors and
/// throw std::invalid_argument rather than producing a verdict.
VerificationReport validate(const DecentralizedCode& code);

} // namespace picod

#include "picod/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "picod/linalg.hpp"

namespace picod {

namespace {

// Decodable messages for `user` from generator rows [0, row_limit).
std::set<int> decodable_from(const DecentralizedCode& code, const User& user, int row_limit) {
    const int m = code.instance.m;
    const int beta = code.beta;

    std::vector<int> unknown_msgs;
    std::vector<int> cols;
    for (int msg = 0; msg < m; ++msg) {
        if (std::binary_search(user.side_info.begin(), user.side_info.end(), msg)) continue;
        unknown_msgs.push_back(msg);
        for (int k = 0; k < beta; ++k) cols.push_back(msg * beta + k);
    }
    if (unknown_msgs.empty()) return {};

    std::vector<int> rows(row_limit);
    std::iota(rows.begin(), rows.end(), 0);
    Matrix restricted = code.generator.row_submatrix(rows).column_submatrix(cols);
    std::set<int> unit_cols = solve_for_unit_rows(restricted);

    std::set<int> decodable;
    for (std::size_t i = 0; i < unknown_msgs.size(); ++i) {
        bool all = true;
        for (int k = 0; k < beta; ++k) {
            if (!unit_cols.count(static_cast<int>(i) * beta + k)) {
                all = false;
                break;
            }
        }
        if (all) decodable.insert(unknown_msgs[i]);
    }
    return decodable;
}

} // namespace

std::set<int> decodable_messages(const DecentralizedCode& code, const User& user) {
    return decodable_from(code, user, code.generator.rows());
}

std::set<int> decodable_messages_prefix(const DecentralizedCode& code, const User& user,
                                        int row_limit) {
    if (row_limit < 0 || row_limit > code.generator.rows())
        throw std::invalid_argument("row_limit out of range");
    return decodable_from(code, user, row_limit);
}

VerificationReport validate(const DecentralizedCode& code) {
    const ProblemInstance& inst = code.instance;
    const int m = inst.m;
    const int beta = code.beta;
    const Matrix& g = code.generator;

    if (beta < 1) throw std::invalid_argument("beta must be at least 1");
    if (g.cols() != m * beta)
        throw std::invalid_argument("generator must have m*beta columns");
    if (static_cast<int>(code.schedule.transmitter.size()) != g.rows())
        throw std::invalid_argument("schedule must assign a transmitter to every row");

    std::vector<User> users = enumerate_users(inst);
    for (int u : code.schedule.transmitter)
        if (u < 0 || u >= static_cast<int>(users.size()))
            throw std::invalid_argument("schedule transmitter id out of range");

    VerificationReport report;
    report.length = code.length();

    // Schedule feasibility: every nonzero of row r must sit in a message the
    // transmitter knows at the time of sending.
    report.schedule_ok = true;
    for (int r = 0; r < g.rows(); ++r) {
        const User& tx = users[code.schedule.transmitter[r]];
        std::set<int> known(tx.side_info.begin(), tx.side_info.end());
        if (code.schedule.mode == KnowledgeMode::sequential) {
            std::set<int> decoded = decodable_from(code, tx, r);
            known.insert(decoded.begin(), decoded.end());
        }
        for (int c = 0; c < g.cols(); ++c) {
            if (g.at(r, c) == 0) continue;
            int msg = c / beta;
            if (!known.count(msg)) {
                report.schedule_ok = false;
                report.violations.push_back({r, tx.id, msg});
                break; // one witness per row is enough
            }
        }
    }

    bool all_satisfied = true;
    for (const User& u : users) {
        UserReport ur;
        ur.user = u.id;
        std::set<int> dec = decodable_from(code, u, g.rows());
        ur.decodable.assign(dec.begin(), dec.end());
        ur.satisfied = static_cast<int>(ur.decodable.size()) >= inst.t;
        if (ur.satisfied)
            ur.desired.assign(ur.decodable.begin(), ur.decodable.begin() + inst.t);
        all_satisfied = all_satisfied && ur.satisfied;
        report.per_user.push_back(std::move(ur));
    }

    report.valid = report.schedule_ok && all_satisfied;
    return report;
}

} // namespace picod

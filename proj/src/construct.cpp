#include "picod/construct.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "picod/errors.hpp"

namespace picod {

namespace {

/// Deterministic entry sampler. Draws use plain modulo on mt19937_64 output
/// so the stream does not depend on the standard library's distribution
/// implementation; the tiny modulo bias is irrelevant here.
struct Sampler {
    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    std::uint16_t nonzero(const Field& f) {
        return static_cast<std::uint16_t>(1 + rng() % (f.size() - 1));
    }
    std::uint16_t any(const Field& f) {
        return static_cast<std::uint16_t>(rng() % f.size());
    }

    std::mt19937_64 rng;
};

int first_user_containing(const std::vector<User>& users, int message) {
    for (const User& u : users) {
        if (std::binary_search(u.side_info.begin(), u.side_info.end(), message)) {
            return u.id;
        }
    }
    throw std::domain_error("no user holds message " + std::to_string(message));
}

int first_user_covering(const std::vector<User>& users, const std::vector<int>& support,
                        int size) {
    for (const User& u : users) {
        if (static_cast<int>(u.side_info.size()) != size) continue;
        if (std::includes(u.side_info.begin(), u.side_info.end(), support.begin(),
                          support.end())) {
            return u.id;
        }
    }
    throw std::domain_error("no user of the required size covers the row support");
}

Matrix sample_sparse_mds_with(const ZeroPattern& z, int ell, const Field& field,
                              Sampler& sampler, int retry_budget);

} // namespace

std::vector<int> ZeroPattern::row_support(int i) const {
    std::vector<int> out;
    for (int j = 0; j < cols; ++j) {
        if (one_at(i, j)) out.push_back(j);
    }
    return out;
}

std::vector<int> ZeroPattern::row_zero_set(int i) const {
    std::vector<int> out;
    for (int j = 0; j < cols; ++j) {
        if (!one_at(i, j)) out.push_back(j);
    }
    return out;
}

ZeroPattern build_zero_pattern(int m, int t, int smin, int smax) {
    if (!(t >= 1 && t < m - smin && m - smin < smax + t)) {
        throw std::invalid_argument("pattern needs t < m-smin < smax+t");
    }
    ZeroPattern z;
    z.rows = m - smin;
    z.cols = smax + t;
    z.zeros_per_row = t;
    z.allowed.assign(static_cast<std::size_t>(z.rows) * static_cast<std::size_t>(z.cols), 0);
    for (int i = 0; i < z.rows; ++i) {
        for (int j = 0; j < z.cols; ++j) {
            if ((i + j) % z.cols <= smax - 1) {
                z.allowed[static_cast<std::size_t>(i) * static_cast<std::size_t>(z.cols) +
                          static_cast<std::size_t>(j)] = 1;
            }
        }
    }
    return z;
}

MdsConditionResult check_mds_condition(const ZeroPattern& z, int ell) {
    if (z.rows < 1 || z.rows > 30) throw std::invalid_argument("pattern row count out of range");
    std::vector<std::uint32_t> zero_mask(static_cast<std::size_t>(z.rows), 0);
    for (int i = 0; i < z.rows; ++i) {
        for (const int j : z.row_zero_set(i)) {
            zero_mask[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
        }
    }
    for (std::uint32_t p = 1; p < (std::uint32_t{1} << z.rows); ++p) {
        std::uint32_t common = ~std::uint32_t{0};
        for (int i = 0; i < z.rows; ++i) {
            if (p & (std::uint32_t{1} << i)) common &= zero_mask[static_cast<std::size_t>(i)];
        }
        if (std::popcount(p) + std::popcount(common) > ell) {
            MdsConditionResult r;
            r.holds = false;
            for (int i = 0; i < z.rows; ++i) {
                if (p & (std::uint32_t{1} << i)) r.violating_rows.push_back(i);
            }
            return r;
        }
    }
    return {true, {}};
}

int retry_budget_from_env() {
    const char* raw = std::getenv("PICOD_RETRY_BUDGET");
    if (raw == nullptr || *raw == '\0') return 1000;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) {
        throw std::invalid_argument("PICOD_RETRY_BUDGET must be a positive integer");
    }
    return static_cast<int>(v);
}

namespace {

Matrix sample_sparse_mds_with(const ZeroPattern& z, int ell, const Field& field,
                              Sampler& sampler, int retry_budget) {
    if (ell != z.rows) throw std::invalid_argument("ell must equal the pattern row count");
    if (z.cols < ell) throw std::invalid_argument("pattern needs at least ell columns");
    const MdsConditionResult cond = check_mds_condition(z, ell);
    if (!cond.holds) {
        throw std::invalid_argument("zero pattern admits no MDS completion");
    }
    if (field.size() < static_cast<std::uint32_t>(z.rows + z.cols - 1)) {
        throw std::invalid_argument("field too small for the sparse-MDS sampler; need at least " +
                                    std::to_string(z.rows + z.cols - 1) + " elements");
    }
    for (int attempt = 1; attempt <= retry_budget; ++attempt) {
        Matrix c(z.rows, z.cols, field);
        for (int i = 0; i < z.rows; ++i) {
            for (int j = 0; j < z.cols; ++j) {
                if (z.one_at(i, j)) c.set(i, j, sampler.nonzero(field));
            }
        }
        if (all_square_submatrices_full_rank(c, ell)) return c;
    }
    throw ConstructionError("sparse-MDS sampling exhausted its retry budget of " +
                                std::to_string(retry_budget),
                            retry_budget);
}

} // namespace

Matrix sample_sparse_mds(const ZeroPattern& z, int ell, const Field& field,
                         std::uint64_t seed, int retry_budget) {
    Sampler sampler(seed);
    return sample_sparse_mds_with(z, ell, field, sampler, retry_budget);
}

DecentralizedCode scheme_uncoded(const ProblemInstance& inst, const Field& field) {
    if (inst.kind != SKind::consecutive) {
        throw std::invalid_argument("uncoded scheme needs consecutive S");
    }
    const int rows = inst.smax + inst.t;
    if (rows > inst.m - inst.smin) {
        throw std::invalid_argument("uncoded scheme needs smax+t <= m-smin");
    }
    const std::vector<User> users = enumerate_users(inst);
    DecentralizedCode code{inst, 1, Matrix(rows, inst.m, field),
                           Schedule{{}, KnowledgeMode::static_side_info}};
    for (int j = 0; j < rows; ++j) {
        code.generator.set(j, j, 1);
        code.schedule.transmitter.push_back(first_user_containing(users, j));
    }
    return code;
}

DecentralizedCode scheme_sparse_mds(const ProblemInstance& inst, const Field& field,
                                    std::uint64_t seed) {
    if (inst.kind != SKind::consecutive) {
        throw std::invalid_argument("sparse-MDS scheme needs consecutive S");
    }
    const int ell = inst.m - inst.smin;
    if (!(inst.t < ell && ell < inst.smax + inst.t)) {
        throw std::invalid_argument("sparse-MDS scheme needs t < m-smin < smax+t");
    }
    const ZeroPattern z = build_zero_pattern(inst.m, inst.t, inst.smin, inst.smax);
    const Matrix c = sample_sparse_mds(z, ell, field, seed);

    const std::vector<User> users = enumerate_users(inst);
    DecentralizedCode code{inst, 1, Matrix(ell, inst.m, field),
                           Schedule{{}, KnowledgeMode::static_side_info}};
    for (int i = 0; i < ell; ++i) {
        for (int j = 0; j < z.cols; ++j) code.generator.set(i, j, c.at(i, j));
        // A row with support of size smax is sent by the user holding
        // exactly those messages; it exists because smax is in S.
        code.schedule.transmitter.push_back(
            first_user_covering(users, z.row_support(i), inst.smax));
    }
    return code;
}

DecentralizedCode scheme_split_vector(const ProblemInstance& inst, const Field& field,
                                      std::uint64_t seed) {
    if (inst.kind != SKind::consecutive || inst.smin != inst.smax ||
        inst.smax != inst.m - inst.t) {
        throw std::invalid_argument("message-split scheme needs the single size s = m-t");
    }
    const int s = inst.smin;
    const std::int64_t n = inst.user_count();
    if (n < 2) throw std::domain_error("message-split scheme needs at least two users");
    const std::int64_t g = std::gcd(n - 1, static_cast<std::int64_t>(inst.m - s));
    const int beta = static_cast<int>((n - 1) / g);
    const int lp = static_cast<int>(static_cast<std::int64_t>(inst.m - s) * beta / (n - 1));
    const int total_rows = static_cast<int>(n) * lp;
    const int unknown_width = (inst.m - s) * beta; // == (n-1)*lp per construction

    const std::vector<User> users = enumerate_users(inst);
    const int budget = retry_budget_from_env();
    Sampler sampler(seed);

    // Unknown sub-columns per user, precomputed once.
    std::vector<std::vector<int>> unknown_cols(users.size());
    for (const User& u : users) {
        for (int msg = 0; msg < inst.m; ++msg) {
            if (std::binary_search(u.side_info.begin(), u.side_info.end(), msg)) continue;
            for (int k = 0; k < beta; ++k) {
                unknown_cols[static_cast<std::size_t>(u.id)].push_back(msg * beta + k);
            }
        }
    }

    for (int attempt = 1; attempt <= budget; ++attempt) {
        Matrix gmat(total_rows, inst.m * beta, field);
        for (const User& u : users) {
            for (int r = 0; r < lp; ++r) {
                for (const int msg : u.side_info) {
                    for (int k = 0; k < beta; ++k) {
                        gmat.set(u.id * lp + r, msg * beta + k, sampler.any(field));
                    }
                }
            }
        }
        bool ok = true;
        for (const User& u : users) {
            std::vector<int> other_rows;
            other_rows.reserve(static_cast<std::size_t>(total_rows - lp));
            for (int r = 0; r < total_rows; ++r) {
                if (r / lp != u.id) other_rows.push_back(r);
            }
            const Matrix sys = gmat.row_submatrix(other_rows)
                                   .column_submatrix(unknown_cols[static_cast<std::size_t>(u.id)]);
            if (rank(sys) != unknown_width) {
                ok = false;
                break;
            }
        }
        if (ok) {
            DecentralizedCode code{inst, beta, std::move(gmat),
                                   Schedule{{}, KnowledgeMode::static_side_info}};
            for (int r = 0; r < total_rows; ++r) {
                code.schedule.transmitter.push_back(r / lp);
            }
            return code;
        }
    }
    throw ConstructionError("message-split sampling exhausted its retry budget of " +
                                std::to_string(budget),
                            budget);
}

DecentralizedCode scheme_complement(const ProblemInstance& inst, const Field& field,
                                    std::uint64_t seed) {
    if (inst.kind != SKind::complement_consecutive) {
        throw std::invalid_argument("complement scheme needs complement-consecutive S");
    }
    const int m = inst.m;
    const int t = inst.t;
    const int s_count = static_cast<int>(inst.sizes.size());
    const int target = std::min(m, s_count + 2 * t - 2);
    const std::vector<User> users = enumerate_users(inst);

    if (target == m && m <= s_count + 2 * t - 2) {
        // Sending everything in the clear already meets the optimum.
        DecentralizedCode code{inst, 1, Matrix(m, m, field),
                               Schedule{{}, KnowledgeMode::static_side_info}};
        for (int j = 0; j < m; ++j) {
            code.generator.set(j, j, 1);
            code.schedule.transmitter.push_back(first_user_containing(users, j));
        }
        return code;
    }

    const int uncoded_rows = inst.smin - 1 + t;
    Sampler sampler(seed);

    if (inst.smax + 1 == m - t) {
        // Two-step branch. After the clear prefix, every user with fewer
        // than smin messages is satisfied, and the first user missing only
        // prefix messages has (sequentially) decoded everything, so it can
        // send t rows mixing all m messages.
        int star = -1;
        for (const User& u : users) {
            if (static_cast<int>(u.side_info.size()) != m - t) continue;
            bool missing_in_prefix = true;
            int cursor = 0;
            for (int msg = 0; msg < m; ++msg) {
                if (cursor < static_cast<int>(u.side_info.size()) &&
                    u.side_info[static_cast<std::size_t>(cursor)] == msg) {
                    ++cursor;
                    continue;
                }
                if (msg >= uncoded_rows) {
                    missing_in_prefix = false;
                    break;
                }
            }
            if (missing_in_prefix) {
                star = u.id;
                break;
            }
        }
        if (star < 0) throw std::domain_error("no satisfied user available for step two");

        const int budget = retry_budget_from_env();
        for (int attempt = 1; attempt <= budget; ++attempt) {
            Matrix dense(t, m, field);
            for (int i = 0; i < t; ++i) {
                for (int j = 0; j < m; ++j) dense.set(i, j, sampler.nonzero(field));
            }
            if (!all_square_submatrices_full_rank(dense, t)) continue;

            DecentralizedCode code{inst, 1, Matrix(uncoded_rows + t, m, field),
                                   Schedule{{}, KnowledgeMode::sequential}};
            for (int j = 0; j < uncoded_rows; ++j) {
                code.generator.set(j, j, 1);
                code.schedule.transmitter.push_back(first_user_containing(users, j));
            }
            for (int i = 0; i < t; ++i) {
                for (int j = 0; j < m; ++j) {
                    code.generator.set(uncoded_rows + i, j, dense.at(i, j));
                }
                code.schedule.transmitter.push_back(star);
            }
            return code;
        }
        throw ConstructionError("dense-block sampling exhausted its retry budget of " +
                                    std::to_string(budget),
                                budget);
    }

    // Concatenation branch: clear prefix plus a sparse-MDS block for the
    // users with sizes in [smax+1, m-t]. Their sub-pattern spans all m
    // columns, so the stacked generator needs no zero padding.
    const ZeroPattern z = build_zero_pattern(m, t, inst.smax + 1, m - t);
    const int ell = m - inst.smax - 1;
    const int budget = retry_budget_from_env();
    const Matrix c = sample_sparse_mds_with(z, ell, field, sampler, budget);

    DecentralizedCode code{inst, 1, Matrix(uncoded_rows + ell, m, field),
                           Schedule{{}, KnowledgeMode::static_side_info}};
    for (int j = 0; j < uncoded_rows; ++j) {
        code.generator.set(j, j, 1);
        code.schedule.transmitter.push_back(first_user_containing(users, j));
    }
    for (int i = 0; i < ell; ++i) {
        for (int j = 0; j < m; ++j) code.generator.set(uncoded_rows + i, j, c.at(i, j));
        code.schedule.transmitter.push_back(
            first_user_covering(users, z.row_support(i), m - t));
    }
    return code;
}

FieldSpec default_field_spec(const ProblemInstance& inst) {
    int bound = 4;
    switch (inst.kind) {
        case SKind::consecutive:
            bound = std::max(bound, inst.m - inst.smin + inst.smax + inst.t - 1);
            break;
        case SKind::complement_consecutive:
            bound = std::max({bound, inst.m + inst.t - 1, 2 * inst.m - inst.smax - 2});
            break;
        case SKind::other:
            throw std::domain_error("no construction in scope for this size set");
    }
    int b = 2;
    while ((1 << b) < bound) ++b;
    return FieldSpec::with_degree(b);
}

DecentralizedCode synthesize(const ProblemInstance& inst,
                             const std::optional<FieldSpec>& field_override,
                             std::uint64_t seed) {
    const FieldSpec spec = field_override ? *field_override : default_field_spec(inst);
    const Field& field = Field::get(spec);
    switch (inst.kind) {
        case SKind::consecutive:
            if (inst.smin == inst.smax && inst.smax == inst.m - inst.t) {
                return scheme_split_vector(inst, field, seed);
            }
            if (inst.smax + inst.t <= inst.m - inst.smin) {
                return scheme_uncoded(inst, field);
            }
            return scheme_sparse_mds(inst, field, seed);
        case SKind::complement_consecutive:
            return scheme_complement(inst, field, seed);
        case SKind::other:
            break;
    }
    throw std::domain_error("no construction in scope for this size set");
}

} // namespace picod

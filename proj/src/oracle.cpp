#include "picod/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "picod/verify.hpp"

namespace picod {

namespace {

// Candidate tables beyond this are refused outright; the search would not
// finish under any realistic ceiling anyway.
constexpr std::uint64_t kCandidateTableCap = 20'000'000;
// Computing relabeling orbits costs O(total * m!), so only bother when the
// table is small. Larger tables fall back to the unpruned estimate.
constexpr std::uint64_t kSymmetryTableCap = 200'000;
constexpr std::uint64_t kSaturated = std::uint64_t{4} << 60;

std::uint64_t clamp_to_u64(double x) {
    if (x >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
    if (x <= 0.0) return 0;
    return static_cast<std::uint64_t>(x);
}

std::string format_estimate(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// C(n, k) as double; 0 when the range is empty.
double choose_d(double n, int k) {
    if (k < 0 || n < k) return 0.0;
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<double>(r);
}

// Multisets of size k drawn from n options.
double multichoose_d(double n, int k) {
    if (k == 0) return 1.0;
    if (n <= 0.0) return 0.0;
    return choose_d(n + k - 1, k);
}

std::uint64_t pow_saturating(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > kSaturated / base) return kSaturated;
        r *= base;
    }
    return std::min(r, kSaturated);
}

// Candidate universe of a static-mode search. A candidate is a (transmitter,
// nonzero row) pair; its index is base[user] + v - 1, where the base-q digits
// of v (least significant first) are the row's coefficients on
// own_cols[user] in increasing column order. Sequential search reuses the
// per-user layout but enumerates rows against grown support on the fly.
struct Enumeration {
    const Field* field = nullptr;
    int m = 0;
    int t = 0;
    int beta = 0;
    int width = 0; // m * beta
    std::uint64_t q = 0;
    std::vector<User> users;
    std::vector<std::vector<int>> own_cols;     // side-info sub-columns
    std::vector<std::vector<int>> unknown_msgs; // complement of side info
    std::vector<std::uint64_t> count;           // candidates per user, saturating
    std::vector<std::uint64_t> base;            // exclusive prefix sums of count
    std::uint64_t total = 0;                    // saturating
    std::map<std::vector<int>, int> id_by_side_info;

    int user_of(std::uint64_t cand) const {
        auto it = std::upper_bound(base.begin(), base.end(), cand);
        return static_cast<int>(it - base.begin()) - 1;
    }
};

Enumeration build_enumeration(const SearchSpace& space, const Field& field) {
    Enumeration en;
    en.field = &field;
    en.m = space.instance.m;
    en.t = space.instance.t;
    en.beta = space.beta;
    en.width = en.m * en.beta;
    en.q = field.size();
    en.users = enumerate_users(space.instance);

    for (const User& u : en.users) {
        std::vector<int> cols;
        for (int j : u.side_info)
            for (int k = 0; k < en.beta; ++k) cols.push_back(j * en.beta + k);
        en.own_cols.push_back(std::move(cols));

        std::vector<int> missing;
        for (int j = 0; j < en.m; ++j)
            if (!std::binary_search(u.side_info.begin(), u.side_info.end(), j))
                missing.push_back(j);
        en.unknown_msgs.push_back(std::move(missing));

        std::uint64_t c = pow_saturating(en.q, en.beta * static_cast<int>(u.side_info.size()));
        c = (c >= kSaturated) ? kSaturated : c - 1;
        en.base.push_back(en.total);
        en.count.push_back(c);
        en.total = (en.total > kSaturated - c) ? kSaturated : en.total + c;

        en.id_by_side_info.emplace(u.side_info, u.id);
    }
    return en;
}

std::vector<std::vector<int>> nonidentity_permutations(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
    return out;
}

// Index of candidate (user, v) after relabeling messages by perm.
std::uint64_t image_index(const Enumeration& en, int user, std::uint64_t v,
                          const std::vector<int>& perm) {
    const User& u = en.users[user];
    std::vector<int> mapped;
    mapped.reserve(u.side_info.size());
    for (int j : u.side_info) mapped.push_back(perm[j]);
    std::sort(mapped.begin(), mapped.end());
    int u2 = en.id_by_side_info.at(mapped);
    const std::vector<int>& cols2 = en.own_cols[u2];

    std::uint64_t v2 = 0;
    std::uint64_t rest = v;
    for (std::size_t i = 0; rest != 0; ++i, rest /= en.q) {
        std::uint64_t d = rest % en.q;
        if (d == 0) continue;
        int col = en.own_cols[user][i];
        int col2 = perm[col / en.beta] * en.beta + col % en.beta;
        auto it = std::lower_bound(cols2.begin(), cols2.end(), col2);
        std::uint64_t place = static_cast<std::uint64_t>(it - cols2.begin());
        std::uint64_t scale = 1;
        for (std::uint64_t s = 0; s < place; ++s) scale *= en.q;
        v2 += d * scale;
    }
    return en.base[u2] + v2 - 1;
}

// canon[c] == 1 iff candidate c is minimal within its relabeling orbit. Only
// orbit-minimal candidates are allowed as the first row of the search.
std::vector<char> canonical_firsts(const Enumeration& en,
                                   const std::vector<std::vector<int>>& perms) {
    std::vector<char> canon(en.total, 1);
    for (std::uint64_t c = 0; c < en.total; ++c) {
        int u = en.user_of(c);
        std::uint64_t v = c - en.base[u] + 1;
        for (const auto& perm : perms) {
            if (image_index(en, u, v, perm) < c) {
                canon[c] = 0;
                break;
            }
        }
    }
    return canon;
}

// Leaf count of the static enumeration: sum over admissible first candidates
// c of the ways to extend from index c (repeats allowed unless reduced).
double static_leaf_estimate(std::uint64_t total, int subslots, bool reduced,
                            const std::vector<char>* canon) {
    if (subslots == 0) return 1.0;
    if (canon == nullptr) {
        double b = static_cast<double>(total);
        return reduced ? choose_d(b, subslots) : multichoose_d(b, subslots);
    }
    double sum = 0.0;
    for (std::uint64_t c = 0; c < total; ++c) {
        if (!(*canon)[c]) continue;
        double rest = static_cast<double>(total - c);
        sum += reduced ? choose_d(rest - 1, subslots - 1)
                       : multichoose_d(rest, subslots - 1);
    }
    return sum;
}

bool symmetry_applicable(const SearchSpace& space, const SearchConfig& config,
                         std::uint64_t total) {
    return config.prune_symmetry && space.mode == KnowledgeMode::static_side_info &&
           space.instance.m <= 6 && total <= kSymmetryTableCap;
}

double sequential_leaf_estimate(const Enumeration& en, int subslots) {
    // Coarse bound: every user could eventually know all m messages.
    double per_user = std::pow(static_cast<double>(en.q),
                               static_cast<double>(en.width)) - 1.0;
    double branch = static_cast<double>(en.users.size()) * per_user;
    return std::pow(branch, subslots);
}

struct UndoEntry {
    int user;
    int slot;
};

// Per-user incremental row-echelon state over bit-packed GF(2) rows. Inserts
// only ever add one row at its pivot slot (no back-elimination), so undo is
// a plain removal.
struct Gf2Policy {
    using Row = std::uint64_t;

    int tbeta = 0;
    std::vector<std::uint64_t> unknown_mask;        // per user
    std::vector<std::vector<std::uint64_t>> basis;  // [user][pivot bit]
    std::vector<int> rank_;

    void init(const Enumeration& en) {
        tbeta = en.t * en.beta;
        int n = static_cast<int>(en.users.size());
        unknown_mask.assign(n, 0);
        for (int u = 0; u < n; ++u)
            for (int j : en.unknown_msgs[u])
                for (int k = 0; k < en.beta; ++k)
                    unknown_mask[u] |= std::uint64_t{1} << (j * en.beta + k);
        basis.assign(n, std::vector<std::uint64_t>(en.width, 0));
        rank_.assign(n, 0);
    }

    static Row make_row(const Enumeration& en, int user, std::uint64_t v) {
        Row row = 0;
        std::uint64_t rest = v;
        for (std::size_t i = 0; rest != 0; ++i, rest >>= 1)
            if (rest & 1) row |= std::uint64_t{1} << en.own_cols[user][i];
        return row;
    }

    static int msb(std::uint64_t w) { return 63 - std::countl_zero(w); }

    void push(Row row, std::vector<UndoEntry>& undo) {
        for (int u = 0; u < static_cast<int>(basis.size()); ++u) {
            std::uint64_t w = row & unknown_mask[u];
            while (w != 0) {
                int p = msb(w);
                if (basis[u][p] != 0) {
                    w ^= basis[u][p];
                } else {
                    basis[u][p] = w;
                    ++rank_[u];
                    undo.push_back({u, p});
                    break;
                }
            }
        }
    }

    void pop(const std::vector<UndoEntry>& undo) {
        for (const UndoEntry& e : undo) {
            basis[e.user][e.slot] = 0;
            --rank_[e.user];
        }
    }

    bool unit_in_span(int u, int col) const {
        std::uint64_t w = std::uint64_t{1} << col;
        while (w != 0) {
            int p = msb(w);
            if (basis[u][p] == 0) return false;
            w ^= basis[u][p];
        }
        return true;
    }

    int rank_of(int u) const { return rank_[u]; }

    static void fill_matrix_row(Matrix& g, int r, Row row) {
        for (int c = 0; c < g.cols(); ++c)
            if (row >> c & 1) g.set(r, c, 1);
    }
};

// Same contract over generic field arithmetic and vector rows; pivots are
// the first nonzero column and basis rows are normalized to pivot 1.
struct GenericPolicy {
    using Row = std::vector<std::uint16_t>;

    const Field* field = nullptr;
    int width = 0;
    int tbeta = 0;
    std::vector<std::vector<char>> known_col;           // per user, per column
    std::vector<std::vector<Row>> basis;                // [user][pivot column]
    std::vector<int> rank_;

    void init(const Enumeration& en) {
        field = en.field;
        width = en.width;
        tbeta = en.t * en.beta;
        int n = static_cast<int>(en.users.size());
        known_col.assign(n, std::vector<char>(en.width, 0));
        for (int u = 0; u < n; ++u)
            for (int c : en.own_cols[u]) known_col[u][c] = 1;
        basis.assign(n, std::vector<Row>(en.width));
        rank_.assign(n, 0);
    }

    static Row make_row(const Enumeration& en, int user, std::uint64_t v) {
        Row row(en.width, 0);
        std::uint64_t rest = v;
        for (std::size_t i = 0; rest != 0; ++i, rest /= en.q)
            row[en.own_cols[user][i]] = static_cast<std::uint16_t>(rest % en.q);
        return row;
    }

    void push(const Row& row, std::vector<UndoEntry>& undo) {
        Row w;
        for (int u = 0; u < static_cast<int>(basis.size()); ++u) {
            w = row;
            for (int c = 0; c < width; ++c)
                if (known_col[u][c]) w[c] = 0;
            insert_reduced(u, std::move(w), undo);
        }
    }

    void pop(const std::vector<UndoEntry>& undo) {
        for (const UndoEntry& e : undo) {
            basis[e.user][e.slot].clear();
            --rank_[e.user];
        }
    }

    bool unit_in_span(int u, int col) const {
        Row w(width, 0);
        w[col] = 1;
        int p = col;
        while (true) {
            while (p < width && w[p] == 0) ++p;
            if (p == width) return true;
            if (basis[u][p].empty()) return false;
            eliminate(w, basis[u][p], w[p], p);
        }
    }

    int rank_of(int u) const { return rank_[u]; }

    static void fill_matrix_row(Matrix& g, int r, const Row& row) {
        for (int c = 0; c < g.cols(); ++c)
            if (row[c] != 0) g.set(r, c, row[c]);
    }

private:
    void eliminate(Row& w, const Row& pivot_row, std::uint16_t factor, int from) const {
        for (int c = from; c < width; ++c)
            if (pivot_row[c] != 0) w[c] = field->add(w[c], field->mul(factor, pivot_row[c]));
    }

    void insert_reduced(int u, Row w, std::vector<UndoEntry>& undo) {
        int p = 0;
        while (true) {
            while (p < width && w[p] == 0) ++p;
            if (p == width) return;
            if (basis[u][p].empty()) break;
            eliminate(w, basis[u][p], w[p], p);
        }
        std::uint16_t scale = field->inv(w[p]);
        for (int c = p; c < width; ++c) w[c] = field->mul(w[c], scale);
        basis[u][p] = std::move(w);
        ++rank_[u];
        undo.push_back({u, p});
    }
};

template <class Policy>
class StaticSearch {
public:
    StaticSearch(const Enumeration& en, const SearchConfig& config, int subslots,
                 double estimate, const std::vector<char>* canon)
        : en_(en), config_(config), subslots_(subslots), estimate_(estimate), canon_(canon) {
        pol_.init(en);
        rows_.reserve(en.total);
        users_of_.reserve(en.total);
        for (int u = 0; u < static_cast<int>(en.users.size()); ++u)
            for (std::uint64_t v = 1; v <= en.count[u]; ++v) {
                rows_.push_back(Policy::make_row(en, u, v));
                users_of_.push_back(u);
            }
        chosen_.assign(subslots_, 0);
        undo_stack_.assign(subslots_, {});
        for (auto& frame : undo_stack_) frame.reserve(en.users.size());
        node_limit_ = config.ceiling > std::numeric_limits<std::uint64_t>::max() / 4
                          ? std::numeric_limits<std::uint64_t>::max()
                          : config.ceiling * 4;
    }

    SearchOutcome run(const SearchSpace& space) {
        SearchOutcome out;
        out.estimated_size = estimate_;
        out.found = dfs(0, 0);
        out.nodes_visited = nodes_;
        out.leaves_evaluated = leaves_;
        if (out.found) out.witness = build_witness(space);
        return out;
    }

private:
    bool dfs(int depth, std::uint64_t lo) {
        if (depth == subslots_) {
            ++leaves_;
            return leaf_ok();
        }
        int remaining = subslots_ - depth - 1;
        for (std::uint64_t c = lo; c < rows_.size(); ++c) {
            if (depth == 0 && canon_ && !(*canon_)[c]) continue;
            if (++nodes_ > node_limit_)
                throw SearchCeilingError("search aborted: runtime node safety net exceeded",
                                         clamp_to_u64(estimate_), nodes_);
            auto& undo = undo_stack_[depth];
            undo.clear();
            pol_.push(rows_[c], undo);
            chosen_[depth] = c;
            bool cut = false;
            for (int u = 0; u < static_cast<int>(en_.users.size()); ++u)
                if (pol_.rank_of(u) + remaining < pol_.tbeta) {
                    cut = true;
                    break;
                }
            if (!cut && dfs(depth + 1, c + (config_.reduced ? 1 : 0))) return true;
            pol_.pop(undo);
        }
        return false;
    }

    bool leaf_ok() const {
        for (int u = 0; u < static_cast<int>(en_.users.size()); ++u) {
            const std::vector<int>& miss = en_.unknown_msgs[u];
            int cnt = 0;
            for (std::size_t i = 0; i < miss.size(); ++i) {
                if (cnt + static_cast<int>(miss.size() - i) < en_.t) break;
                bool whole = true;
                for (int k = 0; k < en_.beta; ++k)
                    if (!pol_.unit_in_span(u, miss[i] * en_.beta + k)) {
                        whole = false;
                        break;
                    }
                if (whole && ++cnt >= en_.t) break;
            }
            if (cnt < en_.t) return false;
        }
        return true;
    }

    DecentralizedCode build_witness(const SearchSpace& space) const {
        Matrix g(subslots_, en_.width, *en_.field);
        Schedule sch;
        sch.mode = KnowledgeMode::static_side_info;
        for (int r = 0; r < subslots_; ++r) {
            Policy::fill_matrix_row(g, r, rows_[chosen_[r]]);
            sch.transmitter.push_back(users_of_[chosen_[r]]);
        }
        DecentralizedCode code{space.instance, space.beta, std::move(g), std::move(sch)};
        if (!validate(code).valid)
            throw std::logic_error("search produced a witness that fails validation");
        return code;
    }

    const Enumeration& en_;
    SearchConfig config_;
    int subslots_;
    double estimate_;
    const std::vector<char>* canon_;
    Policy pol_;
    std::vector<typename Policy::Row> rows_;
    std::vector<int> users_of_;
    std::vector<std::uint64_t> chosen_;
    std::vector<std::vector<UndoEntry>> undo_stack_;
    std::uint64_t nodes_ = 0;
    std::uint64_t leaves_ = 0;
    std::uint64_t node_limit_ = 0;
};

// Ordered search where a transmitter's support may include every message it
// can already decode from the rows before it. Generic arithmetic only; these
// spaces blow up far sooner than the static ones, so speed is secondary.
class SequentialSearch {
public:
    SequentialSearch(const Enumeration& en, const SearchConfig& config, int subslots,
                     double estimate)
        : en_(en), subslots_(subslots), estimate_(estimate) {
        pol_.init(en);
        undo_stack_.assign(std::max(subslots_, 1), {});
        row_stack_.assign(std::max(subslots_, 1), GenericPolicy::Row(en.width, 0));
        tx_stack_.assign(std::max(subslots_, 1), 0);
        node_limit_ = config.ceiling > std::numeric_limits<std::uint64_t>::max() / 4
                          ? std::numeric_limits<std::uint64_t>::max()
                          : config.ceiling * 4;
    }

    SearchOutcome run(const SearchSpace& space) {
        SearchOutcome out;
        out.estimated_size = estimate_;
        out.found = dfs(0);
        out.nodes_visited = nodes_;
        out.leaves_evaluated = leaves_;
        if (out.found) out.witness = build_witness(space);
        return out;
    }

private:
    bool dfs(int depth) {
        if (depth == subslots_) {
            ++leaves_;
            return leaf_ok();
        }
        int remaining = subslots_ - depth - 1;
        for (int u = 0; u < static_cast<int>(en_.users.size()); ++u) {
            std::vector<int> cols = known_cols(u);
            if (cols.empty()) continue;
            if (cols.size() >= 63) // cannot happen for any space small enough to search
                throw SearchCeilingError("sequential support too wide to enumerate",
                                         clamp_to_u64(estimate_), nodes_);
            std::uint64_t cand_count = pow_saturating(en_.q, static_cast<int>(cols.size())) - 1;
            for (std::uint64_t v = 1; v <= cand_count; ++v) {
                if (++nodes_ > node_limit_)
                    throw SearchCeilingError(
                        "search aborted: runtime node safety net exceeded",
                        clamp_to_u64(estimate_), nodes_);
                GenericPolicy::Row& row = row_stack_[depth];
                std::fill(row.begin(), row.end(), 0);
                std::uint64_t rest = v;
                for (std::size_t i = 0; rest != 0; ++i, rest /= en_.q)
                    row[cols[i]] = static_cast<std::uint16_t>(rest % en_.q);
                auto& undo = undo_stack_[depth];
                undo.clear();
                pol_.push(row, undo);
                tx_stack_[depth] = u;
                bool cut = false;
                for (int w = 0; w < static_cast<int>(en_.users.size()); ++w)
                    if (pol_.rank_of(w) + remaining < pol_.tbeta) {
                        cut = true;
                        break;
                    }
                if (!cut && dfs(depth + 1)) return true;
                pol_.pop(undo);
            }
        }
        return false;
    }

    // Sub-columns user u may touch right now: side information plus whatever
    // it can already decode from the current prefix.
    std::vector<int> known_cols(int u) const {
        std::vector<int> cols = en_.own_cols[u];
        for (int j : en_.unknown_msgs[u]) {
            bool whole = true;
            for (int k = 0; k < en_.beta; ++k)
                if (!pol_.unit_in_span(u, j * en_.beta + k)) {
                    whole = false;
                    break;
                }
            if (whole)
                for (int k = 0; k < en_.beta; ++k) cols.push_back(j * en_.beta + k);
        }
        std::sort(cols.begin(), cols.end());
        return cols;
    }

    bool leaf_ok() const {
        for (int u = 0; u < static_cast<int>(en_.users.size()); ++u) {
            int cnt = 0;
            const std::vector<int>& miss = en_.unknown_msgs[u];
            for (std::size_t i = 0; i < miss.size(); ++i) {
                if (cnt + static_cast<int>(miss.size() - i) < en_.t) break;
                bool whole = true;
                for (int k = 0; k < en_.beta; ++k)
                    if (!pol_.unit_in_span(u, miss[i] * en_.beta + k)) {
                        whole = false;
                        break;
                    }
                if (whole && ++cnt >= en_.t) break;
            }
            if (cnt < en_.t) return false;
        }
        return true;
    }

    DecentralizedCode build_witness(const SearchSpace& space) const {
        Matrix g(subslots_, en_.width, *en_.field);
        Schedule sch;
        sch.mode = KnowledgeMode::sequential;
        for (int r = 0; r < subslots_; ++r) {
            GenericPolicy::fill_matrix_row(g, r, row_stack_[r]);
            sch.transmitter.push_back(tx_stack_[r]);
        }
        DecentralizedCode code{space.instance, space.beta, std::move(g), std::move(sch)};
        if (!validate(code).valid)
            throw std::logic_error("search produced a witness that fails validation");
        return code;
    }

    const Enumeration& en_;
    int subslots_;
    double estimate_;
    GenericPolicy pol_;
    std::vector<std::vector<UndoEntry>> undo_stack_;
    std::vector<GenericPolicy::Row> row_stack_;
    std::vector<int> tx_stack_;
    std::uint64_t nodes_ = 0;
    std::uint64_t leaves_ = 0;
    std::uint64_t node_limit_ = 0;
};

double compute_estimate(const Enumeration& en, const SearchSpace& space,
                        const SearchConfig& config, std::vector<char>* canon_out) {
    if (space.mode == KnowledgeMode::sequential)
        return sequential_leaf_estimate(en, space.total_subslots);
    if (symmetry_applicable(space, config, en.total)) {
        std::vector<char> canon =
            canonical_firsts(en, nonidentity_permutations(space.instance.m));
        double est = static_leaf_estimate(en.total, space.total_subslots, config.reduced, &canon);
        if (canon_out) *canon_out = std::move(canon);
        return est;
    }
    return static_leaf_estimate(en.total, space.total_subslots, config.reduced, nullptr);
}

void check_space(const SearchSpace& space) {
    if (space.beta < 1) throw std::invalid_argument("beta must be at least 1");
    if (space.total_subslots < 0) throw std::invalid_argument("negative subslot count");
}

DecentralizedCode unit_row_code(const ProblemInstance& inst, const Field& field) {
    std::vector<User> users = enumerate_users(inst);
    Matrix g = Matrix::identity(inst.m, field);
    Schedule sch;
    sch.mode = KnowledgeMode::static_side_info;
    for (int j = 0; j < inst.m; ++j) {
        int tx = -1;
        for (const User& u : users)
            if (std::binary_search(u.side_info.begin(), u.side_info.end(), j)) {
                tx = u.id;
                break;
            }
        if (tx < 0) throw std::logic_error("no user holds a message"); // S != {0}
        sch.transmitter.push_back(tx);
    }
    return {inst, 1, std::move(g), std::move(sch)};
}

// beta-fold row split of a one-subslot-per-row code: row r becomes beta
// rows, copy k carrying the original coefficients on sub-column k of every
// message. Each user's restricted system turns into beta disjoint copies of
// the original one, so decodability carries over message for message.
DecentralizedCode lift_code(const DecentralizedCode& one, int beta) {
    if (one.beta != 1) throw std::invalid_argument("lift expects a beta=1 code");
    const Matrix& g = one.generator;
    Matrix out(g.rows() * beta, g.cols() * beta, g.field());
    Schedule sch;
    sch.mode = one.schedule.mode;
    for (int r = 0; r < g.rows(); ++r)
        for (int k = 0; k < beta; ++k) {
            for (int j = 0; j < g.cols(); ++j) out.set(r * beta + k, j * beta + k, g.at(r, j));
            sch.transmitter.push_back(one.schedule.transmitter[r]);
        }
    return {one.instance, beta, std::move(out), std::move(sch)};
}

} // namespace

double estimate_search_size(const SearchSpace& space, const SearchConfig& config) {
    check_space(space);
    const Field& field = Field::get(space.field);
    Enumeration en = build_enumeration(space, field);
    return compute_estimate(en, space, config, nullptr);
}

SearchOutcome exists_valid_code(const SearchSpace& space, const SearchConfig& config) {
    check_space(space);
    const Field& field = Field::get(space.field);
    Enumeration en = build_enumeration(space, field);

    std::vector<char> canon;
    bool sym = symmetry_applicable(space, config, en.total);
    double estimate = compute_estimate(en, space, config, sym ? &canon : nullptr);
    if (estimate > static_cast<double>(config.ceiling))
        throw SearchCeilingError("search refused: estimated " + format_estimate(estimate) +
                                     " leaves exceed the ceiling",
                                 clamp_to_u64(estimate), 0);

    if (space.mode == KnowledgeMode::sequential) {
        SequentialSearch search(en, config, space.total_subslots, estimate);
        return search.run(space);
    }

    if (en.total > kCandidateTableCap)
        throw SearchCeilingError("search refused: candidate table too large",
                                 clamp_to_u64(static_cast<double>(en.total)), 0);

    const std::vector<char>* canon_ptr = sym ? &canon : nullptr;
    if (field.size() == 2 && en.width <= 64) {
        StaticSearch<Gf2Policy> search(en, config, space.total_subslots, estimate, canon_ptr);
        return search.run(space);
    }
    StaticSearch<GenericPolicy> search(en, config, space.total_subslots, estimate, canon_ptr);
    return search.run(space);
}

int counting_floor_subslots(const ProblemInstance& inst, int beta) {
    if (beta < 1) throw std::invalid_argument("beta must be at least 1");
    std::int64_t n = inst.user_count();
    // n >= 2 for every accepted instance: S = {0} is rejected and every
    // nonzero size s <= m-t < m indexes at least m users.
    std::int64_t num = static_cast<std::int64_t>(inst.t) * beta * n;
    return static_cast<int>((num + n - 2) / (n - 1));
}

CertifiedMinimum certified_minimum(const ProblemInstance& inst, const FieldSpec& field,
                                   int beta_max, KnowledgeMode mode,
                                   const SearchConfig& config) {
    if (beta_max < 1) throw std::invalid_argument("beta_max must be at least 1");
    const Field& f = Field::get(field);

    CertifiedMinimum out;
    for (int beta = 1; beta <= beta_max; ++beta) {
        BetaLeg leg;
        leg.beta = beta;
        leg.counting_floor = counting_floor_subslots(inst, beta);

        // Ascending sweep. Levels below the counting floor are excluded
        // analytically, and each completed none-result justifies the reduced
        // (repeat-free) search at the next level.
        int level = leg.counting_floor;
        while (true) {
            if (level > beta * inst.m)
                throw std::logic_error("ascending sweep passed the unit-row bound");
            SearchSpace space{inst, field, beta, level, mode};
            SearchConfig cfg = config;
            cfg.reduced = true;
            SearchOutcome res;
            try {
                res = exists_valid_code(space, cfg);
            } catch (const SearchCeilingError& e) {
                leg.unexcluded = level;
                leg.nodes += e.nodes_visited();
                leg.note = "search refused at " + std::to_string(level) +
                           " subslots (estimated " +
                           format_estimate(static_cast<double>(e.estimated_size())) + " leaves)";
                break;
            }
            leg.nodes += res.nodes_visited;
            if (res.found) {
                leg.least = level;
                leg.unexcluded = level;
                leg.exact = true;
                leg.witness = std::move(res.witness);
                break;
            }
            ++level;
        }

        if (!leg.exact) {
            // Witness-backed fallback bound so the leg still reports an
            // achievable value.
            if (beta == 1) {
                leg.upper = inst.m;
                leg.witness = unit_row_code(inst, f);
            } else {
                const BetaLeg& first = out.legs.front();
                if (first.witness) {
                    leg.upper = beta * (first.least ? *first.least : *first.upper);
                    leg.witness = lift_code(*first.witness, beta);
                }
            }
        }
        out.legs.push_back(std::move(leg));
    }

    bool have = false;
    Rational best{0};
    for (const BetaLeg& leg : out.legs) {
        std::optional<int> bound = leg.least ? leg.least : leg.upper;
        if (!bound) continue;
        Rational v{*bound, leg.beta};
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    if (!have) throw std::logic_error("no leg produced a bound");
    out.value = best;

    out.exact = true;
    for (const BetaLeg& leg : out.legs)
        if (!leg.exact && Rational{leg.unexcluded, leg.beta} < out.value) out.exact = false;

    std::int64_t n = inst.user_count();
    out.fully_certified =
        out.exact && out.value == Rational{static_cast<std::int64_t>(inst.t) * n, n - 1};
    return out;
}

} // namespace picod

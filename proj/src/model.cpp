#include "picod/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace picod {

std::string to_string(SKind kind) {
    switch (kind) {
        case SKind::consecutive: return "consecutive";
        case SKind::complement_consecutive: return "complement_consecutive";
        case SKind::other: return "other";
    }
    return "other";
}

std::string to_string(KnowledgeMode mode) {
    return mode == KnowledgeMode::static_side_info ? "static" : "sequential";
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

namespace {

/// Sorts, dedupes, bounds-checks and classifies; shared by the factories.
ProblemInstance make_instance(int m, int t, std::vector<int> s) {
    if (m < 1) throw std::invalid_argument("need at least one message");
    if (t < 1) throw std::invalid_argument("demand t must be positive");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw std::invalid_argument("size set S is empty");
    const int cap = m - t;
    if (s.front() < 0 || s.back() > cap) {
        throw std::invalid_argument(
            "side-information sizes must lie in [0, m-t]; a user holding more "
            "than m-t messages cannot be given t new ones");
    }
    if (s.size() == 1 && s[0] == 0) {
        throw std::invalid_argument(
            "S = {0} is unsolvable: the only user has nothing to transmit");
    }

    ProblemInstance inst;
    inst.m = m;
    inst.t = t;
    inst.sizes = std::move(s);

    const auto& sz = inst.sizes;
    const bool contiguous =
        sz.back() - sz.front() + 1 == static_cast<int>(sz.size());
    if (contiguous) {
        inst.kind = SKind::consecutive;
        inst.smin = sz.front();
        inst.smax = sz.back();
        return inst;
    }
    // Complement-consecutive: S = [0..cap] \ [a..b] with 0 < a <= b < cap.
    // Such an S contains both endpoints and has exactly one contiguous gap.
    if (sz.front() == 0 && sz.back() == cap) {
        int gap_lo = -1;
        int gap_hi = -1;
        bool single_gap = true;
        for (std::size_t i = 0; i + 1 < sz.size(); ++i) {
            if (sz[i + 1] == sz[i] + 1) continue;
            if (gap_lo != -1) {
                single_gap = false;
                break;
            }
            gap_lo = sz[i] + 1;
            gap_hi = sz[i + 1] - 1;
        }
        if (single_gap && gap_lo != -1) {
            inst.kind = SKind::complement_consecutive;
            inst.smin = gap_lo;
            inst.smax = gap_hi;
            return inst;
        }
    }
    inst.kind = SKind::other;
    return inst;
}

} // namespace

ProblemInstance ProblemInstance::complete(int m, int t, std::vector<int> s) {
    return make_instance(m, t, std::move(s));
}

ProblemInstance ProblemInstance::consecutive(int m, int t, int smin, int smax) {
    if (smin > smax) throw std::invalid_argument("smin exceeds smax");
    std::vector<int> s;
    for (int v = smin; v <= smax; ++v) s.push_back(v);
    ProblemInstance inst = make_instance(m, t, std::move(s));
    if (inst.kind != SKind::consecutive) {
        throw std::invalid_argument("size range failed to classify as consecutive");
    }
    return inst;
}

ProblemInstance ProblemInstance::complement(int m, int t, int smin, int smax) {
    if (t < 1 || m < 1) throw std::invalid_argument("bad m or t");
    const int cap = m - t;
    if (!(0 < smin && smin <= smax && smax < cap)) {
        throw std::invalid_argument(
            "complement excision needs 0 < smin <= smax < m-t");
    }
    std::vector<int> s;
    for (int v = 0; v <= cap; ++v) {
        if (v < smin || v > smax) s.push_back(v);
    }
    ProblemInstance inst = make_instance(m, t, std::move(s));
    if (inst.kind != SKind::complement_consecutive) {
        throw std::invalid_argument("excision failed to classify as complement");
    }
    return inst;
}

std::int64_t ProblemInstance::user_count() const {
    std::int64_t n = 0;
    for (const int s : sizes) n += binomial(m, s);
    return n;
}

std::vector<User> enumerate_users(const ProblemInstance& inst) {
    std::vector<User> users;
    users.reserve(static_cast<std::size_t>(inst.user_count()));
    for (const int s : inst.sizes) {
        for_each_combination(inst.m, s, [&](std::span<const int> subset) {
            users.push_back(User{static_cast<int>(users.size()),
                                 {subset.begin(), subset.end()}});
            return true;
        });
    }
    return users;
}

} // namespace picod

#include "picod/gf.hpp"

#include <array>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace picod {

namespace {

int poly_degree(std::uint32_t poly) { return std::bit_width(poly) - 1; }

/// Remainder of a modulo b in GF(2)[x], both as bit masks.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db) {
        a ^= b << (poly_degree(a) - db);
    }
    return a;
}

/// Carry-less multiply of x and y followed by reduction modulo poly.
/// Product degree is at most 30 for b <= 16, so uint32 suffices.
std::uint16_t clmul_reduce(std::uint32_t x, std::uint32_t y, std::uint32_t poly) {
    std::uint32_t prod = 0;
    while (y != 0) {
        if (y & 1U) prod ^= x;
        x <<= 1;
        y >>= 1;
    }
    return static_cast<std::uint16_t>(poly_mod(prod, poly));
}

} // namespace

bool is_irreducible(std::uint32_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    for (int k = 1; 2 * k <= d; ++k) {
        const std::uint32_t lo = std::uint32_t{1} << k;
        for (std::uint32_t q = lo; q < 2 * lo; ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::with_degree(int b) {
    if (b < 1 || b > 16) {
        throw std::invalid_argument("field degree must be in [1, 16], got " +
                                    std::to_string(b));
    }
    // Memoized scan from the smallest candidate mask upward. Polynomials with
    // constant term 0 are divisible by x, so only odd masks are considered.
    static std::array<std::uint32_t, 17> cache{};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (cache[static_cast<std::size_t>(b)] == 0) {
        const std::uint32_t lo = (std::uint32_t{1} << b) | 1U;
        const std::uint32_t hi = std::uint32_t{1} << (b + 1);
        for (std::uint32_t p = lo; p < hi; p += 2) {
            if (is_irreducible(p)) {
                cache[static_cast<std::size_t>(b)] = p;
                break;
            }
        }
    }
    return FieldSpec{b, cache[static_cast<std::size_t>(b)]};
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
    if (spec.b < 1 || spec.b > 16) {
        throw std::invalid_argument("field degree must be in [1, 16], got " +
                                    std::to_string(spec.b));
    }
    if (poly_degree(spec.poly) != spec.b) {
        throw std::invalid_argument("reduction polynomial degree does not match b");
    }
    if (!is_irreducible(spec.poly)) {
        throw std::invalid_argument("reduction polynomial is reducible");
    }

    tabulated_ = spec.b <= 12;
    if (!tabulated_) return;

    const std::uint32_t q = size();
    const std::uint32_t order = q - 1;
    log_.assign(q, 0);
    exp_.assign(2 * order, 0);

    // The reduction polynomial need not be primitive (the b=8 default is
    // not), so search for a generator of the multiplicative group.
    for (std::uint32_t g = (q == 2) ? 1 : 2; g < q; ++g) {
        std::uint16_t v = 1;
        std::uint32_t i = 0;
        for (; i < order; ++i) {
            exp_[i] = v;
            v = clmul_reduce(v, g, spec.poly);
            if (v == 1) {
                ++i;
                break;
            }
        }
        if (i == order) break; // full cycle: g is primitive
    }
    for (std::uint32_t i = 0; i < order; ++i) {
        log_[exp_[i]] = static_cast<std::uint16_t>(i);
        exp_[i + order] = exp_[i];
    }
}

const Field& Field::get(const FieldSpec& spec) {
    static std::map<std::pair<int, std::uint32_t>, std::unique_ptr<Field>> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = registry[{spec.b, spec.poly}];
    if (!slot) slot = std::unique_ptr<Field>(new Field(spec));
    return *slot;
}

void Field::check_value(std::uint16_t x) const {
    if (x > max_value()) {
        throw std::invalid_argument("value " + std::to_string(x) +
                                    " outside GF(2^" + std::to_string(spec_.b) + ")");
    }
}

std::uint16_t Field::mul(std::uint16_t x, std::uint16_t y) const {
    check_value(x);
    check_value(y);
    if (x == 0 || y == 0) return 0;
    if (tabulated_) return exp_[log_[x] + log_[y]];
    return clmul_reduce(x, y, spec_.poly);
}

std::uint16_t Field::inv(std::uint16_t x) const {
    check_value(x);
    if (x == 0) throw std::domain_error("inverse of zero");
    if (tabulated_) {
        const std::uint32_t order = size() - 1;
        return exp_[order - log_[x]];
    }
    return pow(x, size() - 2); // x^(q-2) = x^-1 for x != 0
}

std::uint16_t Field::pow(std::uint16_t x, std::uint64_t e) const {
    check_value(x);
    std::uint16_t result = 1;
    std::uint16_t base = x;
    while (e != 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (!(field_->spec() == other.field_->spec())) {
        throw std::invalid_argument("field elements from mismatched fields");
    }
}

} // namespace picod

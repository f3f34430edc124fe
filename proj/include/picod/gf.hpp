#pragma once

#include <cstdint>
#include <vector>

namespace picod {

/// Binary extension field parameters. `b` is the extension degree
/// (1 <= b <= 16) and `poly` the reduction polynomial as a bit mask with the
/// degree-b bit set, e.g. 0b1011 = x^3 + x + 1. The polynomial must be
/// irreducible over GF(2); Field::get checks this by trial division.
struct FieldSpec {
    int b = 1;
    std::uint32_t poly = 0b11;

    /// Spec with the lexicographically smallest irreducible polynomial of
    /// the given degree (constant term 1). E.g. b=2 -> x^2+x+1,
    /// b=3 -> x^3+x+1, b=4 -> x^4+x+1, b=8 -> x^8+x^4+x^3+x+1.
    static FieldSpec with_degree(int b);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// True if `poly` (degree taken from its top set bit) is irreducible over
/// GF(2). Checked by trial division against every polynomial of degree
/// 1..deg/2; a reducible polynomial always has a factor in that range.
bool is_irreducible(std::uint32_t poly);

/// Arithmetic engine for GF(2^b). Immutable after construction and safe for
/// unrestricted concurrent use. Obtain instances through Field::get — the
/// registry dedupes by spec, so element containers can hold a bare pointer.
///
/// Elements are the integers 0..2^b-1, read as polynomial bit masks.
/// Multiplication uses log/antilog tables for b <= 12 and a shift-xor
/// carry-less multiply with top-down reduction above that.
class Field {
public:
    static const Field& get(const FieldSpec& spec);
    static const Field& get(int b) { return get(FieldSpec::with_degree(b)); }
    static const Field& gf2() { return get(FieldSpec{1, 0b11}); }

    const FieldSpec& spec() const { return spec_; }
    int degree() const { return spec_.b; }
    std::uint32_t size() const { return std::uint32_t{1} << spec_.b; }
    std::uint16_t max_value() const { return static_cast<std::uint16_t>(size() - 1); }

    std::uint16_t add(std::uint16_t x, std::uint16_t y) const {
        check_value(x);
        check_value(y);
        return x ^ y;
    }

    std::uint16_t mul(std::uint16_t x, std::uint16_t y) const;

    /// Multiplicative inverse; throws std::domain_error for 0.
    std::uint16_t inv(std::uint16_t x) const;

    std::uint16_t div(std::uint16_t x, std::uint16_t y) const { return mul(x, inv(y)); }

    std::uint16_t pow(std::uint16_t x, std::uint64_t e) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    explicit Field(const FieldSpec& spec);

    void check_value(std::uint16_t x) const;
    std::uint16_t mul_noreduce_path(std::uint16_t x, std::uint16_t y) const;

    FieldSpec spec_;
    bool tabulated_;
    std::vector<std::uint16_t> log_;  // index: element value (0 unused)
    std::vector<std::uint16_t> exp_;  // doubled, so log sums need no modulo
};

/// Field element with value semantics for the public API. Operations between
/// elements of different fields raise std::invalid_argument.
class FieldElement {
public:
    FieldElement(const Field& field, std::uint16_t value)
        : field_(&field), value_(value) {}

    std::uint16_t value() const { return value_; }
    const Field& field() const { return *field_; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.require_same_field(b);
        return {*a.field_, a.field_->add(a.value_, b.value_)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.require_same_field(b);
        return {*a.field_, a.field_->mul(a.value_, b.value_)};
    }
    FieldElement inverse() const { return {*field_, field_->inv(value_)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.require_same_field(b);
        return a.value_ == b.value_;
    }

private:
    void require_same_field(const FieldElement& other) const;

    const Field* field_;
    std::uint16_t value_;
};

} // namespace picod

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ghw {

/// Element of GF(p^s) encoded by its index in [0, q). The base-p digits of
/// the index are the coefficients (lowest degree first) of the representing
/// polynomial, so 0 and 1 are the additive and multiplicative identities.
using FieldElement = std::uint16_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Arithmetic context for GF(p^s). Cheap to copy; the lookup tables are
/// shared and immutable, so a field can be used from several threads.
class FiniteField {
public:
    /// Validates (p, s, modulus). Without a modulus and s > 1, the first
    /// irreducible monic polynomial of degree s in ascending coefficient
    /// encoding is chosen.
    static FiniteField build(std::uint32_t p, std::uint32_t s,
                             std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Shorthand for build(p, 1).
    static FiniteField prime(std::uint32_t p) { return build(p, 1); }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t s() const noexcept { return s_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Ascending coefficients of the modulus (length s + 1). For s = 1 this
    /// is the linear polynomial x and carries no meaning.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool contains(std::uint32_t a) const noexcept { return a < q_; }

    FieldElement add(FieldElement a, FieldElement b) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept;
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return tables_->exp[tables_->log[a] + tables_->log[b]];
    }
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

    /// The generator used for the log tables (smallest-index element of
    /// multiplicative order q - 1).
    FieldElement primitive_element() const noexcept { return tables_->exp[1]; }

    /// Multiplicative order of a nonzero element.
    std::uint32_t order(FieldElement a) const;

    /// Indices 1..q-1 in ascending order.
    std::vector<FieldElement> nonzero_elements() const;

    /// Base-p digits of an element, length s.
    std::vector<std::uint32_t> digits(FieldElement a) const;
    FieldElement from_digits(const std::vector<std::uint32_t>& digits) const;

    std::string name() const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
        return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
    }

private:
    struct Tables {
        std::vector<FieldElement> exp;     // length 2(q-1), exp[i] = g^i
        std::vector<std::uint32_t> log;    // log[0] unused
        std::vector<FieldElement> add;     // q*q, only for small extension fields
    };

    FiniteField() = default;

    std::uint32_t p_ = 0;
    std::uint32_t s_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree <= deg/2. Coefficients ascending.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace ghw

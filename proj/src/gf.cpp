#include "ghw/gf.hpp"

#include <numeric>

#include "ghw/error.hpp"

namespace ghw {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over GF(p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod_monic(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return out;
}

Poly to_digits(std::uint32_t index, std::uint32_t p, std::uint32_t len) {
    Poly d(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        d[i] = index % p;
        index /= p;
    }
    return d;
}

std::uint32_t from_digit_vector(const Poly& d, std::uint32_t p) {
    std::uint32_t index = 0;
    for (std::size_t i = d.size(); i-- > 0;) index = index * p + d[i];
    return index;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    if (deg == 1) return true;
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        std::uint32_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint32_t tail = 0; tail < count; ++tail) {
            Poly cand = to_digits(tail, p, d);
            cand.push_back(1);
            if (poly_mod_monic(f, cand, p).empty()) return false;
        }
    }
    return true;
}

FiniteField FiniteField::build(std::uint32_t p, std::uint32_t s,
                               std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (s < 1) throw Error(ErrorKind::WrongDegree, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw Error(ErrorKind::FieldTooLarge, "field order exceeds 2^16");
        }
    }

    FiniteField f;
    f.p_ = p;
    f.s_ = s;
    f.q_ = static_cast<std::uint32_t>(q);

    if (modulus) {
        if (modulus->size() != s + 1) {
            throw Error(ErrorKind::WrongDegree, "modulus must have s+1 coefficients");
        }
        for (auto c : *modulus) {
            if (c >= p) throw Error(ErrorKind::BadArgs, "modulus coefficient out of range");
        }
    }

    if (s == 1) {
        f.modulus_ = {0, 1};
    } else if (modulus) {
        if (modulus->back() != 1) {
            throw Error(ErrorKind::WrongDegree, "modulus must be monic of degree s");
        }
        if (!is_irreducible(*modulus, p)) {
            throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" +
                                                         std::to_string(p) + ")");
        }
        f.modulus_ = *modulus;
    } else {
        for (std::uint32_t tail = 0; tail < f.q_; ++tail) {
            Poly cand = to_digits(tail, p, s);
            cand.push_back(1);
            if (is_irreducible(cand, p)) {
                f.modulus_ = std::move(cand);
                break;
            }
        }
    }

    const std::uint32_t qq = f.q_;
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (s == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
        Poly prod = poly_mul(to_digits(a, p, s), to_digits(b, p, s), p);
        Poly rem = poly_mod_monic(std::move(prod), f.modulus_, p);
        rem.resize(s, 0);
        return from_digit_vector(rem, p);
    };
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t result = 1;
        while (e > 0) {
            if (e & 1) result = slow_mul(result, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return result;
    };

    const auto factors = prime_factors(qq - 1);
    std::uint32_t gen = 0;
    for (std::uint32_t g = 1; g < qq && gen == 0; ++g) {
        bool primitive = true;
        for (auto l : factors) {
            if (slow_pow(g, (qq - 1) / l) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen = g;
    }

    auto tables = std::make_shared<Tables>();
    tables->exp.resize(2 * (qq - 1));
    tables->log.assign(qq, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < qq - 1; ++i) {
        tables->exp[i] = static_cast<FieldElement>(x);
        tables->log[x] = i;
        x = slow_mul(x, gen);
    }
    for (std::uint32_t i = qq - 1; i < 2 * (qq - 1); ++i) {
        tables->exp[i] = tables->exp[i - (qq - 1)];
    }

    if (s > 1 && p != 2 && qq <= 256) {
        tables->add.resize(static_cast<std::size_t>(qq) * qq);
        for (std::uint32_t a = 0; a < qq; ++a) {
            const Poly da = to_digits(a, p, s);
            for (std::uint32_t b = 0; b < qq; ++b) {
                Poly db = to_digits(b, p, s);
                for (std::uint32_t i = 0; i < s; ++i) db[i] = (db[i] + da[i]) % p;
                tables->add[a * qq + b] = static_cast<FieldElement>(from_digit_vector(db, p));
            }
        }
    }
    f.tables_ = std::move(tables);
    return f;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const noexcept {
    if (s_ == 1) return static_cast<FieldElement>((std::uint32_t{a} + b) % p_);
    if (p_ == 2) return static_cast<FieldElement>(a ^ b);
    if (!tables_->add.empty()) return tables_->add[std::size_t{a} * q_ + b];
    std::uint32_t x = a, y = b, out = 0, place = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return static_cast<FieldElement>(out);
}

FieldElement FiniteField::neg(FieldElement a) const noexcept {
    if (p_ == 2) return a;
    if (s_ == 1) return static_cast<FieldElement>((p_ - a) % p_);
    std::uint32_t x = a, out = 0, place = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        out += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return static_cast<FieldElement>(out);
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const noexcept {
    if (s_ == 1) return static_cast<FieldElement>((std::uint32_t{a} + p_ - b) % p_);
    return add(a, neg(b));
}

FieldElement FiniteField::inv(FieldElement a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const std::uint32_t l = tables_->log[a];
    return tables_->exp[(q_ - 1 - l) % (q_ - 1)];
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = tables_->log[a];
    return tables_->exp[(l * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t FiniteField::order(FieldElement a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "order of zero");
    return (q_ - 1) / std::gcd(tables_->log[a], q_ - 1);
}

std::vector<FieldElement> FiniteField::nonzero_elements() const {
    std::vector<FieldElement> out(q_ - 1);
    std::iota(out.begin(), out.end(), FieldElement{1});
    return out;
}

std::vector<std::uint32_t> FiniteField::digits(FieldElement a) const {
    return to_digits(a, p_, s_);
}

FieldElement FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
    if (d.size() != s_) throw Error(ErrorKind::BadArgs, "digit vector must have length s");
    for (auto x : d) {
        if (x >= p_) throw Error(ErrorKind::BadArgs, "digit out of range");
    }
    return static_cast<FieldElement>(from_digit_vector(d, p_));
}

std::string FiniteField::name() const {
    if (s_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(s_) + ")";
}

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::WrongDegree: return "WrongDegree";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::ZeroDual: return "ZeroDual";
        case ErrorKind::NotCyclic: return "NotCyclic";
        case ErrorKind::CharacteristicDividesLength: return "CharacteristicDividesLength";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::BadArgs: return "BadArgs";
        case ErrorKind::BadRank: return "BadRank";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::BadHierarchy: return "BadHierarchy";
        case ErrorKind::WorkLimitExceeded: return "WorkLimitExceeded";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::FieldError: return "FieldError";
        case ErrorKind::UsageError: return "UsageError";
        case ErrorKind::MismatchedResults: return "MismatchedResults";
    }
    return "Unknown";
}

}  // namespace ghw

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace altkron {

class Scalar;

/// The ground field: the rationals or a prime field F_p.
class Field {
public:
    enum class Kind { rational, prime };

    Field() = default;

    static Field rational() { return Field{}; }
    /// Throws InputError unless p is a prime >= 2.
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return p_ == 0 ? Kind::rational : Kind::prime; }
    bool is_rational() const noexcept { return p_ == 0; }
    /// 0 for the rationals.
    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    /// Reduces mod p for prime fields; throws std::domain_error when the
    /// denominator vanishes mod p.
    Scalar from_rational(const mpq_class& q) const;
    /// "3", "-2/5"; prime fields also accept any integer or fraction and reduce it.
    Scalar parse(std::string_view text) const;

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator, residues in [0, p). Mixing scalars of different fields in
/// one operation throws std::logic_error.
class Scalar {
public:
    Scalar() = default;
    // Residues never touch the GMP member, so copies skip it.
    Scalar(const Scalar& o) : r_(o.r_), p_(o.p_) {
        if (p_ == 0) q_ = o.q_;
    }
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& o) {
        r_ = o.r_;
        p_ = o.p_;
        if (p_ == 0) q_ = o.q_;
        return *this;
    }
    Scalar& operator=(Scalar&&) noexcept = default;

    static Scalar rational(mpq_class q);
    static Scalar residue(std::uint64_t value, std::uint64_t p);

    bool is_zero() const noexcept { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const noexcept { return p_ == 0 ? q_ == 1 : r_ == 1; }

    std::uint64_t modulus() const noexcept { return p_; }
    Field field() const;
    const mpq_class& rational_value() const noexcept { return q_; }
    std::uint64_t residue_value() const noexcept { return r_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    /// Adds a*b in place; the hot path of every bilinear kernel.
    void add_product(const Scalar& a, const Scalar& b);

    Scalar operator-() const;
    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;  // 0 => rational
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::uint64_t n);

}  // namespace altkron

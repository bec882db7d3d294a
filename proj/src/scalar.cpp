#include "altkron/scalar.hpp"

#include "altkron/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace altkron {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not a prime");
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
    if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(n)));
    __int128 r = static_cast<__int128>(n) % static_cast<__int128>(p_);
    if (r < 0) r += static_cast<__int128>(p_);
    return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
    if (p_ == 0) return Scalar::rational(q);
    std::uint64_t num = reduce_mpz(q.get_num(), p_);
    std::uint64_t den = reduce_mpz(q.get_den(), p_);
    if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    return Scalar::residue(mul_mod(num, pow_mod(den, p_ - 2, p_), p_), p_);
}

Scalar Field::parse(std::string_view text) const {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw InputError("empty scalar string");
    if (s.front() == '+') s.erase(s.begin());
    mpq_class q;
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw InputError("malformed scalar '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    q = mpq_class(n, d);
    q.canonicalize();
    try {
        return from_rational(q);
    } catch (const std::domain_error& e) {
        throw InputError(std::string("scalar '") + s + "': " + e.what());
    }
}

std::string Field::describe() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Scalar::rational(mpq_class q) {
    Scalar s;
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
    Scalar s;
    s.p_ = p;
    s.r_ = value % p;
    return s;
}

Field Scalar::field() const { return p_ == 0 ? Field::rational() : Field::prime(p_); }

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) throw std::logic_error("scalar field mismatch");
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= p_ || r_ < o.r_) r_ -= p_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        q_ -= o.q_;
    } else {
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (p_ - o.r_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        q_ *= o.q_;
    } else {
        r_ = mul_mod(r_, o.r_, p_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    check_same(a);
    check_same(b);
    if (p_ == 0) {
        if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
        // Integer fast path: both factors and the accumulator have denominator 1.
        if (a.q_.get_den() == 1 && b.q_.get_den() == 1 && q_.get_den() == 1) {
            mpz_addmul(q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
            return;
        }
        q_ += a.q_ * b.q_;
    } else {
        std::uint64_t t = mul_mod(a.r_, b.r_, p_);
        r_ += t;
        if (r_ >= p_ || r_ < t) r_ -= p_;
    }
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0) {
        s.q_ = -q_;
    } else if (r_ != 0) {
        s.r_ = p_ - r_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (p_ == 0) return rational(1 / q_);
    return residue(pow_mod(r_, p_ - 2, p_), p_);
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace altkron

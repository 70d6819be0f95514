#include "gorenstein/field.hpp"

#include <ostream>
#include <stdexcept>

#include "gorenstein/errors.hpp"

namespace gorenstein {

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p < 2^63, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p - 2, p);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_class mp;
    mpz_import(mp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mp.get_mpz_t());
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return count ? out : 0;
}

}  // namespace modp

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit n.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = modp::pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = modp::mul(x, x, n);
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
    if (p >= (std::uint64_t{1} << 63)) throw InputError("prime modulus must be below 2^63");
    if (!is_prime_u64(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

std::string Field::describe() const {
    return kind_ == Kind::Rational ? std::string("q") : "fp:" + std::to_string(p_);
}

Scalar::Scalar(Field f) : field_(f) {
    if (f.is_prime())
        value_ = std::uint64_t{0};
    else
        value_ = mpq_class(0);
}

Scalar::Scalar(Field f, long long v) : field_(f) {
    if (f.is_prime()) {
        long long m = v % static_cast<long long>(f.characteristic());
        if (m < 0) m += static_cast<long long>(f.characteristic());
        value_ = static_cast<std::uint64_t>(m);
    } else {
        value_ = mpq_class(mpz_class(static_cast<long>(v)));
    }
}

Scalar::Scalar(Field f, const mpz_class& num, const mpz_class& den) : field_(f) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (f.is_prime()) {
        std::uint64_t p = f.characteristic();
        std::uint64_t d = modp::reduce(den, p);
        if (d == 0) throw std::domain_error("denominator vanishes modulo p");
        value_ = modp::mul(modp::reduce(num, p), modp::inv(d, p), p);
    } else {
        mpq_class q(num, den);
        q.canonicalize();
        value_ = std::move(q);
    }
}

Scalar Scalar::from_residue(Field f, std::uint64_t r) {
    if (!f.is_prime()) throw std::logic_error("from_residue on a rational field");
    Scalar s(f);
    s.value_ = r % f.characteristic();
    return s;
}

bool Scalar::is_zero() const {
    if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) throw std::logic_error("residue() on a rational scalar");
    return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
    if (field_.is_prime()) throw std::logic_error("rational() on a prime-field scalar");
    return std::get<mpq_class>(value_);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw InputError("scalar field mismatch: " + field_.describe() + " vs " + o.field_.describe());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_prime()) {
        auto& v = std::get<std::uint64_t>(value_);
        v = modp::add(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_prime()) {
        auto& v = std::get<std::uint64_t>(value_);
        v = modp::sub(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_prime()) {
        auto& v = std::get<std::uint64_t>(value_);
        v = modp::mul(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(field_);
    r -= *this;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    Scalar r(*this);
    if (field_.is_prime()) {
        r.value_ = modp::inv(std::get<std::uint64_t>(value_), field_.characteristic());
    } else {
        mpq_class q = 1 / std::get<mpq_class>(value_);
        q.canonicalize();
        r.value_ = std::move(q);
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(std::get<std::uint64_t>(value_));
    return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace gorenstein

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace gorenstein {

/// Mersenne prime 2^61 - 1, the default modulus for randomized checks.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

bool is_prime_u64(std::uint64_t n);

/// Describes the exact field all scalars of one computation live in:
/// either Q (arbitrary precision) or F_p for a prime p < 2^63.
class Field {
public:
    enum class Kind { Rational, Prime };

    static Field rational() { return Field(Kind::Rational, 0); }
    /// Throws InputError unless p is prime and below 2^63.
    static Field prime(std::uint64_t p = kDefaultPrime);

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    std::uint64_t characteristic() const { return p_; }

    /// "q" or "fp:<p>", the same spelling the CLI accepts.
    std::string describe() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

/// An element of a Field. Rationals are kept canonical (reduced, positive
/// denominator); residues satisfy 0 <= r < p.
class Scalar {
public:
    explicit Scalar(Field f = Field::rational());
    Scalar(Field f, long long v);
    Scalar(Field f, const mpz_class& num, const mpz_class& den = 1);
    /// Prime-field scalar from a residue already reduced below p.
    static Scalar from_residue(Field f, std::uint64_t r);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue for prime-field scalars; throws for rationals.
    std::uint64_t residue() const;
    /// Value for rational scalars; throws for prime-field scalars.
    const mpq_class& rational() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "3/2", "-7", or the residue in decimal.
    std::string to_string() const;

private:
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

namespace modp {
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce(const mpz_class& v, std::uint64_t p);
}  // namespace modp

}  // namespace gorenstein

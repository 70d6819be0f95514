#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gorenstein/field.hpp"
#include "gorenstein/matrix.hpp"
#include "gorenstein/random.hpp"

namespace gorenstein {

/// Exponent vector of a monomial; its length is the ambient variable count.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
    Exponent(std::initializer_list<int> e) : e_(e) {}
    explicit Exponent(std::vector<int> e) : e_(std::move(e)) {}

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    int degree() const;
    const std::vector<int>& values() const { return e_; }

    /// Componentwise >=, i.e. `other` divides this monomial.
    bool divisible_by(const Exponent& other) const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a, const Exponent& b);

private:
    std::vector<int> e_;
};

/// Strict "a comes first" in descending graded-lex order (x1 > x2 > ... ).
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Strict "a comes first" in descending pure lex order.
struct LexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in a fixed number of variables over one field. The
/// same type serves for operators in R = K[x1..xn] and for forms in the dual
/// ring S = K[X1..Xn]; which role a value plays is up to the caller.
class Poly {
public:
    using Terms = std::map<Exponent, Scalar, GrlexGreater>;

    Poly(Field f, std::size_t nvars);

    static Poly constant(Field f, std::size_t nvars, const Scalar& c);
    /// The variable with 0-based index `var`.
    static Poly variable(Field f, std::size_t nvars, std::size_t var);
    static Poly monomial(Field f, const Exponent& e, const Scalar& c);
    /// Linear form sum_i coeffs[i] * x_{i+1}.
    static Poly linear(Field f, const std::vector<Scalar>& coeffs);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Maximal total degree; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    /// Common degree of all terms; nullopt if zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return homogeneous_degree().has_value(); }

    Scalar coefficient(const Exponent& e) const;
    /// Adds c * X^e, dropping the term if the result vanishes.
    void add_term(const Exponent& e, const Scalar& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    Poly scaled(const Scalar& c) const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    Scalar evaluate(const std::vector<Scalar>& point) const;

private:
    void check_compatible(const Poly& o) const;

    Field field_;
    std::size_t nvars_;
    Terms terms_;
};

Poly pow(const Poly& p, int k);

/// The differentiation action p∘F of an operator p in R on a form F in S
/// (plain partial derivatives, no divided powers). In prime-field mode the
/// characteristic must exceed deg F; otherwise InputError.
Poly diff_action(const Poly& op, const Poly& form);

/// Invertible linear substitution x_i -> sum_j m(i,j) x_j.
class LinearChange {
public:
    /// Throws InputError if `m` is not square or is singular.
    explicit LinearChange(ExactMatrix m);

    static LinearChange identity(Field f, std::size_t n);
    /// Uniformly random entries, resampled until invertible.
    static LinearChange random(Field f, std::size_t n, Rng& rng);

    const ExactMatrix& matrix() const { return m_; }
    std::size_t size() const { return m_.rows(); }
    LinearChange inverse() const;
    /// (a.then(b))(p) == b(a(p)).
    LinearChange then(const LinearChange& next) const;

private:
    ExactMatrix m_;
};

Poly apply_change(const LinearChange& g, const Poly& p);

/// Parses the polynomial grammar
///   poly   = term (('+'|'-') term)*
///   term   = [sign] [coefficient '*'] factor ('*' factor)*  |  [sign] coefficient
///   factor = ('X'|'x') index ['^' exponent]
/// with rational coefficients "a" or "a/b". Whitespace is insignificant.
/// Throws InputError carrying the character offset of the problem.
Poly parse_poly(std::string_view text, std::size_t nvars, const Field& field);

/// Largest variable index referenced in `text` (for inferring n); 0 if none.
std::size_t max_variable_index(std::string_view text);

/// Inverse of parse_poly: terms in descending graded-lex order, "0" for
/// the zero polynomial. In prime-field mode coefficients are residues in
/// the symmetric range (-p/2, p/2].
std::string format_poly(const Poly& p, char var = 'X');

/// Degree-1 form with independently uniform coefficients in F_p, resampled
/// until nonzero. Prime-field mode only.
Poly random_linear_form(std::size_t nvars, const Field& field, Rng& rng);

/// Monomials of total degree `degree` in descending graded-lex order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace gorenstein

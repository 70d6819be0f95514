#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gorenstein/duality.hpp"
#include "gorenstein/poly.hpp"

namespace gorenstein {

/// Four linearly independent quadrics in K[x1..x4]: the degree-2 part of an
/// ideal, up to the choice of basis.
class QuadricWeb {
public:
    /// Throws InputError unless all four are quadrics in 4 variables over one
    /// field and linearly independent.
    explicit QuadricWeb(std::array<Poly, 4> quadrics);

    const std::array<Poly, 4>& quadrics() const { return q_; }
    const Field& field() const { return q_[0].field(); }

    QuadricWeb transformed(const LinearChange& g) const;

private:
    std::array<Poly, 4> q_;
};

/// Parses "q1, q2, q3, q4" in the polynomial grammar (4 variables).
QuadricWeb parse_web(std::string_view text, const Field& field);
std::string format_web(const QuadricWeb& web);

enum class OrbitLabel { I, II, III, IV, V, VI, VII, VIII_x3x4, VIII_x3sq_x2x4, VIII_x3sq, IX, X, Unknown };

/// The twelve concrete labels (three for case VIII), in catalog order.
const std::vector<OrbitLabel>& all_orbit_labels();
std::string to_string(OrbitLabel label);
/// Case-insensitive; throws InputError on unknown names.
OrbitLabel parse_orbit_label(std::string_view name);

/// Representative generators, verbatim from the classification list.
QuadricWeb orbit_representative(OrbitLabel label, const Field& field);

/// dim [R/(web)]_t for t = 0..up_to.
std::vector<long> quadric_ideal_hf(const QuadricWeb& web, int up_to);

/// The two Borel-fixed sets of four quadratic monomials.
std::vector<Exponent> generic_gin2_set();
std::vector<Exponent> special_gin2_set();

struct Gin2Result {
    std::vector<Exponent> monomials;  ///< pivot monomials, lex-descending
    int trials = 0;
    int agreeing_trials = 0;  ///< trials that produced `monomials`
    std::uint64_t seed = 0;
};

/// Degree-2 part of the lex generic initial ideal: for each trial, apply a
/// random change of coordinates and take the pivot monomials of the 4x10
/// coefficient matrix; return the lex-greatest outcome.
Gin2Result gin2(const QuadricWeb& web, int trials, std::uint64_t seed);

/// Squarefree pattern of a determinant restricted to a random line:
/// multiplicity -> total degree of the factors with that multiplicity.
/// Empty with `vanishes` set when the determinant is identically zero.
struct DiscriminantPattern {
    bool vanishes = false;
    std::map<int, int> by_multiplicity;
    std::string to_string() const;
    friend bool operator==(const DiscriminantPattern&, const DiscriminantPattern&) = default;
};

struct WebInvariants {
    std::vector<long> hf;          ///< quadric_ideal_hf up to degree 5
    int essential_variables = 0;   ///< dim of the span of all first partials
    int generic_rank = 0;          ///< rank of a random member
    DiscriminantPattern web_discriminant;   ///< det of members on a random pencil
    /// Same pattern for the pencil of dual conics orthogonal to the web;
    /// only defined when the web lives in 3 essential variables.
    std::optional<DiscriminantPattern> dual_discriminant;
};

WebInvariants web_invariants(const QuadricWeb& web, std::uint64_t seed);

struct Classification {
    OrbitLabel label = OrbitLabel::Unknown;
    WebInvariants invariants;
    Gin2Result gin;
};

/// Orbit label from computable invariants. Throws HypothesisError if the
/// lex gin of the web is the generic set (the classification does not
/// apply). Prime-field mode only.
Classification classify_web(const QuadricWeb& web, std::uint64_t seed);

/// Basis of the degree-`degree` part of the inverse system (web)^⊥.
std::vector<Poly> inverse_system_basis(const QuadricWeb& web, int degree);

/// Uniformly random nonzero element of (web)^⊥ in the given degree.
/// Throws HypothesisError if that space is zero.
DualForm inverse_system_sample(const QuadricWeb& web, int degree, Rng& rng);

/// Sum of `count` powers L^degree of random linear forms in n variables;
/// for general forms the Hilbert function is min(count, dim R_i, dim R_{d-i}).
DualForm power_sum_form(std::size_t nvars, int count, int degree, const Field& field, Rng& rng);

/// Sum of d powers L^d of points on a conic in X2..X4 plus one power of a
/// general linear form, under a random change of coordinates. For odd
/// d = 2m+1 the h-vector is (1,4,6,8,..,2m+2,2m+2,..,8,6,4,1) and the
/// quadric web of the algebra has the generic lex gin. Requires d >= 2.
DualForm conic_power_sum_form(int d, const Field& field, Rng& rng);

/// sum_{i=1}^d X_i X_{d+1}^{d-i} X_{d+2}^{i-1}, the trivial extension of
/// K[x,y]/(x,y)^d by its canonical module. Requires d >= 3.
DualForm perazzo_dual_form(int d, const Field& field);

/// Parametric quintic of orbit V with divided-power coefficients a_1..a_9.
DualForm parametric_case_v(const std::vector<Scalar>& a);
/// Parametric quintic of orbit VI with divided-power coefficients a_1..a_9.
DualForm parametric_case_vi(const std::vector<Scalar>& a);

struct ExceptionalExample {
    HVector h;
    DualForm form;
    std::string origin;
};

/// Gorenstein h-vectors of Sperner number d + 2 known to admit algebras
/// failing the WLP, each with a stored dual form. Every entry is verified
/// (exact h-vector, WLP failure) before returning; InvariantError otherwise.
std::vector<ExceptionalExample> exceptional_hvector_examples(const Field& field = Field::prime());

}  // namespace gorenstein

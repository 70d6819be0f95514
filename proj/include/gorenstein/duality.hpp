#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gorenstein/matrix.hpp"
#include "gorenstein/poly.hpp"

namespace gorenstein {

/// A nonzero homogeneous form F in the dual ring S, presenting the artinian
/// Gorenstein algebra A_F = R / Ann_R(F). Its degree is the socle degree.
/// Degree 0 (a nonzero constant) presents A = K.
class DualForm {
public:
    /// Throws InputError if `form` is zero or inhomogeneous.
    explicit DualForm(Poly form);

    const Poly& form() const { return form_; }
    int degree() const { return degree_; }
    std::size_t nvars() const { return form_.nvars(); }
    const Field& field() const { return form_.field(); }

    friend bool operator==(const DualForm&, const DualForm&) = default;

private:
    Poly form_;
    int degree_;
};

/// Result of contracting a dual form; nullopt stands for the zero form,
/// i.e. the zero algebra.
using Contraction = std::optional<DualForm>;

/// Hilbert function h_0..h_d of an algebra presented by a dual form.
class HVector {
public:
    /// Throws InputError if empty or any entry is not positive.
    explicit HVector(std::vector<long> entries);

    const std::vector<long>& entries() const { return h_; }
    std::size_t size() const { return h_.size(); }
    long operator[](std::size_t i) const { return h_[i]; }
    /// h_i, or 0 outside 0..d.
    long at_or_zero(long i) const;
    int socle_degree() const { return static_cast<int>(h_.size()) - 1; }
    long sperner_number() const;
    bool is_symmetric() const;

    friend bool operator==(const HVector&, const HVector&) = default;

private:
    std::vector<long> h_;
};

/// Cat^i(F): rows indexed by degree-i monomials, columns by degree-(d-i)
/// monomials (both descending graded-lex), entry (m_u m_v)∘F.
ExactMatrix catalecticant(const DualForm& f, int i);

/// (rank Cat^0(F), ..., rank Cat^d(F)). `threads` > 1 ranks the degrees
/// concurrently; the result does not depend on it.
HVector hilbert_function(const DualForm& f, int threads = 1);

/// Basis of [Ann_R F]_i, the kernel of R_i -> S_{d-i}, p |-> p∘F.
std::vector<Poly> ann_degree(const DualForm& f, int i);

/// Degree-i monomials whose catalecticant rows are independent, chosen
/// greedily in descending graded-lex order. Size is h_i.
std::vector<Exponent> quotient_basis(const DualForm& f, int i);

/// g∘F for homogeneous g of degree <= d: the dual generator of R/(Ann F : g).
Contraction contract(const Poly& g, const DualForm& f);

/// Hilbert function h_0 of a contraction, treating the zero form as the
/// zero algebra.
std::vector<long> hilbert_function_or_zero(const Contraction& c);

/// Hilbert function of C = A/(l) for linear l, via the exact sequence
/// 0 -> B(-1) -> A -> C -> 0 with B dual to l∘F. Entries 0..d; may end in
/// zeros.
std::vector<long> hf_modulo_linear(const DualForm& f, const Poly& l);

}  // namespace gorenstein

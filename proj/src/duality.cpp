#include "gorenstein/duality.hpp"

#include <algorithm>
#include <future>

#include "gorenstein/errors.hpp"

namespace gorenstein {

namespace {

int checked_degree(const Poly& p) {
    if (p.is_zero()) throw InputError("dual form must be nonzero");
    auto d = p.homogeneous_degree();
    if (!d) throw InputError("dual form must be homogeneous");
    return *d;
}

// Product of factorials of the exponents, as a field element.
Scalar factorial_weight(const Field& f, const Exponent& e) {
    Scalar w(f, 1);
    for (std::size_t k = 0; k < e.size(); ++k)
        for (int j = 2; j <= e[k]; ++j) w *= Scalar(f, j);
    return w;
}

}  // namespace

DualForm::DualForm(Poly form) : form_(std::move(form)), degree_(checked_degree(form_)) {
    if (form_.field().is_prime() && static_cast<std::uint64_t>(degree_) >= form_.field().characteristic())
        throw InputError("prime-field characteristic must exceed the socle degree");
}

HVector::HVector(std::vector<long> entries) : h_(std::move(entries)) {
    if (h_.empty()) throw InputError("h-vector must be nonempty");
    for (long v : h_)
        if (v <= 0) throw InputError("h-vector entries must be positive");
}

long HVector::at_or_zero(long i) const {
    return i < 0 || i >= static_cast<long>(h_.size()) ? 0 : h_[static_cast<std::size_t>(i)];
}

long HVector::sperner_number() const { return *std::max_element(h_.begin(), h_.end()); }

bool HVector::is_symmetric() const { return std::equal(h_.begin(), h_.end(), h_.rbegin()); }

ExactMatrix catalecticant(const DualForm& f, int i) {
    const int d = f.degree();
    if (i < 0 || i > d) throw InputError("catalecticant degree out of range 0..d");
    const auto rows = monomials_of_degree(f.nvars(), i);
    const auto cols = monomials_of_degree(f.nvars(), d - i);
    ExactMatrix m(f.field(), rows.size(), cols.size());
    // (x^u x^v)∘F only sees the coefficient of X^(u+v), scaled by (u+v)!.
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Exponent e = rows[r] + cols[c];
            Scalar coeff = f.form().coefficient(e);
            if (!coeff.is_zero()) m(r, c) = coeff * factorial_weight(f.field(), e);
        }
    return m;
}

HVector hilbert_function(const DualForm& f, int threads) {
    const int d = f.degree();
    std::vector<long> h(static_cast<std::size_t>(d) + 1);
    // Rank symmetry lets us rank only the smaller half.
    auto rank_at = [&f](int i) { return static_cast<long>(rank(catalecticant(f, i))); };
    if (threads > 1) {
        std::vector<std::future<long>> jobs;
        for (int i = 0; i <= d / 2; ++i) jobs.push_back(std::async(std::launch::async, rank_at, i));
        for (int i = 0; i <= d / 2; ++i) h[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].get();
    } else {
        for (int i = 0; i <= d / 2; ++i) h[static_cast<std::size_t>(i)] = rank_at(i);
    }
    for (int i = d / 2 + 1; i <= d; ++i) h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(d - i)];
    return HVector(std::move(h));
}

std::vector<Poly> ann_degree(const DualForm& f, int i) {
    if (i < 0) throw InputError("negative degree");
    const auto mons = monomials_of_degree(f.nvars(), i);
    std::vector<Poly> basis;
    if (i > f.degree()) {
        for (const auto& m : mons) basis.push_back(Poly::monomial(f.field(), m, Scalar(f.field(), 1)));
        return basis;
    }
    // Columns of Cat^i(F)^T are the images of the degree-i monomials.
    const ExactMatrix map = catalecticant(f, i).transpose();
    for (const auto& v : kernel(map)) {
        Poly p(f.field(), f.nvars());
        for (std::size_t k = 0; k < mons.size(); ++k) p.add_term(mons[k], v[k]);
        basis.push_back(std::move(p));
    }
    return basis;
}

std::vector<Exponent> quotient_basis(const DualForm& f, int i) {
    const auto mons = monomials_of_degree(f.nvars(), i);
    std::vector<Exponent> out;
    for (auto r : greedy_independent_rows(catalecticant(f, i))) out.push_back(mons[r]);
    return out;
}

Contraction contract(const Poly& g, const DualForm& f) {
    auto s = g.homogeneous_degree();
    if (!s) throw InputError("contract: operator must be a nonzero homogeneous polynomial");
    if (*s > f.degree()) throw InputError("contract: operator degree exceeds the socle degree");
    Poly r = diff_action(g, f.form());
    if (r.is_zero()) return std::nullopt;
    return DualForm(std::move(r));
}

std::vector<long> hilbert_function_or_zero(const Contraction& c) {
    if (!c) return {};
    return hilbert_function(*c).entries();
}

std::vector<long> hf_modulo_linear(const DualForm& f, const Poly& l) {
    if (l.homogeneous_degree() != 1) throw InputError("hf_modulo_linear: l must be a nonzero linear form");
    const auto ha = hilbert_function(f).entries();
    const auto hb = hilbert_function_or_zero(contract(l, f));
    std::vector<long> hc(ha.size());
    for (std::size_t i = 0; i < ha.size(); ++i) {
        const long b = i >= 1 && i - 1 < hb.size() ? hb[i - 1] : 0;
        hc[i] = ha[i] - b;
        if (hc[i] < 0) throw InvariantError("negative dimension in A/(l)");
    }
    return hc;
}

}  // namespace gorenstein

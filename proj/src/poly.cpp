#include "gorenstein/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gorenstein/errors.hpp"

namespace gorenstein {

int Exponent::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Exponent::divisible_by(const Exponent& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] < other.e_[i]) return false;
    return true;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return LexGreater{}(a, b);
}

bool LexGreater::operator()(const Exponent& a, const Exponent& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Exponent> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    Exponent cur(nvars);
    // Depth-first with the largest power of the earliest variable first
    // yields descending lex order within one degree.
    auto rec = [&](auto&& self, std::size_t var, int left) -> void {
        if (var + 1 == nvars) {
            cur[var] = left;
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[var] = k;
            self(self, var + 1, left - k);
        }
        cur[var] = 0;
    };
    if (degree >= 0) rec(rec, 0, degree);
    return out;
}

// ---- Poly ------------------------------------------------------------------

Poly::Poly(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}

Poly Poly::constant(Field f, std::size_t nvars, const Scalar& c) {
    Poly p(f, nvars);
    p.add_term(Exponent(nvars), c);
    return p;
}

Poly Poly::variable(Field f, std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw InputError("variable index out of range");
    Exponent e(nvars);
    e[var] = 1;
    return monomial(f, e, Scalar(f, 1));
}

Poly Poly::monomial(Field f, const Exponent& e, const Scalar& c) {
    Poly p(f, e.size());
    p.add_term(e, c);
    return p;
}

Poly Poly::linear(Field f, const std::vector<Scalar>& coeffs) {
    Poly p(f, coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size());
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

std::optional<int> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();  // grlex puts the top degree first
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int top = terms_.begin()->first.degree();
    if (terms_.rbegin()->first.degree() != top) return std::nullopt;
    return top;
}

Scalar Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(field_) : it->second;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != nvars_) throw InputError("exponent length does not match variable count");
    if (!(c.field() == field_)) throw InputError("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_)
        throw InputError("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                         std::to_string(o.nvars_));
    if (!(field_ == o.field_)) throw InputError("field mismatch: " + field_.describe() + " vs " + o.field_.describe());
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.field_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw InputError("evaluation point has wrong length");
    Scalar total(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

Poly pow(const Poly& p, int k) {
    if (k < 0) throw InputError("negative power");
    Poly r = Poly::constant(p.field(), p.nvars(), Scalar(p.field(), 1));
    Poly base = p;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Poly diff_action(const Poly& op, const Poly& form) {
    if (op.nvars() != form.nvars()) throw InputError("diff_action: variable count mismatch");
    if (!(op.field() == form.field())) throw InputError("diff_action: field mismatch");
    const Field& f = form.field();
    if (f.is_prime() && form.degree() && static_cast<std::uint64_t>(*form.degree()) >= f.characteristic())
        throw InputError("diff_action: characteristic must exceed the degree of the form");
    Poly out(f, form.nvars());
    for (const auto& [eo, co] : op.terms()) {
        for (const auto& [ef, cf] : form.terms()) {
            if (!ef.divisible_by(eo)) continue;
            Scalar c = co * cf;
            for (std::size_t i = 0; i < ef.size(); ++i)
                for (int k = 0; k < eo[i]; ++k) c *= Scalar(f, ef[i] - k);
            out.add_term(ef - eo, c);
        }
    }
    return out;
}

// ---- LinearChange ------------------------------------------------------------

LinearChange::LinearChange(ExactMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw InputError("linear change must be square");
    if (determinant(m_).is_zero()) throw InputError("linear change is singular");
}

LinearChange LinearChange::identity(Field f, std::size_t n) { return LinearChange(ExactMatrix::identity(f, n)); }

LinearChange LinearChange::random(Field f, std::size_t n, Rng& rng) {
    for (;;) {
        ExactMatrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(f);
        if (!determinant(m).is_zero()) return LinearChange(std::move(m));
    }
}

LinearChange LinearChange::inverse() const {
    // g(x)_i = sum_j m_ij x_j; composing substitutions multiplies matrices
    // in the order g then h -> M_g M_h, so the inverse is the matrix inverse.
    return LinearChange(gorenstein::inverse(m_));
}

LinearChange LinearChange::then(const LinearChange& next) const { return LinearChange(m_ * next.m_); }

Poly apply_change(const LinearChange& g, const Poly& p) {
    const std::size_t n = p.nvars();
    if (g.size() != n) throw InputError("linear change dimension does not match polynomial");
    const Field& f = p.field();
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly li(f, n);
        for (std::size_t j = 0; j < n; ++j) {
            Exponent e(n);
            e[j] = 1;
            li.add_term(e, g.matrix()(i, j));
        }
        images.push_back(std::move(li));
    }
    std::vector<std::vector<Poly>> powers(n);
    auto power = [&](std::size_t i, int k) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(f, n, Scalar(f, 1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    Poly out(f, n);
    for (const auto& [e, c] : p.terms()) {
        Poly t = Poly::constant(f, n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

// ---- text grammar ------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(std::string_view s, std::size_t n, const Field& f) : s_(s), n_(n), f_(f) {}

    Poly parse() {
        Poly out(f_, n_);
        skip();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            parse_term(out, sign);
            first = false;
            skip();
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + what);
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool is_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    std::string digits() {
        skip();
        if (!is_digit()) fail("expected digits");
        std::string d;
        while (is_digit()) d += s_[pos_++];
        return d;
    }

    void parse_term(Poly& out, int sign) {
        skip();
        mpz_class num = 1, den = 1;
        if (is_digit()) {
            num = mpz_class(digits());
            skip();
            if (peek() == '/') {
                ++pos_;
                const std::size_t at = pos_;
                den = mpz_class(digits());
                if (den == 0) {
                    pos_ = at;
                    fail("malformed rational: zero denominator");
                }
            }
            skip();
            if (peek() != '*') {
                // bare constant term
                out.add_term(Exponent(n_), Scalar(f_, num * sign, den));
                return;
            }
            ++pos_;
        }
        Exponent e(n_);
        for (;;) {
            skip();
            parse_factor(e);
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        out.add_term(e, Scalar(f_, num * sign, den));
    }

    void parse_factor(Exponent& e) {
        if (peek() != 'X' && peek() != 'x') fail("expected variable 'X<i>' or 'x<i>'");
        ++pos_;
        if (!is_digit()) fail("expected variable index");
        const std::size_t at = pos_;
        std::string d;
        while (is_digit()) d += s_[pos_++];
        if (d.size() > 9) {
            pos_ = at;
            fail("variable index out of range");
        }
        const long idx = std::stol(d);
        if (idx < 1 || static_cast<std::size_t>(idx) > n_) {
            pos_ = at;
            fail("variable index " + d + " out of range 1.." + std::to_string(n_));
        }
        int power = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            const std::size_t pat = pos_;
            std::string pd = digits();
            if (pd.size() > 6 || std::stol(pd) < 1) {
                pos_ = pat;
                fail("exponent must be a positive integer");
            }
            power = static_cast<int>(std::stol(pd));
        }
        e[static_cast<std::size_t>(idx - 1)] += power;
    }

    std::string_view s_;
    std::size_t n_;
    const Field& f_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars, const Field& field) {
    return Parser(text, nvars, field).parse();
}

std::size_t max_variable_index(std::string_view text) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if ((text[i] == 'X' || text[i] == 'x') && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1, v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000000)
                v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
            best = std::max(best, v);
            i = j - 1;
        }
    }
    return best;
}

std::string format_poly(const Poly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string coeff = c.to_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        // Residues above p/2 read better as negatives.
        if (c.field().is_prime() && c.residue() > c.field().characteristic() / 2) {
            negative = true;
            coeff = std::to_string(c.field().characteristic() - c.residue());
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const bool constant = e.degree() == 0;
        if (constant) {
            os << coeff;
            continue;
        }
        if (coeff != "1") os << coeff << '*';
        bool first_factor = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_factor) os << '*';
            first_factor = false;
            os << var << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

Poly random_linear_form(std::size_t nvars, const Field& field, Rng& rng) {
    if (!field.is_prime()) throw InputError("random linear forms require prime-field mode");
    for (;;) {
        std::vector<Scalar> c;
        c.reserve(nvars);
        for (std::size_t i = 0; i < nvars; ++i) c.push_back(rng.uniform(field));
        Poly l = Poly::linear(field, c);
        if (!l.is_zero()) return l;
    }
}

}  // namespace gorenstein

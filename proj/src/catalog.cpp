#include "gorenstein/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gorenstein/errors.hpp"
#include "gorenstein/lefschetz.hpp"

namespace gorenstein {

namespace {

const std::vector<Exponent>& quadric_monomials() {
    static const std::vector<Exponent> m = monomials_of_degree(4, 2);
    return m;
}

ExactMatrix coefficient_matrix(const std::array<Poly, 4>& q) {
    const auto& mons = quadric_monomials();
    ExactMatrix m(q[0].field(), 4, mons.size());
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) m(r, c) = q[r].coefficient(mons[c]);
    return m;
}

void require_prime(const Field& f, const char* what) {
    if (!f.is_prime())
        throw InputError(std::string(what) + " is randomized and requires prime-field mode (use --field fp)");
}

// Symmetric matrix of second partials.
ExactMatrix second_partials(const Poly& q) {
    const Field& f = q.field();
    ExactMatrix h(f, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Exponent e(4);
            e[i] += 1;
            e[j] += 1;
            Scalar c = q.coefficient(e);
            if (i == j) c += c;
            h(i, j) = c;
        }
    return h;
}

ExactMatrix combine(const std::vector<ExactMatrix>& ms, const std::vector<Scalar>& c) {
    ExactMatrix out(ms[0].field(), ms[0].rows(), ms[0].cols());
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t s = 0; s < out.cols(); ++s) out(r, s) += c[k] * ms[k](r, s);
    return out;
}

std::vector<Scalar> random_vector(const Field& f, std::size_t n, Rng& rng) {
    std::vector<Scalar> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(rng.uniform(f));
    return v;
}

// Dense univariate polynomials over F_p, lowest coefficient first.
using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly derivative(const UPoly& a, std::uint64_t p) {
    UPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(modp::mul(a[i], i % p, p));
    trim(d);
    return d;
}

// Quotient and remainder; b nonzero.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b, std::uint64_t p) {
    trim(a);
    if (udeg(a) < udeg(b)) return {UPoly{}, a};
    UPoly q(a.size() - b.size() + 1, 0);
    std::uint64_t lead_inv = modp::inv(b.back(), p);
    for (int i = udeg(a) - udeg(b); i >= 0; --i) {
        std::uint64_t c = modp::mul(a[i + b.size() - 1], lead_inv, p);
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] = modp::sub(a[i + j], modp::mul(c, b[j], p), p);
    }
    trim(a);
    trim(q);
    return {q, a};
}

UPoly monic(UPoly a, std::uint64_t p) {
    trim(a);
    if (a.empty()) return a;
    std::uint64_t li = modp::inv(a.back(), p);
    for (auto& c : a) c = modp::mul(c, li, p);
    return a;
}

UPoly ugcd(UPoly a, UPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

// Squarefree decomposition (Yun); valid since p exceeds the degree.
std::map<int, int> squarefree_pattern(const UPoly& f, std::uint64_t p) {
    std::map<int, int> out;
    UPoly c = ugcd(f, derivative(f, p), p);
    UPoly w = divmod(f, c, p).first;
    for (int mult = 1; udeg(w) > 0; ++mult) {
        UPoly y = ugcd(w, c, p);
        UPoly z = divmod(w, y, p).first;
        if (udeg(z) > 0) out[mult] += udeg(z);
        w = y;
        c = divmod(c, y, p).first;
    }
    return out;
}

// Pattern of lambda |-> det(a + lambda b) on the projective line, where the
// binary form has degree a.rows().
DiscriminantPattern pencil_pattern(const ExactMatrix& a, const ExactMatrix& b) {
    const Field& f = a.field();
    const std::uint64_t p = f.characteristic();
    const std::size_t r = a.rows();
    ExactMatrix vander(f, r + 1, r + 1);
    ExactMatrix values(f, r + 1, 1);
    for (std::size_t t = 0; t <= r; ++t) {
        Scalar lambda(f, static_cast<long long>(t));
        Scalar power(f, 1);
        for (std::size_t k = 0; k <= r; ++k) {
            vander(t, k) = power;
            power *= lambda;
        }
        ExactMatrix m(f, r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) m(i, j) = a(i, j) + lambda * b(i, j);
        values(t, 0) = determinant(m);
    }
    ExactMatrix coeffs = inverse(vander) * values;
    UPoly poly;
    for (std::size_t k = 0; k <= r; ++k) poly.push_back(coeffs(k, 0).residue());
    trim(poly);

    DiscriminantPattern out;
    if (poly.empty()) {
        out.vanishes = true;
        return out;
    }
    out.by_multiplicity = squarefree_pattern(poly, p);
    int at_infinity = static_cast<int>(r) - udeg(poly);
    if (at_infinity > 0) out.by_multiplicity[at_infinity] += 1;
    return out;
}

struct Restriction {
    int essential = 0;
    std::vector<ExactMatrix> blocks;  // r x r Gram matrices in essential coordinates
};

Restriction restrict_to_essential(const std::vector<ExactMatrix>& hs) {
    const Field& f = hs[0].field();
    ExactMatrix stacked(f, 4, 16);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) stacked(i, 4 * k + j) = hs[k](i, j);
    std::vector<std::size_t> span = pivot_columns(stacked);
    const std::size_t r = span.size();

    // Complete the spanning columns to a basis with standard vectors.
    ExactMatrix extended(f, 4, r + 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t c = 0; c < r; ++c) extended(i, c) = stacked(i, span[c]);
        extended(i, r + i) = Scalar(f, 1);
    }
    std::vector<std::size_t> basis_cols = pivot_columns(extended);
    ExactMatrix q(f, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t c = 0; c < 4; ++c) q(i, c) = extended(i, basis_cols[c]);
    ExactMatrix qi = inverse(q);
    ExactMatrix qit = qi.transpose();

    Restriction out;
    out.essential = static_cast<int>(r);
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (const auto& h : hs) out.blocks.push_back((qi * h * qit).select(idx, idx));
    return out;
}

// The 2-dimensional space of symmetric 3x3 matrices P with tr(N P) = 0 for
// every web member N.
std::vector<ExactMatrix> dual_conics(const std::vector<ExactMatrix>& blocks) {
    const Field& f = blocks[0].field();
    static const std::array<std::pair<int, int>, 6> slots{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
    ExactMatrix eq(f, blocks.size(), 6);
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (std::size_t s = 0; s < 6; ++s) {
            auto [a, b] = slots[s];
            Scalar c = blocks[k](a, b);
            if (a != b) c += c;
            eq(k, s) = c;
        }
    std::vector<ExactMatrix> out;
    for (const auto& v : kernel(eq)) {
        ExactMatrix m(f, 3, 3);
        for (std::size_t s = 0; s < 6; ++s) {
            auto [a, b] = slots[s];
            m(a, b) = v[s];
            m(b, a) = v[s];
        }
        out.push_back(m);
    }
    return out;
}

const std::vector<long> kHfSix{1, 4, 6, 6, 6, 6};
const std::vector<long> kHfLinear{1, 4, 6, 7, 8, 9};
const std::vector<long> kHfEven{1, 4, 6, 8, 10, 12};

DiscriminantPattern pattern(std::initializer_list<std::pair<const int, int>> entries) {
    DiscriminantPattern p;
    p.by_multiplicity = std::map<int, int>(entries);
    return p;
}

OrbitLabel decide(const WebInvariants& inv) {
    const auto& w = inv.web_discriminant;
    if (inv.essential_variables == 4) {
        if (inv.hf == kHfSix) {
            if (w == pattern({{1, 2}, {2, 1}})) return OrbitLabel::VIII_x3x4;
            if (w == pattern({{1, 1}, {3, 1}})) return OrbitLabel::VIII_x3sq_x2x4;
        } else if (inv.hf == kHfEven) {
            if (w == pattern({{2, 2}})) return OrbitLabel::I;
            if (w == pattern({{4, 1}})) return OrbitLabel::IX;
        }
        return OrbitLabel::Unknown;
    }
    if (inv.essential_variables != 3) return OrbitLabel::Unknown;
    if (inv.hf == kHfEven) {
        if (w == pattern({{1, 3}})) return OrbitLabel::VII;
        if (w == pattern({{1, 1}, {2, 1}})) return OrbitLabel::X;
        return OrbitLabel::Unknown;
    }
    if (!inv.dual_discriminant) return OrbitLabel::Unknown;
    const auto& d = *inv.dual_discriminant;
    if (inv.hf == kHfSix) {
        if (d.vanishes) return OrbitLabel::VIII_x3sq;
        if (d == pattern({{1, 3}})) return OrbitLabel::II;
        if (d == pattern({{1, 1}, {2, 1}})) return OrbitLabel::III;
        if (d == pattern({{3, 1}})) return OrbitLabel::IV;
    } else if (inv.hf == kHfLinear) {
        if (d == pattern({{3, 1}})) return OrbitLabel::V;
        if (d == pattern({{1, 1}, {2, 1}})) return OrbitLabel::VI;
    }
    return OrbitLabel::Unknown;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

Scalar factorial_of(const Field& f, const Exponent& e) {
    Scalar out(f, 1);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 2; k <= e[i]; ++k) out *= Scalar(f, k);
    return out;
}

DualForm divided_power_form(const std::vector<Scalar>& a, const std::vector<std::pair<int, Exponent>>& terms) {
    if (a.size() != 9) throw InputError("parametric family takes exactly 9 coefficients a_1..a_9");
    const Field& f = a[0].field();
    Poly out(f, 4);
    for (const auto& [k, e] : terms) out.add_term(e, a[k - 1] / factorial_of(f, e));
    return DualForm(out);
}

std::vector<std::pair<int, Exponent>> shared_tail() {
    return {{2, {1, 0, 0, 4}}, {3, {0, 1, 0, 4}}, {4, {0, 0, 5, 0}}, {5, {0, 0, 4, 1}}, {6, {0, 0, 3, 2}},
            {7, {0, 0, 2, 3}}, {8, {0, 0, 1, 4}}, {9, {0, 0, 0, 5}}};
}

}  // namespace

QuadricWeb::QuadricWeb(std::array<Poly, 4> quadrics) : q_(std::move(quadrics)) {
    for (const auto& q : q_) {
        if (q.nvars() != 4) throw InputError("web quadrics must live in 4 variables");
        if (!(q.field() == q_[0].field())) throw InputError("web quadrics must share one field");
        if (q.homogeneous_degree() != 2) throw InputError("web generators must be nonzero quadratic forms");
    }
    if (rank(coefficient_matrix(q_)) != 4) throw InputError("web quadrics are linearly dependent");
}

QuadricWeb QuadricWeb::transformed(const LinearChange& g) const {
    std::array<Poly, 4> out = q_;
    for (auto& q : out) q = apply_change(g, q);
    return QuadricWeb(std::move(out));
}

QuadricWeb parse_web(std::string_view text, const Field& field) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 4)
        throw InputError("a web needs exactly four comma-separated quadrics, got " + std::to_string(parts.size()));
    std::array<Poly, 4> q{Poly(field, 4), Poly(field, 4), Poly(field, 4), Poly(field, 4)};
    for (std::size_t k = 0; k < 4; ++k) q[k] = parse_poly(parts[k], 4, field);
    return QuadricWeb(std::move(q));
}

std::string format_web(const QuadricWeb& web) {
    std::string out;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k) out += ", ";
        out += format_poly(web.quadrics()[k], 'x');
    }
    return out;
}

const std::vector<OrbitLabel>& all_orbit_labels() {
    static const std::vector<OrbitLabel> labels{
        OrbitLabel::I,         OrbitLabel::II,  OrbitLabel::III,          OrbitLabel::IV,
        OrbitLabel::V,         OrbitLabel::VI,  OrbitLabel::VII,          OrbitLabel::VIII_x3x4,
        OrbitLabel::VIII_x3sq_x2x4, OrbitLabel::VIII_x3sq, OrbitLabel::IX, OrbitLabel::X};
    return labels;
}

std::string to_string(OrbitLabel label) {
    switch (label) {
        case OrbitLabel::I: return "I";
        case OrbitLabel::II: return "II";
        case OrbitLabel::III: return "III";
        case OrbitLabel::IV: return "IV";
        case OrbitLabel::V: return "V";
        case OrbitLabel::VI: return "VI";
        case OrbitLabel::VII: return "VII";
        case OrbitLabel::VIII_x3x4: return "VIII_x3x4";
        case OrbitLabel::VIII_x3sq_x2x4: return "VIII_x3sq_x2x4";
        case OrbitLabel::VIII_x3sq: return "VIII_x3sq";
        case OrbitLabel::IX: return "IX";
        case OrbitLabel::X: return "X";
        case OrbitLabel::Unknown: return "Unknown";
    }
    return "Unknown";
}

OrbitLabel parse_orbit_label(std::string_view name) {
    std::string want = lower(name);
    for (OrbitLabel l : all_orbit_labels())
        if (lower(to_string(l)) == want) return l;
    throw InputError("unknown orbit label '" + std::string(name) + "'");
}

QuadricWeb orbit_representative(OrbitLabel label, const Field& field) {
    const char* text = nullptr;
    switch (label) {
        case OrbitLabel::I: text = "x1*x3, x1*x4, x2*x3, x2*x4"; break;
        case OrbitLabel::II: text = "x1^2, x2^2, x3^2, x1*x2 + x1*x3 + x2*x3"; break;
        case OrbitLabel::III: text = "x1^2, x2^2, x3^2, x1*x3 + x2*x3"; break;
        case OrbitLabel::IV: text = "x1^2, x1*x2, x1*x3 - x2^2, x3^2"; break;
        case OrbitLabel::V: text = "x1^2, x1*x2, x1*x3 - x2^2, x2*x3"; break;
        case OrbitLabel::VI: text = "x1^2, x1*x3, x2^2, x2*x3"; break;
        case OrbitLabel::VII: text = "x1^2, x1*x2, x1*x3, x2*x3"; break;
        case OrbitLabel::VIII_x3x4: text = "x1^2, x1*x2, x2^2, x3*x4"; break;
        case OrbitLabel::VIII_x3sq_x2x4: text = "x1^2, x1*x2, x2^2, x3^2 + x2*x4"; break;
        case OrbitLabel::VIII_x3sq: text = "x1^2, x1*x2, x2^2, x3^2"; break;
        case OrbitLabel::IX: text = "x1^2, x1*x2, x2^2, x1*x4 - x2*x3"; break;
        case OrbitLabel::X: text = "x1^2, x1*x2, x2^2, x1*x3"; break;
        case OrbitLabel::Unknown: throw InputError("no representative for the Unknown label");
    }
    return parse_web(text, field);
}

std::vector<long> quadric_ideal_hf(const QuadricWeb& web, int up_to) {
    if (up_to < 0) throw InputError("quadric_ideal_hf: up_to must be non-negative");
    const Field& f = web.field();
    std::vector<long> out;
    for (int t = 0; t <= up_to; ++t) {
        std::vector<Exponent> cols = monomials_of_degree(4, t);
        if (t < 2) {
            out.push_back(static_cast<long>(cols.size()));
            continue;
        }
        std::map<Exponent, std::size_t, GrlexGreater> index;
        for (std::size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;
        std::vector<Exponent> mults = monomials_of_degree(4, t - 2);
        ExactMatrix m(f, 4 * mults.size(), cols.size());
        std::size_t row = 0;
        for (const auto& q : web.quadrics())
            for (const auto& u : mults) {
                for (const auto& [e, c] : q.terms()) m(row, index.at(e + u)) += c;
                ++row;
            }
        out.push_back(static_cast<long>(cols.size() - rank(m)));
    }
    return out;
}

std::vector<Exponent> generic_gin2_set() { return {{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}; }
std::vector<Exponent> special_gin2_set() { return {{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 2, 0, 0}}; }

Gin2Result gin2(const QuadricWeb& web, int trials, std::uint64_t seed) {
    require_prime(web.field(), "gin2");
    if (trials < 1) throw InputError("gin2: trials must be at least 1");
    const auto& mons = quadric_monomials();
    std::vector<std::vector<std::size_t>> outcomes;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        QuadricWeb moved = web.transformed(LinearChange::random(web.field(), 4, rng));
        std::vector<std::size_t> piv = pivot_columns(coefficient_matrix(moved.quadrics()));
        if (piv.size() != 4) throw InvariantError("gin2: transformed web lost independence");
        outcomes.push_back(piv);
    }
    // Columns are lex-descending, so the smallest index vector is lex-greatest.
    const auto best = *std::min_element(outcomes.begin(), outcomes.end());
    Gin2Result out;
    out.trials = trials;
    out.seed = seed;
    out.agreeing_trials = static_cast<int>(std::count(outcomes.begin(), outcomes.end(), best));
    for (std::size_t c : best) out.monomials.push_back(mons[c]);
    return out;
}

std::string DiscriminantPattern::to_string() const {
    if (vanishes) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mult, deg] : by_multiplicity) {
        if (!first) os << ' ';
        first = false;
        os << mult << ':' << deg;
    }
    return os.str();
}

WebInvariants web_invariants(const QuadricWeb& web, std::uint64_t seed) {
    require_prime(web.field(), "web_invariants");
    const Field& f = web.field();
    WebInvariants inv;
    inv.hf = quadric_ideal_hf(web, 5);

    std::vector<ExactMatrix> hs;
    for (const auto& q : web.quadrics()) hs.push_back(second_partials(q));
    Restriction res = restrict_to_essential(hs);
    inv.essential_variables = res.essential;

    Rng rng(seed);
    ExactMatrix u = combine(res.blocks, random_vector(f, 4, rng));
    ExactMatrix v = combine(res.blocks, random_vector(f, 4, rng));
    inv.generic_rank = static_cast<int>(rank(u));
    inv.web_discriminant = pencil_pattern(u, v);

    if (res.essential == 3) {
        std::vector<ExactMatrix> conics = dual_conics(res.blocks);
        if (conics.size() != 2) throw InvariantError("dual conic pencil must be 2-dimensional");
        ExactMatrix a = combine(conics, random_vector(f, 2, rng));
        ExactMatrix b = combine(conics, random_vector(f, 2, rng));
        inv.dual_discriminant = pencil_pattern(a, b);
    }
    return inv;
}

Classification classify_web(const QuadricWeb& web, std::uint64_t seed) {
    require_prime(web.field(), "classify");
    Classification out;
    out.gin = gin2(web, 5, splitmix64(seed));
    if (out.gin.monomials == generic_gin2_set())
        throw HypothesisError("the lex gin of the web is the generic set {x1^2, x1x2, x1x3, x1x4}; "
                              "the orbit classification requires {x1^2, x1x2, x1x3, x2^2}");
    out.invariants = web_invariants(web, seed);
    out.label = decide(out.invariants);
    return out;
}

std::vector<Poly> inverse_system_basis(const QuadricWeb& web, int degree) {
    if (degree < 0) throw InputError("inverse system degree must be non-negative");
    const Field& f = web.field();
    std::vector<Exponent> cols = monomials_of_degree(4, degree);
    std::vector<Poly> out;
    if (degree < 2) {
        for (const auto& e : cols) out.push_back(Poly::monomial(f, e, Scalar(f, 1)));
        return out;
    }
    std::vector<Exponent> targets = monomials_of_degree(4, degree - 2);
    std::map<Exponent, std::size_t, GrlexGreater> index;
    for (std::size_t i = 0; i < targets.size(); ++i) index[targets[i]] = i;
    ExactMatrix m(f, 4 * targets.size(), cols.size());
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [a, coef] : web.quadrics()[k].terms()) {
                if (!cols[c].divisible_by(a)) continue;
                Scalar ff = coef;
                for (std::size_t v = 0; v < 4; ++v)
                    for (int j = 0; j < a[v]; ++j) ff *= Scalar(f, cols[c][v] - j);
                m(k * targets.size() + index.at(cols[c] - a), c) += ff;
            }
    for (const auto& vec : kernel(m)) {
        Poly p(f, 4);
        for (std::size_t c = 0; c < cols.size(); ++c) p.add_term(cols[c], vec[c]);
        out.push_back(std::move(p));
    }
    return out;
}

DualForm inverse_system_sample(const QuadricWeb& web, int degree, Rng& rng) {
    std::vector<Poly> basis = inverse_system_basis(web, degree);
    if (basis.empty())
        throw HypothesisError("the inverse system of the web vanishes in degree " + std::to_string(degree));
    const Field& f = web.field();
    for (;;) {
        Poly p(f, 4);
        for (const auto& b : basis) p += b.scaled(rng.uniform(f));
        if (!p.is_zero()) return DualForm(std::move(p));
    }
}

DualForm power_sum_form(std::size_t nvars, int count, int degree, const Field& field, Rng& rng) {
    if (nvars < 1 || count < 1 || degree < 0) throw InputError("power_sum_form: bad dimensions");
    for (;;) {
        Poly sum(field, nvars);
        for (int k = 0; k < count; ++k) sum += pow(Poly::linear(field, random_vector(field, nvars, rng)), degree);
        if (!sum.is_zero()) return DualForm(std::move(sum));
    }
}

DualForm conic_power_sum_form(int d, const Field& field, Rng& rng) {
    if (d < 2) throw InputError("conic_power_sum_form requires d >= 2");
    for (;;) {
        Poly f(field, 4);
        for (int k = 0; k < d; ++k) {
            Scalar t = rng.uniform(field);
            f += pow(Poly::linear(field, {Scalar(field, 0), Scalar(field, 1), t, t * t}), d);
        }
        f += pow(Poly::linear(field, random_vector(field, 4, rng)), d);
        f = apply_change(LinearChange::random(field, 4, rng), f);
        if (!f.is_zero()) return DualForm(std::move(f));
    }
}

DualForm perazzo_dual_form(int d, const Field& field) {
    if (d < 3) throw InputError("perazzo_dual_form requires d >= 3");
    const std::size_t n = static_cast<std::size_t>(d) + 2;
    Poly out(field, n);
    for (int i = 1; i <= d; ++i) {
        Exponent e(n);
        e[i - 1] = 1;
        e[d] = d - i;
        e[d + 1] = i - 1;
        out.add_term(e, Scalar(field, 1));
    }
    return DualForm(std::move(out));
}

DualForm parametric_case_v(const std::vector<Scalar>& a) {
    auto terms = shared_tail();
    terms.push_back({1, {0, 2, 0, 3}});
    terms.push_back({1, {1, 0, 1, 3}});
    return divided_power_form(a, terms);
}

DualForm parametric_case_vi(const std::vector<Scalar>& a) {
    auto terms = shared_tail();
    terms.push_back({1, {1, 1, 0, 3}});
    return divided_power_form(a, terms);
}

std::vector<ExceptionalExample> exceptional_hvector_examples(const Field& field) {
    require_prime(field, "exceptional example verification");
    std::vector<ExceptionalExample> out{
        {HVector({1, 5, 5, 1}), perazzo_dual_form(3, field), "perazzo d=3"},
        {HVector({1, 6, 6, 1}),
         DualForm(parse_poly("X1*X4^2 + X2*X4*X5 + X3*X5^2 + X6^3", 6, field)),
         "perazzo d=3 connected sum with X6^3"},
        {HVector({1, 6, 6, 6, 1}), perazzo_dual_form(4, field), "perazzo d=4"},
    };
    constexpr std::uint64_t kVerifySeed = 20240601;
    for (const auto& ex : out) {
        if (!(hilbert_function(ex.form) == ex.h))
            throw InvariantError("stored example " + ex.origin + " does not realize its h-vector");
        if (wlp_check(ex.form, 5, kVerifySeed).verdict != Verdict::Fails)
            throw InvariantError("stored example " + ex.origin + " does not fail the WLP");
    }
    return out;
}

}  // namespace gorenstein

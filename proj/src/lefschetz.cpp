#include "gorenstein/lefschetz.hpp"

#include <algorithm>
#include <map>

#include "gorenstein/errors.hpp"
#include "gorenstein/random.hpp"

namespace gorenstein {

namespace {

void require_linear(const Poly& l) {
    if (l.homogeneous_degree() != 1) throw InputError("expected a nonzero linear form");
}

// l^k∘F by repeated contraction; nullopt once it vanishes.
Contraction power_contraction(const DualForm& f, const Poly& l, int k) {
    Contraction g = f;
    for (int j = 0; j < k && g; ++j) {
        if (g->degree() == 0) return std::nullopt;
        g = contract(l, *g);
    }
    return g;
}

long rank_of_contraction(const Contraction& g, int i) {
    if (!g || i < 0 || i > g->degree()) return 0;
    return static_cast<long>(rank(catalecticant(*g, i)));
}

// Dimension of the span of polynomials of one degree, in monomial coordinates.
long span_dimension(const std::vector<Poly>& polys, std::size_t nvars, int degree, const Field& field) {
    if (polys.empty()) return 0;
    const auto mons = monomials_of_degree(nvars, degree);
    std::map<Exponent, std::size_t, GrlexGreater> index;
    for (std::size_t k = 0; k < mons.size(); ++k) index.emplace(mons[k], k);
    ExactMatrix m(field, polys.size(), mons.size());
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [e, c] : polys[r].terms()) m(r, index.at(e)) = c;
    return static_cast<long>(rank(m));
}

std::vector<Poly> multiples(const Poly& g, std::size_t nvars, int degree) {
    std::vector<Poly> out;
    if (degree < 0) return out;
    for (const auto& m : monomials_of_degree(nvars, degree))
        out.push_back(Poly::monomial(g.field(), m, Scalar(g.field(), 1)) * g);
    return out;
}

}  // namespace

long mult_map_rank(const DualForm& f, const Poly& l, int i, int k) {
    require_linear(l);
    if (i < 0 || k < 0 || i + k > f.degree()) throw InputError("mult_map_rank: degrees out of range");
    return rank_of_contraction(power_contraction(f, l, k), i);
}

Hessian hessian(const DualForm& f, int i) {
    if (i < 0 || 2 * i > f.degree()) throw InputError("hessian: degree out of range 0..floor(d/2)");
    Hessian h;
    h.basis = quotient_basis(f, i);
    const std::size_t m = h.basis.size();
    h.entries.assign(m, std::vector<Poly>(m, Poly(f.field(), f.nvars())));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u; v < m; ++v) {
            Poly op = Poly::monomial(f.field(), h.basis[u] + h.basis[v], Scalar(f.field(), 1));
            h.entries[u][v] = diff_action(op, f.form());
            h.entries[v][u] = h.entries[u][v];
        }
    return h;
}

ExactMatrix evaluate(const Hessian& h, const std::vector<Scalar>& point) {
    if (point.empty()) throw InputError("empty evaluation point");
    const std::size_t m = h.basis.size();
    ExactMatrix out(point.front().field(), m, m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) out(u, v) = h.entries[u][v].evaluate(point);
    return out;
}

Scalar hessian_det_at(const DualForm& f, int i, const std::vector<Scalar>& point) {
    if (point.size() != f.nvars()) throw InputError("hessian_det_at: point has wrong length");
    return determinant(evaluate(hessian(f, i), point));
}

std::vector<RankRecord> is_wl_element(const DualForm& f, const Poly& l) {
    require_linear(l);
    const HVector h = hilbert_function(f);
    const Contraction b = contract(l, f);
    std::vector<RankRecord> out;
    for (int i = 0; i < f.degree(); ++i) {
        RankRecord r;
        r.degree = i;
        r.power = 1;
        r.expected = std::min(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(i + 1)]);
        r.achieved = rank_of_contraction(b, i);
        if (r.achieved > r.expected) throw InvariantError("multiplication rank exceeds min(h_i, h_{i+1})");
        out.push_back(r);
    }
    return out;
}

namespace {

std::vector<RankRecord> slp_records(const DualForm& f, const HVector& h, const Poly& l) {
    std::vector<RankRecord> out;
    const int d = f.degree();
    Contraction g = f;
    for (int k = 1; k <= d; ++k) {
        g = g && g->degree() > 0 ? contract(l, *g) : std::nullopt;
        for (int i = 0; i + k <= d; ++i) {
            RankRecord r;
            r.degree = i;
            r.power = k;
            r.expected = std::min(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(i + k)]);
            r.achieved = rank_of_contraction(g, i);
            if (r.achieved > r.expected) throw InvariantError("multiplication rank exceeds its bound");
            out.push_back(r);
        }
    }
    return out;
}

template <class RecordFn>
LefschetzReport run_trials(const DualForm& f, int trials, std::uint64_t seed, RecordFn records_for,
                           bool index_failures) {
    if (!f.field().is_prime()) throw InputError("randomized Lefschetz checks require prime-field mode");
    if (trials < 1) throw InputError("trials must be at least 1");
    LefschetzReport rep;
    rep.h = hilbert_function(f);
    rep.trials_requested = trials;
    rep.seed = seed;
    rep.field = f.field();
    std::vector<RankRecord> best;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        const Poly l = random_linear_form(f.nvars(), f.field(), rng);
        auto recs = records_for(l);
        rep.trials_used = t + 1;
        if (std::all_of(recs.begin(), recs.end(), [](const RankRecord& r) { return r.maximal(); })) {
            rep.records = std::move(recs);
            rep.verdict = Verdict::Holds;
            rep.certificate_trial = t;
            return rep;
        }
        if (best.empty()) {
            best = std::move(recs);
        } else {
            for (std::size_t k = 0; k < best.size(); ++k) best[k].achieved = std::max(best[k].achieved, recs[k].achieved);
        }
    }
    rep.records = best;
    for (std::size_t k = 0; k < best.size(); ++k)
        if (!best[k].maximal()) rep.failing.push_back(index_failures ? static_cast<int>(k) : best[k].degree);
    rep.verdict = rep.failing.empty() ? Verdict::Inconclusive : Verdict::Fails;
    return rep;
}

}  // namespace

LefschetzReport wlp_check(const DualForm& f, int trials, std::uint64_t seed) {
    return run_trials(f, trials, seed, [&f](const Poly& l) { return is_wl_element(f, l); }, false);
}

LefschetzReport slp_check(const DualForm& f, int trials, std::uint64_t seed) {
    const HVector h = hilbert_function(f);
    return run_trials(f, trials, seed, [&f, &h](const Poly& l) { return slp_records(f, h, l); }, true);
}

bool SnakeLedger::consistent() const {
    return std::all_of(rows.begin(), rows.end(), [](const SnakeRow& r) { return r.consistent; });
}

SnakeLedger snake_consistency(const DualForm& f, const Poly& g, const Poly& l) {
    require_linear(l);
    auto s_opt = g.homogeneous_degree();
    if (!s_opt) throw InputError("snake_consistency: g must be a nonzero homogeneous form");
    const int s = *s_opt;
    const int d = f.degree();
    const std::size_t n = f.nvars();
    const Field& field = f.field();

    SnakeLedger led;
    led.shift = s;
    led.hf_a = hilbert_function(f).entries();
    const Contraction b = s <= d ? contract(g, f) : std::nullopt;
    led.hf_b = hilbert_function_or_zero(b);
    auto hb = [&](int j) -> long {
        return j < 0 || j >= static_cast<int>(led.hf_b.size()) ? 0 : led.hf_b[static_cast<std::size_t>(j)];
    };

    // [U]_j = [Ann F]_j + g·R_{j-s}; then [C]_j = R_j / [U]_j.
    std::vector<std::vector<Poly>> u(static_cast<std::size_t>(d) + 1);
    std::vector<long> u_dim(u.size());
    for (int j = 0; j <= d; ++j) {
        auto& gens = u[static_cast<std::size_t>(j)];
        gens = ann_degree(f, j);
        for (auto& p : multiples(g, n, j - s)) gens.push_back(std::move(p));
        u_dim[static_cast<std::size_t>(j)] = span_dimension(gens, n, j, field);
    }
    for (int j = 0; j <= d; ++j) {
        const long dim_r = static_cast<long>(monomials_of_degree(n, j).size());
        const long c = dim_r - u_dim[static_cast<std::size_t>(j)];
        if (c != led.hf_a[static_cast<std::size_t>(j)] - hb(j - s))
            throw InvariantError("exact sequence 0 -> B(-s) -> A -> C -> 0 fails in degree " + std::to_string(j));
        led.hf_c.push_back(c);
    }

    for (int i = 0; i < d; ++i) {
        SnakeRow row;
        row.degree = i;
        row.middle = {led.hf_a[static_cast<std::size_t>(i)], led.hf_a[static_cast<std::size_t>(i + 1)],
                      mult_map_rank(f, l, i, 1)};
        row.left.source = hb(i - s);
        row.left.target = hb(i + 1 - s);
        row.left.rank = row.left.source && row.left.target ? mult_map_rank(*b, l, i - s, 1) : 0;
        row.right.source = led.hf_c[static_cast<std::size_t>(i)];
        row.right.target = led.hf_c[static_cast<std::size_t>(i + 1)];
        if (row.right.source && row.right.target) {
            auto gens = u[static_cast<std::size_t>(i + 1)];
            for (auto& p : multiples(l, n, i)) gens.push_back(std::move(p));
            row.right.rank = span_dimension(gens, n, i + 1, field) - u_dim[static_cast<std::size_t>(i + 1)];
        }
        // Snake lemma: ker and coker of the middle map are squeezed between
        // those of the flanking maps.
        const long ker_l = row.left.source - row.left.rank, ker_m = row.middle.source - row.middle.rank,
                   ker_r = row.right.source - row.right.rank;
        const long cok_l = row.left.target - row.left.rank, cok_m = row.middle.target - row.middle.rank,
                   cok_r = row.right.target - row.right.rank;
        bool ok = ker_m <= ker_l + ker_r && cok_m <= cok_l + cok_r;
        if (row.left.injective() && row.right.injective()) ok = ok && row.middle.injective();
        if (row.left.surjective() && row.right.surjective()) ok = ok && row.middle.surjective();
        row.consistent = ok;
        led.rows.push_back(row);
    }
    return led;
}

}  // namespace gorenstein

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gorenstein/bounds.hpp"
#include "gorenstein/catalog.hpp"
#include "gorenstein/errors.hpp"
#include "gorenstein/lefschetz.hpp"

using namespace gorenstein;

namespace {

const Field kP = Field::prime();
const Field kQ = Field::rational();

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::vector<long> class_hf(OrbitLabel l) {
    switch (l) {
        case OrbitLabel::V:
        case OrbitLabel::VI: return {1, 4, 6, 7, 8, 9};
        case OrbitLabel::I:
        case OrbitLabel::VII:
        case OrbitLabel::IX:
        case OrbitLabel::X: return {1, 4, 6, 8, 10, 12};
        default: return {1, 4, 6, 6, 6, 6};
    }
}

DualForm random_dual(std::size_t n, int d, const Field& f, Rng& rng, int terms) {
    std::vector<Exponent> mons = monomials_of_degree(n, d);
    for (;;) {
        Poly p(f, n);
        for (int t = 0; t < terms; ++t) {
            Scalar c = f.is_prime() ? rng.uniform(f) : Scalar(f, static_cast<long long>(rng.below(19)) - 9);
            p.add_term(mons[rng.below(mons.size())], c);
        }
        if (!p.is_zero()) return DualForm(p);
    }
}

Poly random_linear(std::size_t n, const Field& f, Rng& rng) {
    if (f.is_prime()) return random_linear_form(n, f, rng);
    for (;;) {
        std::vector<Scalar> c;
        for (std::size_t v = 0; v < n; ++v) c.emplace_back(f, static_cast<long long>(rng.below(11)) - 5);
        Poly l = Poly::linear(f, c);
        if (!l.is_zero()) return l;
    }
}

Exponent unit_exponent(std::size_t n, std::size_t v) {
    Exponent e(n);
    e[v] = 1;
    return e;
}

long span_rank(const std::vector<Poly>& gens, std::size_t n, int deg, const Field& f) {
    if (gens.empty()) return 0;
    std::vector<Exponent> cols = monomials_of_degree(n, deg);
    ExactMatrix m(f, gens.size(), cols.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = gens[r].coefficient(cols[c]);
    return static_cast<long>(rank(m));
}

std::vector<Poly> monomial_multiples(const Poly& p, std::size_t n, int deg) {
    std::vector<Poly> out;
    if (deg < 0) return out;
    for (const auto& u : monomials_of_degree(n, deg)) out.push_back(p * Poly::monomial(p.field(), u, Scalar(p.field(), 1)));
    return out;
}

// rank of x l^k : [A]_i -> [A]_{i+k} from the annihilator ideal alone.
long brute_mult_rank(const DualForm& f, const Poly& l, int i, int k) {
    std::vector<Poly> ann = ann_degree(f, i + k);
    std::vector<Poly> gens = ann;
    for (auto& p : monomial_multiples(pow(l, k), f.nvars(), i)) gens.push_back(std::move(p));
    return span_rank(gens, f.nvars(), i + k, f.field()) - span_rank(ann, f.nvars(), i + k, f.field());
}

// dim [R / (Ann F + (l))]_i.
long quotient_by_linear(const DualForm& f, const Poly& l, int i) {
    std::vector<Poly> gens = ann_degree(f, i);
    for (auto& p : monomial_multiples(l, f.nvars(), i - 1)) gens.push_back(std::move(p));
    return static_cast<long>(monomials_of_degree(f.nvars(), i).size()) - span_rank(gens, f.nvars(), i, f.field());
}

// Lex-segment oracles.
std::size_t vars_for(long n, int i) {
    std::size_t v = 1;
    while (static_cast<long>(monomials_of_degree(v, i).size()) < n) ++v;
    return v;
}

std::vector<Exponent> lex_tail(std::size_t vars, int i, long n) {
    std::vector<Exponent> m = monomials_of_degree(vars, i);
    std::sort(m.begin(), m.end(), LexGreater{});
    return {m.end() - n, m.end()};
}

long lex_growth(long n, int i, std::size_t extra) {
    std::size_t vars = vars_for(n, i) + extra;
    std::vector<Exponent> tail = lex_tail(vars, i, n);
    long count = 0;
    for (const auto& u : monomials_of_degree(vars, i + 1)) {
        bool all = true;
        for (std::size_t v = 0; v < vars && all; ++v) {
            if (u[v] == 0) continue;
            Exponent w = u;
            w[v] -= 1;
            all = std::find(tail.begin(), tail.end(), w) != tail.end();
        }
        count += all;
    }
    return count;
}

long lex_restriction(long n, int i, std::size_t extra) {
    std::size_t vars = vars_for(n, i) + extra;
    long count = 0;
    for (const auto& u : lex_tail(vars, i, n)) count += (u[vars - 1] == 0);
    return count;
}

std::vector<std::vector<std::pair<long, int>>> all_expansions(long n, int i) {
    std::vector<std::vector<std::pair<long, int>>> found;
    std::vector<std::pair<long, int>> cur;
    std::function<void(long, int, long)> go = [&](long rest, int k, long bound) {
        if (rest == 0) {
            found.push_back(cur);
            return;
        }
        if (k < 1) return;
        for (long m = k; m < bound; ++m) {
            long c = binomial(m, k).get_si();
            if (c > rest) break;
            cur.emplace_back(m, k);
            go(rest - c, k - 1, m);
            cur.pop_back();
        }
    };
    go(n, i, n + i + 2);
    return found;
}

Outcome orbit_hilbert_functions() {
    int good = 0;
    for (OrbitLabel l : all_orbit_labels()) {
        if (quadric_ideal_hf(orbit_representative(l, kP), 5) == class_hf(l)) ++good;
        else return {false, "mismatch for " + to_string(l)};
    }
    return {good == 12, std::to_string(good) + "/12 entries match"};
}

Outcome perazzo_sharpness() {
    const std::uint64_t seed = 20240601;
    for (int d = 3; d <= 6; ++d) {
        DualForm f = perazzo_dual_form(d, kP);
        std::vector<long> h(static_cast<std::size_t>(d) + 1, d + 2);
        h.front() = h.back() = 1;
        if (hilbert_function(f).entries() != h) return {false, "HF mismatch at d=" + std::to_string(d)};
        LefschetzReport r = wlp_check(f, 5, seed);
        std::vector<int> expected;
        for (int i = 1; i <= d - 2; ++i) expected.push_back(i);
        if (r.verdict != Verdict::Fails || r.failing != expected)
            return {false, "wlp verdict/failing degrees wrong at d=" + std::to_string(d)};
        for (int i : expected)
            if (r.records[static_cast<std::size_t>(i)].achieved != d + 1 || r.records[static_cast<std::size_t>(i)].expected != d + 2)
                return {false, "middle rank not d+1 at d=" + std::to_string(d)};
        for (int t = 0; t < 5; ++t) {
            Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
            Poly l = random_linear_form(f.nvars(), kP, rng);
            for (int i : expected)
                if (long r1 = brute_mult_rank(f, l, i, 1); r1 != d + 1)
                    return {false, "oracle rank " + std::to_string(r1) + " at d=" + std::to_string(d)};
        }
    }
    return {true, "d=3..6: HF exact, failing degrees 1..d-2, rank d+1 (oracle agrees on all 20 trial forms)"};
}

Outcome hessian_identities() {
    Rng rng(515);
    long mismatches = 0, evaluated = 0;
    for (int which = 0; which < 2; ++which) {
        for (int inst = 0; inst < 20; ++inst) {
            std::vector<Scalar> a;
            for (int k = 0; k < 9; ++k) a.push_back(rng.uniform_nonzero(kP));
            DualForm f = which == 0 ? parametric_case_v(a) : parametric_case_vi(a);
            auto closed = [&](const Scalar& s, const Scalar& t) {
                Scalar a1t = a[0] * t;
                if (which == 0) return a1t * a1t * a1t * a1t * a1t * (a[3] * s + a[4] * t);
                Scalar q = (a[3] * a[5] - a[4] * a[4]) * s * s + (a[3] * a[6] - a[4] * a[5]) * s * t +
                           (a[4] * a[6] - a[5] * a[5]) * t * t;
                return a1t * a1t * a1t * a1t * q;
            };
            std::optional<Scalar> c;
            for (int p = 0; p < 20; ++p) {
                Scalar s = rng.uniform(kP), t = rng.uniform(kP);
                Scalar det = hessian_det_at(f, 2, {Scalar(kP, 0), Scalar(kP, 0), s, t});
                Scalar ref = closed(s, t);
                ++evaluated;
                if (!c && !ref.is_zero()) {
                    c = det / ref;
                    if (c->is_zero()) ++mismatches;
                }
                if (c ? !(det == *c * ref) : !det.is_zero()) ++mismatches;
            }
            if (!c) ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(evaluated) + " evaluations, " + std::to_string(mismatches) + " mismatches"};
}

Outcome family_wlp() {
    Rng rng(777);
    int holds = 0, discarded = 0, total = 0;
    std::string log;
    for (OrbitLabel label : {OrbitLabel::VII, OrbitLabel::IX, OrbitLabel::X}) {
        QuadricWeb web = orbit_representative(label, kP);
        for (int d : {5, 7}) {
            std::vector<long> generic = d == 5 ? std::vector<long>{1, 4, 6, 6, 4, 1} : std::vector<long>{1, 4, 6, 8, 8, 6, 4, 1};
            int accepted = 0, attempts = 0;
            while (accepted < 20 && attempts < 200) {
                ++attempts;
                DualForm f = inverse_system_sample(web, d, rng);
                if (hilbert_function(f).entries() != generic) {
                    ++discarded;
                    continue;
                }
                ++accepted;
                ++total;
                if (wlp_check(f, 5, rng.next()).verdict == Verdict::Holds) ++holds;
            }
            if (accepted < 20) return {false, "too few generic samples for " + to_string(label)};
        }
    }
    return {holds == total, std::to_string(holds) + "/" + std::to_string(total) + " generic samples hold, " +
                                std::to_string(discarded) + " degenerate discarded"};
}

Outcome bounds_oracle() {
    long checks = 0;
    for (long n = 1; n <= 60; ++n)
        for (int i = 1; i <= 5; ++i) {
            auto all = all_expansions(n, i);
            if (all.size() != 1 || all[0] != binom_expansion(n, i).parts)
                return {false, "expansion of " + std::to_string(n) + " at " + std::to_string(i)};
            for (std::size_t extra : {std::size_t{0}, std::size_t{1}}) {
                if (macaulay_bound(n, i) != lex_growth(n, i, extra))
                    return {false, "macaulay(" + std::to_string(n) + "," + std::to_string(i) + ")"};
                if (green_bound(n, i) != lex_restriction(n, i, extra))
                    return {false, "green(" + std::to_string(n) + "," + std::to_string(i) + ")"};
            }
            ++checks;
        }
    for (int j = 1; j <= 10; ++j)
        if (green_bound(2 * j, j) != 1) return {false, "green(2j,j) != 1 at j=" + std::to_string(j)};
    return {true, std::to_string(checks) + " (n,i) pairs exact; green(2j,j)=1 for j<=10"};
}

Outcome duality_properties() {
    Rng rng(6060);
    long violations = 0;
    for (int t = 0; t < 200; ++t) {
        bool rational = t % 5 == 0;
        const Field& f = rational ? kQ : kP;
        std::size_t n = 1 + rng.below(rational ? 3 : 5);
        int d = 1 + static_cast<int>(rng.below(7));
        DualForm F = random_dual(n, d, f, rng, 2 + static_cast<int>(rng.below(8)));
        HVector h = hilbert_function(F);
        for (int i = 0; i <= d; ++i)
            if (rank(catalecticant(F, i)) != rank(catalecticant(F, d - i))) ++violations;
        if (!is_o_sequence(h).valid || h[0] != 1) ++violations;
        Poly l = random_linear(n, f, rng);
        std::vector<long> hb = hilbert_function_or_zero(contract(l, F));
        for (int i = 0; i <= d; ++i) {
            long b = i >= 1 && i - 1 < static_cast<int>(hb.size()) ? hb[static_cast<std::size_t>(i - 1)] : 0;
            if (h[static_cast<std::size_t>(i)] != b + quotient_by_linear(F, l, i)) ++violations;
        }
        Poly g = rng.below(2) ? random_linear(n, f, rng) : random_dual(n, 1 + static_cast<int>(rng.below(2)), f, rng, 3).form();
        try {
            SnakeLedger led = snake_consistency(F, g, l);
            if (!led.consistent()) ++violations;
        } catch (const InvariantError&) {
            ++violations;
        }
    }
    return {violations == 0, "200 forms, " + std::to_string(violations) + " violations"};
}

Outcome classifier_round_trip() {
    Rng rng(7007);
    long wrong = 0, checked = 0;
    for (OrbitLabel label : all_orbit_labels()) {
        QuadricWeb rep = orbit_representative(label, kP);
        for (int k = 0; k < 50; ++k) {
            QuadricWeb w = rep.transformed(LinearChange::random(kP, 4, rng));
            Classification c = classify_web(w, rng.next());
            ++checked;
            if (c.label != label || c.gin.monomials != special_gin2_set()) ++wrong;
        }
    }
    for (int k = 0; k < 10; ++k) {
        DualForm f = conic_power_sum_form(7, kP, rng);
        std::vector<Poly> ann = ann_degree(f, 2);
        if (hilbert_function(f).entries() != std::vector<long>{1, 4, 6, 8, 8, 6, 4, 1} || ann.size() != 4) {
            ++wrong;
            continue;
        }
        QuadricWeb base({ann[0], ann[1], ann[2], ann[3]});
        for (int j = 0; j < 5; ++j) {
            QuadricWeb w = base.transformed(LinearChange::random(kP, 4, rng));
            ++checked;
            if (gin2(w, 3, rng.next()).monomials != generic_gin2_set()) ++wrong;
            try {
                classify_web(w, rng.next());
                ++wrong;
            } catch (const HypothesisError&) {
            }
        }
    }
    return {wrong == 0, std::to_string(checked) + " conjugates, " + std::to_string(wrong) + " misclassified"};
}

Outcome hessian_catalecticant() {
    Rng rng(8080);
    long mismatches = 0, comparisons = 0;
    for (int t = 0; t < 100; ++t) {
        bool rational = t % 4 == 0;
        const Field& f = rational ? kQ : kP;
        std::size_t n = 2 + rng.below(3);
        DualForm F = random_dual(n, 2 + static_cast<int>(rng.below(rational ? 4 : 6)), f, rng, 3 + static_cast<int>(rng.below(6)));
        Poly l = random_linear(n, f, rng);
        std::vector<Scalar> pt;
        for (std::size_t v = 0; v < n; ++v) pt.push_back(l.coefficient(unit_exponent(n, v)));
        for (int i = 0; 2 * i <= F.degree(); ++i) {
            Contraction g = contract(pow(l, F.degree() - 2 * i), F);
            long cat = g ? static_cast<long>(rank(catalecticant(*g, i))) : 0;
            ++comparisons;
            if (static_cast<long>(rank(evaluate(hessian(F, i), pt))) != cat) ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(comparisons) + " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Outcome exceptional_list() {
    const std::vector<std::vector<long>> expected{{1, 5, 5, 1}, {1, 6, 6, 1}, {1, 6, 6, 6, 1}};
    std::vector<ExceptionalExample> ex;
    try {
        ex = exceptional_hvector_examples();
    } catch (const InvariantError& e) {
        return {false, e.what()};
    }
    if (ex.size() != expected.size()) return {false, "wrong number of entries"};
    for (std::size_t k = 0; k < ex.size(); ++k) {
        if (ex[k].h.entries() != expected[k] || hilbert_function(ex[k].form) != ex[k].h)
            return {false, "HF mismatch for " + ex[k].origin};
        if (wlp_check(ex[k].form, 5, 99).verdict != Verdict::Fails) return {false, "WLP does not fail for " + ex[k].origin};
    }
    return {true, "3/3 entries: HF exact, WLP fails"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;  // 0: no limit
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"orbit Hilbert functions", 1, orbit_hilbert_functions},
        {"Perazzo sharpness", 10, perazzo_sharpness},
        {"Hessian determinant identities", 30, hessian_identities},
        {"family WLP", 120, family_wlp},
        {"bounds oracle equivalence", 0, bounds_oracle},
        {"duality/exactness properties", 0, duality_properties},
        {"classifier round-trip", 0, classifier_round_trip},
        {"Hessian-catalecticant agreement", 0, hessian_catalecticant},
        {"exceptional h-vectors", 0, exceptional_list},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.limit_s == 0 || secs < c.limit_s;
        bool pass = o.ok && in_time;
        failed += !pass;
        char timing[64];
        if (c.limit_s > 0) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_s);
        else std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::printf("criterion %d [PRIMARY] %s  %s: %s (%s)\n", index, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), timing);
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}

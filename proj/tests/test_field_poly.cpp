#include "doctest.h"

#include <functional>

#include "gorenstein/errors.hpp"
#include "gorenstein/matrix.hpp"
#include "gorenstein/poly.hpp"

using namespace gorenstein;

namespace {

const Field kQ = Field::rational();
const Field kP = Field::prime();

Poly random_form(std::size_t n, int deg, const Field& f, Rng& rng, int terms = 6) {
    std::vector<Exponent> mons = monomials_of_degree(n, deg);
    Poly p(f, n);
    for (int t = 0; t < terms; ++t) p.add_term(mons[rng.below(mons.size())], rng.uniform(f));
    return p;
}

// Plain rational Gaussian elimination, independent of the library routines.
std::size_t oracle_rank(std::vector<std::vector<mpq_class>> a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < (a.empty() ? 0 : a[0].size()) && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

mpq_class laplace(const std::vector<std::vector<mpq_class>>& a) {
    if (a.size() == 1) return a[0][0];
    mpq_class s = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        std::vector<std::vector<mpq_class>> minor;
        for (std::size_t r = 1; r < a.size(); ++r) {
            std::vector<mpq_class> row;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        mpq_class term = a[0][c] * laplace(minor);
        s += (c % 2 == 0) ? term : mpq_class(-term);
    }
    return s;
}

}  // namespace

TEST_CASE("field descriptors") {
    CHECK(kQ.describe() == "q");
    CHECK(Field::prime(7).describe() == "fp:7");
    CHECK(kP.characteristic() == (std::uint64_t{1} << 61) - 1);
    CHECK_THROWS_AS(Field::prime(15), InputError);
    CHECK_THROWS_AS(Field::prime(1), InputError);
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000000007));
    CHECK_FALSE(is_prime_u64(561));
    CHECK_FALSE(is_prime_u64(3215031751ull));
}

TEST_CASE("rational scalars stay canonical") {
    Scalar a(kQ, 6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK(a.rational().get_den() == 2);
    Scalar b(kQ, 1, 3);
    CHECK((a + b).to_string() == "-7/6");
    CHECK((a * a).to_string() == "9/4");
    CHECK((a / a).is_one());
    CHECK_THROWS_AS(Scalar(kQ, 0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Scalar(kQ, 1) + Scalar(kP, 1), InputError);
}

TEST_CASE("prime field arithmetic matches 128-bit reference") {
    Rng rng(1);
    const std::uint64_t p = kP.characteristic();
    for (int t = 0; t < 2000; ++t) {
        std::uint64_t x = rng.below(p), y = rng.below(p);
        Scalar a = Scalar::from_residue(kP, x), b = Scalar::from_residue(kP, y);
        CHECK((a * b).residue() == static_cast<std::uint64_t>((unsigned __int128)x * y % p));
        CHECK((a + b).residue() == static_cast<std::uint64_t>(((unsigned __int128)x + y) % p));
        CHECK((a - b + b) == a);
        if (y != 0) CHECK((a / b * b) == a);
    }
    CHECK(Scalar(kP, -1).residue() == p - 1);
    CHECK(Scalar(kP, 1, 2).residue() == (p + 1) / 2);
    CHECK_THROWS_AS(Scalar(Field::prime(7), 1, 7), std::exception);
}

TEST_CASE("rng substreams are deterministic and distinct") {
    Rng a = Rng::substream(5, 0), b = Rng::substream(5, 0), c = Rng::substream(5, 1);
    std::uint64_t x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
    Rng r(9);
    for (int t = 0; t < 1000; ++t) CHECK(r.below(7) < 7);
    for (int t = 0; t < 100; ++t) {
        Scalar s = r.uniform(kQ);
        CHECK(abs(s.rational()) <= 100);
    }
}

TEST_CASE("matrix rank and determinant against oracles") {
    Rng rng(2);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + rng.below(5), m = 1 + rng.below(6);
        ExactMatrix a(kQ, n, m);
        std::vector<std::vector<mpq_class>> raw(n, std::vector<mpq_class>(m));
        // Low-rank products make rank deficiency common.
        std::size_t k = 1 + rng.below(std::min(n, m));
        ExactMatrix l(kQ, n, k), r(kQ, k, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) l(i, j) = Scalar(kQ, mpz_class(static_cast<long>(rng.below(7)) - 3), mpz_class(static_cast<unsigned long>(1 + rng.below(3))));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < m; ++j) r(i, j) = Scalar(kQ, static_cast<long long>(rng.below(7)) - 3);
        a = l * r;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) raw[i][j] = a(i, j).rational();
        CHECK(rank(a) == oracle_rank(raw));
        CHECK(rank(a.transpose()) == rank(a));
        for (const auto& v : kernel(a)) {
            for (std::size_t i = 0; i < n; ++i) {
                Scalar s(kQ);
                for (std::size_t j = 0; j < m; ++j) s += a(i, j) * v[j];
                CHECK(s.is_zero());
            }
        }
        CHECK(kernel(a).size() + rank(a) == m);
        if (n == m) {
            CHECK(determinant(a).rational() == laplace(raw));
            if (!determinant(a).is_zero()) CHECK(a * inverse(a) == ExactMatrix::identity(kQ, n));
        }
    }
}

TEST_CASE("prime rank agrees with rational rank on small integer matrices") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng.below(6);
        ExactMatrix a(kQ, n, n), b(kP, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long long v = static_cast<long long>(rng.below(3)) - 1;
                a(i, j) = Scalar(kQ, v);
                b(i, j) = Scalar(kP, v);
            }
        CHECK(rank(a) == rank(b));
        Scalar da = determinant(a), db = determinant(b);
        CHECK(Scalar(kP, da.rational().get_num()) == db);
    }
}

TEST_CASE("greedy rows and pivots") {
    ExactMatrix a(kQ, 3, 2);
    a(0, 0) = Scalar(kQ, 1);
    a(1, 0) = Scalar(kQ, 2);
    a(2, 1) = Scalar(kQ, 1);
    CHECK(greedy_independent_rows(a) == std::vector<std::size_t>{0, 2});
    CHECK(pivot_columns(a.transpose()) == std::vector<std::size_t>{0, 2});
    CHECK_THROWS_AS(determinant(a), InputError);
    CHECK_THROWS_AS(inverse(ExactMatrix(kQ, 2, 2)), InputError);
}

TEST_CASE("monomial orders") {
    auto mons = monomials_of_degree(3, 2);
    REQUIRE(mons.size() == 6);
    CHECK(mons[0] == Exponent{2, 0, 0});
    CHECK(mons[1] == Exponent{1, 1, 0});
    CHECK(mons[5] == Exponent{0, 0, 2});
    CHECK(GrlexGreater{}(Exponent{0, 0, 3}, Exponent{2, 0, 0}));
    CHECK(LexGreater{}(Exponent{1, 0, 0}, Exponent{0, 3, 0}));
    CHECK(monomials_of_degree(4, 5).size() == 56);
    CHECK(monomials_of_degree(2, 0).size() == 1);
}

TEST_CASE("parser and formatter") {
    Poly p = parse_poly("X1^2*X2 - 3/2*X3 + x2*x1*x1", 3, kQ);
    CHECK(p.coefficient({2, 1, 0}).to_string() == "2");
    CHECK(p.coefficient({0, 0, 1}).to_string() == "-3/2");
    CHECK(format_poly(p) == "2*X1^2*X2 - 3/2*X3");
    CHECK(format_poly(Poly(kQ, 2)) == "0");
    CHECK(parse_poly("0", 2, kQ).is_zero());
    CHECK(parse_poly(" -X1 + 5 ", 1, kQ).degree() == 1);
    CHECK(max_variable_index("X1*X12 + X3") == 12);
    CHECK(max_variable_index("7") == 0);
    for (const char* bad : {"X1^", "X0", "X4", "X1 +", "1/0*X1", "X1^-2", "X1**X2", "Y1", "X1^0"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_poly(bad, 3, kQ), InputError);
    }
    try {
        parse_poly("X1 + Q", 1, kQ);
        FAIL("expected a parse error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        Poly q = random_form(4, 1 + static_cast<int>(rng.below(5)), kQ, rng);
        CHECK(parse_poly(format_poly(q), 4, kQ) == q);
        Poly r = random_form(3, 3, kP, rng);
        CHECK(parse_poly(format_poly(r), 3, kP) == r);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        Poly a = random_form(3, 2, kQ, rng), b = random_form(3, 3, kQ, rng), c = random_form(3, 2, kQ, rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Poly(kQ, 3));
        CHECK(pow(a, 3) == a * a * a);
        std::vector<Scalar> pt{rng.uniform(kQ), rng.uniform(kQ), rng.uniform(kQ)};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST_CASE("differentiation action") {
    // x^a o X^b = b!/(b-a)! X^(b-a)
    Poly x = parse_poly("x1^2*x2", 2, kQ);
    Poly f = parse_poly("X1^3*X2^2", 2, kQ);
    CHECK(diff_action(x, f) == parse_poly("12*X1*X2", 2, kQ));
    CHECK(diff_action(parse_poly("x1^4", 2, kQ), f).is_zero());
    CHECK(diff_action(parse_poly("3", 2, kQ), f) == f.scaled(Scalar(kQ, 3)));
    Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        Poly p = random_form(3, 1, kQ, rng), q = random_form(3, 2, kQ, rng), r = random_form(3, 1, kQ, rng);
        Poly g = random_form(3, 5, kQ, rng), h = random_form(3, 5, kQ, rng);
        CHECK(diff_action(p * q, g) == diff_action(p, diff_action(q, g)));
        CHECK(diff_action(p + r, g) == diff_action(p, g) + diff_action(r, g));
        CHECK(diff_action(q, g + h) == diff_action(q, g) + diff_action(q, h));
    }
    CHECK_THROWS_AS(diff_action(parse_poly("x1", 1, Field::prime(3)), parse_poly("X1^3", 1, Field::prime(3))),
                    InputError);
}

TEST_CASE("linear changes are ring homomorphisms") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        LinearChange g = LinearChange::random(kQ, 3, rng);
        LinearChange h = LinearChange::random(kQ, 3, rng);
        Poly a = random_form(3, 2, kQ, rng), b = random_form(3, 3, kQ, rng);
        CHECK(apply_change(g, a * b) == apply_change(g, a) * apply_change(g, b));
        CHECK(apply_change(g, a + b) == apply_change(g, a) + apply_change(g, b));
        CHECK(apply_change(g.inverse(), apply_change(g, b)) == b);
        CHECK(apply_change(g.then(h), b) == apply_change(h, apply_change(g, b)));
    }
    ExactMatrix sing(kQ, 2, 2);
    CHECK_THROWS_AS(LinearChange{sing}, InputError);
    CHECK_THROWS_AS(LinearChange{ExactMatrix(kQ, 2, 3)}, InputError);
}

TEST_CASE("random linear forms") {
    Rng rng(8);
    Poly l = random_linear_form(4, kP, rng);
    CHECK(l.homogeneous_degree() == 1);
    CHECK_THROWS_AS(random_linear_form(4, kQ, rng), InputError);
}

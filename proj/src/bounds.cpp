#include "gorenstein/bounds.hpp"

#include <map>
#include <mutex>

#include "gorenstein/errors.hpp"

namespace gorenstein {

namespace {

// Memoized Pascal triangle, grown on demand.
class Pascal {
public:
    BigInt get(long m, long q) {
        if (q < 0 || m < q || m < 0) return 0;
        if (q == 0 || q == m) return 1;
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(rows_.size()) <= m) {
            const std::size_t r = rows_.size();
            std::vector<BigInt> row(r + 1, 1);
            for (std::size_t k = 1; k < r; ++k) row[k] = rows_[r - 1][k - 1] + rows_[r - 1][k];
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_{{1}};
};

Pascal& pascal() {
    static Pascal p;
    return p;
}

}  // namespace

BigInt binomial(long m, long q) {
    if (q < 0 || m < q || m < 0) return 0;
    if (m <= 128) return pascal().get(m, q);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(q));
    return r;
}

BigInt BinomialExpansion::sum() const {
    BigInt s = 0;
    for (const auto& [top, k] : parts) s += binomial(top, k);
    return s;
}

BinomialExpansion binom_expansion(long n, int i) {
    if (n < 1) throw InputError("binom_expansion: n must be positive");
    if (i < 1) throw InputError("binom_expansion: i must be positive");
    BinomialExpansion e;
    e.n = n;
    e.i = i;
    BigInt rest = n;
    for (int k = i; k >= 1 && rest > 0; --k) {
        // largest top with C(top, k) <= rest; top >= k since C(k, k) = 1
        long top = k;
        while (binomial(top + 1, k) <= rest) ++top;
        e.parts.emplace_back(top, k);
        rest -= binomial(top, k);
    }
    if (rest != 0) throw InvariantError("binomial expansion did not terminate");
    return e;
}

BigInt shift(const BinomialExpansion& e, long a, long b) {
    BigInt s = 0;
    for (const auto& [top, k] : e.parts) s += binomial(top + b, k + a);
    return s;
}

BigInt macaulay_bound(long n, int i) {
    if (n < 0 || i < 1) throw InputError("macaulay_bound: need n >= 0 and i >= 1");
    if (n == 0) return 0;
    return shift(binom_expansion(n, i), 1, 1);
}

BigInt green_bound(long n, int i) {
    if (n < 0 || i < 1) throw InputError("green_bound: need n >= 0 and i >= 1");
    if (n == 0) return 0;
    return shift(binom_expansion(n, i), 0, -1);
}

BigInt gotzmann_value(long n, int d, int s) {
    if (s < 1) throw InputError("gotzmann_value: s must be at least 1");
    if (n < 0 || d < 1) throw InputError("gotzmann_value: need n >= 0 and d >= 1");
    if (n == 0) return 0;
    return shift(binom_expansion(n, d), s, s);
}

OSequenceCheck is_o_sequence(const std::vector<long>& h) {
    OSequenceCheck out;
    if (h.empty() || h[0] != 1) {
        out.valid = false;
        out.first_violation = 0;
        return out;
    }
    for (std::size_t i = 1; i + 1 < h.size(); ++i) {
        if (h[i] < 0 || h[i + 1] < 0 || BigInt(h[i + 1]) > macaulay_bound(h[i], static_cast<int>(i))) {
            out.valid = false;
            out.first_violation = static_cast<int>(i);
            return out;
        }
    }
    return out;
}

OSequenceCheck is_o_sequence(const HVector& h) { return is_o_sequence(h.entries()); }

}  // namespace gorenstein

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gorenstein/duality.hpp"

namespace gorenstein {

using BigInt = mpz_class;

/// Binomial coefficient with C(m, q) = 0 whenever m < q or q < 0.
BigInt binomial(long m, long q);

/// The i-binomial expansion n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
/// with n_i > n_{i-1} > ... > n_j >= j >= 1.
struct BinomialExpansion {
    long n = 0;
    int i = 0;
    std::vector<std::pair<long, int>> parts;  ///< (n_k, k), k descending from i

    BigInt sum() const;
};

/// Greedy (and unique) expansion; throws InputError unless n >= 1, i >= 1.
BinomialExpansion binom_expansion(long n, int i);

/// sum_k C(n_k + b, k + a) over the parts of `e`.
BigInt shift(const BinomialExpansion& e, long a, long b);

/// Macaulay's bound on h_{i+1} given h_i = n. n = 0 yields 0.
BigInt macaulay_bound(long n, int i);

/// Green's bound on dim [A/lA]_i given h_i = n, l general.
BigInt green_bound(long n, int i);

/// Gotzmann persistence value h_{d+s} predicted from h_d = n when growth
/// from degree d is maximal. The hypothesis on the generating degrees of
/// the ideal is the caller's responsibility.
BigInt gotzmann_value(long n, int d, int s);

struct OSequenceCheck {
    bool valid = true;
    /// Smallest i with h_{i+1} > macaulay_bound(h_i, i).
    std::optional<int> first_violation;
};

/// Macaulay's growth condition at every step i >= 1 (and h_0 = 1).
OSequenceCheck is_o_sequence(const std::vector<long>& h);
OSequenceCheck is_o_sequence(const HVector& h);

}  // namespace gorenstein

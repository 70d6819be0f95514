#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gorenstein/duality.hpp"

namespace gorenstein {

/// rank of ×l^k : [A_F]_i -> [A_F]_{i+k}, computed as rank Cat^i(l^k∘F).
long mult_map_rank(const DualForm& f, const Poly& l, int i, int k);

/// Hessian matrix Hess^i(F) over quotient_basis(F, i); entries are forms of
/// degree d - 2i in the dual variables.
struct Hessian {
    std::vector<Exponent> basis;
    std::vector<std::vector<Poly>> entries;
};

Hessian hessian(const DualForm& f, int i);

/// Evaluate every entry at `point` (length n).
ExactMatrix evaluate(const Hessian& h, const std::vector<Scalar>& point);

/// det Hess^i(F)(point).
Scalar hessian_det_at(const DualForm& f, int i, const std::vector<Scalar>& point);

/// One multiplication map ×l^k : [A]_i -> [A]_{i+k}.
struct RankRecord {
    int degree = 0;
    int power = 1;
    long expected = 0;  ///< min(h_i, h_{i+k})
    long achieved = 0;
    bool maximal() const { return achieved == expected; }
};

/// Per-degree records of ×l on A_F for i = 0..d-1.
std::vector<RankRecord> is_wl_element(const DualForm& f, const Poly& l);

enum class Verdict { Holds, Fails, Inconclusive };

/// Outcome of a Monte-Carlo Lefschetz test. A single trial reaching maximal
/// rank everywhere proves the property (maximal rank is an open condition);
/// failure means every trial was deficient on the reported maps.
struct LefschetzReport {
    HVector h = HVector({1});
    /// For Holds: the certificate trial's ranks. Otherwise: best rank per map
    /// over all trials.
    std::vector<RankRecord> records;
    Verdict verdict = Verdict::Inconclusive;
    /// Maps (by source degree) deficient in every trial. For SLP these are
    /// indices into `records`.
    std::vector<int> failing;
    int trials_requested = 0;
    int trials_used = 0;
    std::optional<int> certificate_trial;
    std::uint64_t seed = 0;
    Field field = Field::rational();
};

/// Weak Lefschetz test with `trials` random linear forms drawn from
/// independent substreams of `seed`. Prime-field mode only.
LefschetzReport wlp_check(const DualForm& f, int trials, std::uint64_t seed);

/// Strong Lefschetz test. Every (i, k) with k >= 1 and i + k <= d is checked;
/// records with k = d - 2i are the Hessian-criterion maps.
LefschetzReport slp_check(const DualForm& f, int trials, std::uint64_t seed);

/// One degree of the snake-lemma ledger for A, B = A/(0:g), C = A/(g).
struct SnakeRow {
    struct Map {
        long source = 0;
        long target = 0;
        long rank = 0;
        bool injective() const { return rank == source; }
        bool surjective() const { return rank == target; }
    };
    int degree = 0;  ///< i: the middle map is [A]_i -> [A]_{i+1}
    Map left;        ///< ×l : [B]_{i-s} -> [B]_{i+1-s}
    Map middle;      ///< ×l : [A]_i -> [A]_{i+1}
    Map right;       ///< ×l : [C]_i -> [C]_{i+1}
    bool consistent = true;
};

struct SnakeLedger {
    int shift = 0;  ///< s = deg g
    std::vector<long> hf_a, hf_b, hf_c;
    std::vector<SnakeRow> rows;
    bool consistent() const;
};

/// Computes all three multiplication maps by direct linear algebra and
/// checks the snake-lemma implications degree by degree. Throws
/// InvariantError if the exact sequence dimensions disagree.
SnakeLedger snake_consistency(const DualForm& f, const Poly& g, const Poly& l);

}  // namespace gorenstein

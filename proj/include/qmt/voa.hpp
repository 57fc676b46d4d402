#pragma once

#include "qmt/qseries.hpp"

namespace qmt {

// Frame shape {k -> e_k}: automorphism with char poly prod (x^k - 1)^{e_k}.
// Negative exponents are allowed (virtual factors).
struct FrameShape {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;

    std::int64_t degree() const {  // sum k e_k = dimension of the space
        std::int64_t s = 0;
        for (auto [k, e] : entries) s += k * e;
        return s;
    }
};

// Multiset of cycle lengths of a permutation of tensor factors.
struct CycleShape {
    std::vector<std::pair<std::int64_t, std::int64_t>> cycles;  // (length, count)

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto [k, c] : cycles) s += k * c;
        return s;
    }
};

// Tensor-factor configuration of the rank-N module: a Heisenberg factor of
// dimension 24 ell_N, N^2 Clifford factors (32 and 27 at N = 2, 3), and a
// small Heisenberg factor U.
struct VOAConfig {
    std::int64_t N = 0;
    std::int64_t heisenberg_dim = 0;
    FrameShape identity_frame;
    FrameShape gamma;
    std::int64_t clifford_factors = 0;
    CycleShape clifford_identity;
    CycleShape sigma;
    std::int64_t u_dim = 0;
};

VOAConfig voa_config(std::int64_t N);

// Closed forms of the three graded traces as eta quotients.
EtaQuotientSpec heisenberg_eta_spec(const FrameShape &shape);  // prod eta(k)^{-e_k}
EtaQuotientSpec clifford_eta_spec(const CycleShape &shape);    // prod eta(k)^{count}
EtaQuotientSpec u_eta_spec(std::int64_t dim);                  // 1 / eta^dim

// Graded trace of the frame-shape automorphism on the Heisenberg factor,
// including the q^{-sum k e_k / 24} prefactor.
QSeries heisenberg_trace(const FrameShape &shape, std::int64_t bound);

// Insertion of the grading operator: D applied to heisenberg_trace.
QSeries heisenberg_weighted_trace(const FrameShape &shape, std::int64_t bound);

// Signed graded trace of the permutation on the Clifford tensor factors; each
// length-k cycle contributes eta(k tau).  Throws on a factor-count mismatch.
QSeries clifford_trace(std::int64_t factors, const CycleShape &shape, std::int64_t bound);

// Graded dimension 1/eta^dim of the small Heisenberg factor.
QSeries U_trace(std::int64_t dim, std::int64_t bound);

// Assembled trace over the twisted module: weighted Heisenberg x Clifford x U.
QSeries W_trace(std::int64_t N, bool is_identity, std::int64_t bound);

// Brute-force oracles.  Both expand determinant factors from explicit
// eigenvalue multisets with exact arithmetic in Z[x]/Phi_L(x) (L the lcm of
// the cycle lengths, prime in every configuration used here) and assert that
// every coefficient collapses to a rational.  Neither uses the eta closed
// forms.  max_degree is capped at 25.
QSeries brute_sym_trace(const FrameShape &shape, std::int64_t max_degree);   // offset 0
QSeries brute_ext_trace(const CycleShape &shape, std::int64_t max_degree);   // with prefactor

}  // namespace qmt

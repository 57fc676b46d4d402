#pragma once

#include "qmt/qseries.hpp"

namespace qmt {

// Index of Gamma_0(N) in SL_2(Z) and Euler totient, exact.
struct LevelData {
    std::int64_t N = 1;
    std::int64_t index = 1;    // N prod_{p|N} (1 + 1/p)
    std::int64_t totient = 1;  // phi(N)
};

LevelData level_data(std::int64_t N);

std::int64_t moebius(std::int64_t n);

// E_2 = 1 - 24 sum sigma_1(n) q^n through q^{bound-1}.
QSeries eisenstein_E2(std::int64_t bound);

// E_{2,N} = (1/(i(N) phi(N))) sum_{M|N} mu(N/M) M^2 E_2(M tau); E_{2,1} = E_2.
QSeries E2N(std::int64_t N, std::int64_t bound);

// sum over r > s > 0, r - s odd of (-1)^r s q^{rs/2}.  Only integer exponents
// occur.  The sign makes the weight-2 completion identity hold; see tests.
QSeries F2(std::int64_t bound);

// (1/24)(N E_2(N tau) - E_2(tau)) for N prime: constant term (N-1)/24, then
// integer coefficients sigma_N(m).
QSeries sigmaN_series(std::int64_t N, std::int64_t bound);

// Recovered from (-2 E_2 + 48 F_2) / eta^3: leading term -2 q^{-1/8}, all
// coefficients even integers.
QSeries He_series(std::int64_t bound);

// The fixed weight-2 cusp forms at levels 11, 14, 15, 23 (eta combinations);
// zero at the genus-zero levels 2..8.  Throws std::invalid_argument
// ("no appendix form") for anything else.
QSeries appendix_GN(std::int64_t N, std::int64_t bound);

bool has_appendix_GN(std::int64_t N);

}  // namespace qmt

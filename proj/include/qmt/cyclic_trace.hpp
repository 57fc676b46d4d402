#pragma once

#include "qmt/qseries.hpp"

#include <optional>

namespace qmt {

// n_N = num((N-1)/12), ell_N = num((N^2-1)/24); both set to 1 at N = 1 so the
// order-1 trace function is well-formed.
struct MoonshineConstants {
    std::int64_t N = 1;
    std::int64_t n = 1;
    std::int64_t ell = 1;
};

MoonshineConstants constants(std::int64_t N);

// Element orders occurring in M23.
bool is_m23_order(std::int64_t N);
const std::vector<std::int64_t> &m23_orders();

// Denominator of the cusp-form multiple in the order-N trace function
// -2 E_{2,N} + (N/d) G_N: the exact denominator of -2 E_{2,N}.  Equals
// constants(N).n at the prime orders; the composite orders 14, 15 need 3, 4.
std::int64_t m23_cusp_denominator(std::int64_t N);

// -2 E_{2,N} + (N / m23_cusp_denominator(N)) * G_N with the fixed cusp forms;
// reduces to -2 E_2 at N = 1.  Integer coefficients.
QSeries Q_M23(std::int64_t N, std::int64_t bound);

// (-ell_N E_{2,N} - N G) / n_N for N prime.  Throws std::domain_error when the
// result is non-integral (the supplied G fails the Eisenstein congruence).
QSeries QN_N(std::int64_t N, const QSeries &G, std::int64_t bound);

// (-ell_N / n_N) E_2 for N prime; always integral.
QSeries Q1_N(std::int64_t N, std::int64_t bound);

// Trace function with a cusp-form contribution: dispatches to Q1_N / QN_N.
QSeries f_g(std::int64_t N, bool is_identity, const QSeries &G, std::int64_t bound);

// Purely Eisenstein trace function: -ell_N E_2 (identity) or -ell_N E_{2,N}.
QSeries F_g(std::int64_t N, bool is_identity, std::int64_t bound);

enum class TraceFlavor { M23, CyclicWithCusp, CyclicEisenstein };

struct TraceFunctionSet {
    std::int64_t N = 1;
    QSeries identity_series;
    QSeries nonidentity_series;
    TraceFlavor flavor = TraceFlavor::CyclicEisenstein;
    std::optional<QSeries> cusp_form_used;
};

TraceFunctionSet make_cusp_trace_set(std::int64_t N, const QSeries &G, std::int64_t bound);
TraceFunctionSet make_eisenstein_trace_set(std::int64_t N, std::int64_t bound);

}  // namespace qmt

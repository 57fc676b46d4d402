#include "qmt/cyclic_trace.hpp"

#include "qmt/modforms.hpp"

#include <stdexcept>

namespace qmt {

MoonshineConstants constants(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("constants: N must be positive");
    MoonshineConstants mc;
    mc.N = N;
    if (N == 1) return mc;  // num(0) would vanish; both constants fixed to 1
    mc.n = make_rat(N - 1, 12).get_num().get_si();
    mc.ell = make_rat(N * N - 1, 24).get_num().get_si();
    return mc;
}

const std::vector<std::int64_t> &m23_orders() {
    static const std::vector<std::int64_t> orders{1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23};
    return orders;
}

bool is_m23_order(std::int64_t N) {
    for (std::int64_t o : m23_orders())
        if (o == N) return true;
    return false;
}

std::int64_t m23_cusp_denominator(std::int64_t N) {
    switch (N) {
        case 11: return 5;
        case 14: return 3;
        case 15: return 4;
        case 23: return 11;
        default: return 1;  // levels without a cusp-form contribution
    }
}

QSeries Q_M23(std::int64_t N, std::int64_t bound) {
    if (!is_m23_order(N)) throw std::invalid_argument("Q_M23: not an M23 element order");
    QSeries q = series_scale(E2N(N, bound), Rat(-2));
    if (N >= 11) {
        QSeries g = appendix_GN(N, bound);
        q = series_add(q, series_scale(g, make_rat(N, m23_cusp_denominator(N))));
    }
    return q;
}

QSeries QN_N(std::int64_t N, const QSeries &G, std::int64_t bound) {
    MoonshineConstants mc = constants(N);
    QSeries s = series_add(series_scale(E2N(N, bound), Rat(-mc.ell)),
                           series_scale(G, Rat(-N)));
    s = series_scale(s, make_rat(1, mc.n));
    if (!s.is_integral()) throw std::domain_error("cusp form violates Prop. 3.3 congruence");
    return s;
}

QSeries Q1_N(std::int64_t N, std::int64_t bound) {
    MoonshineConstants mc = constants(N);
    return series_scale(eisenstein_E2(bound), make_rat(-mc.ell, mc.n));
}

QSeries f_g(std::int64_t N, bool is_identity, const QSeries &G, std::int64_t bound) {
    return is_identity ? Q1_N(N, bound) : QN_N(N, G, bound);
}

QSeries F_g(std::int64_t N, bool is_identity, std::int64_t bound) {
    MoonshineConstants mc = constants(N);
    QSeries base = is_identity ? eisenstein_E2(bound) : E2N(N, bound);
    return series_scale(base, Rat(-mc.ell));
}

namespace {

void check_trace_set(const TraceFunctionSet &t, const Rat &id_constant) {
    if (!t.identity_series.is_integral() || !t.nonidentity_series.is_integral())
        throw std::domain_error("trace function set: non-integral series");
    if (t.identity_series.coeff_q(0) != id_constant)
        throw std::domain_error("trace function set: wrong constant term");
}

}  // namespace

TraceFunctionSet make_cusp_trace_set(std::int64_t N, const QSeries &G, std::int64_t bound) {
    TraceFunctionSet t;
    t.N = N;
    t.flavor = TraceFlavor::CyclicWithCusp;
    t.identity_series = Q1_N(N, bound);
    t.nonidentity_series = QN_N(N, G, bound);
    t.cusp_form_used = G;
    MoonshineConstants mc = constants(N);
    check_trace_set(t, make_rat(-mc.ell, mc.n));
    return t;
}

TraceFunctionSet make_eisenstein_trace_set(std::int64_t N, std::int64_t bound) {
    TraceFunctionSet t;
    t.N = N;
    t.flavor = TraceFlavor::CyclicEisenstein;
    t.identity_series = F_g(N, true, bound);
    t.nonidentity_series = F_g(N, false, bound);
    check_trace_set(t, Rat(-constants(N).ell));
    return t;
}

}  // namespace qmt

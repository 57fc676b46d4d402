#include "doctest.h"

#include "qmt/cyclic_trace.hpp"
#include "qmt/modforms.hpp"

#include <numeric>

using namespace qmt;

TEST_CASE("moonshine constants") {
    CHECK(constants(11).n == 5);
    CHECK(constants(11).ell == 5);
    CHECK(constants(23).n == 11);
    CHECK(constants(23).ell == 22);
    CHECK(constants(2).n == 1);
    CHECK(constants(2).ell == 1);
    CHECK(constants(3).ell == 1);
    CHECK(constants(7).ell == 2);
    CHECK(constants(1).n == 1);
    for (long N : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        CHECK(constants(N).ell == (N * N - 1) / 24);
        CHECK(std::gcd(constants(N).n, N) == 1);
        // ell_N / n_N is an integer for prime N; Q1_N depends on it
        CHECK(constants(N).ell % constants(N).n == 0);
    }
}

TEST_CASE("M23 orders and cusp denominators") {
    CHECK(m23_orders().size() == 12);
    CHECK(is_m23_order(23));
    CHECK_FALSE(is_m23_order(13));
    // at prime orders the denominator is num((N-1)/12)
    CHECK(m23_cusp_denominator(11) == constants(11).n);
    CHECK(m23_cusp_denominator(23) == constants(23).n);
    CHECK(m23_cusp_denominator(14) == 3);
    CHECK(m23_cusp_denominator(15) == 4);
}

TEST_CASE("Q_M23 values") {
    CHECK(series_equal(Q_M23(1, 40), series_scale(eisenstein_E2(40), Rat(-2))));
    CHECK((Q_M23(11, 20).coeff_q(1) == 4));
    CHECK(series_equal(Q_M23(5, 40), series_scale(E2N(5, 40), Rat(-2))));
    for (long N : m23_orders()) CHECK(Q_M23(N, 60).is_integral());
    CHECK_THROWS_AS(Q_M23(13, 20), std::invalid_argument);
}

TEST_CASE("Q1_N") {
    CHECK(series_equal(Q1_N(2, 30), series_scale(eisenstein_E2(30), Rat(-1))));
    CHECK(series_equal(Q1_N(11, 30), series_scale(eisenstein_E2(30), Rat(-1))));
    CHECK((Q1_N(23, 30).coeff_q(0) == -2));
    for (long N : {2, 3, 5, 7, 11, 13, 23, 31}) CHECK(Q1_N(N, 40).is_integral());
}

TEST_CASE("QN_N with the trivial cusp form at N=2") {
    QSeries q2 = QN_N(2, QSeries::zero(24 * 30), 30);
    CHECK((q2.coeff_q(0) == -1));
    CHECK((q2.coeff_q(1) == -8));
    CHECK((q2.coeff_q(2) == 8));
    CHECK((q2.coeff_q(3) == -32));
    CHECK(series_equal(q2, series_scale(E2N(2, 30), Rat(-1))));
}

TEST_CASE("QN_N rejects the level-11 appendix form") {
    // the q^1 coefficient of the assembly would be -23/5
    QSeries g = appendix_GN(11, 30);
    CHECK_THROWS_AS(QN_N(11, g, 30), std::domain_error);
    // the un-negated newform fails too; only G = -(newform) assembles integrally
    QSeries newform = series_scale(g, make_rat(1, 2));
    CHECK_THROWS_AS(QN_N(11, newform, 30), std::domain_error);
}

TEST_CASE("QN_N accepts the negated newform at N=11") {
    // G = -(newform); the newform is appendix G11 halved
    QSeries newform = series_scale(appendix_GN(11, 30), make_rat(1, 2));
    QSeries G = series_scale(newform, Rat(-1));
    QSeries q = QN_N(11, G, 30);
    CHECK(q.is_integral());
    CHECK((q.coeff_q(1) == 2));  // (-5*(1/5) + 11*1)/5
}

TEST_CASE("f_g dispatch") {
    QSeries zero = QSeries::zero(24 * 20);
    CHECK(series_equal(f_g(2, true, zero, 20), Q1_N(2, 20)));
    CHECK(series_equal(f_g(2, false, zero, 20), QN_N(2, zero, 20)));
    QSeries G = series_scale(appendix_GN(11, 20), make_rat(-1, 2));
    CHECK(series_equal(f_g(11, false, G, 20), QN_N(11, G, 20)));
}

TEST_CASE("F_g: purely Eisenstein pair") {
    CHECK(series_equal(F_g(2, true, 30), series_scale(eisenstein_E2(30), Rat(-1))));
    CHECK(series_equal(F_g(5, false, 30), series_scale(E2N(5, 30), Rat(-1))));
    CHECK((F_g(7, true, 30).coeff_q(0) == -2));
    for (long N : {2, 3, 5, 7, 11, 13, 17}) {
        CHECK(F_g(N, true, 40).is_integral());
        CHECK(F_g(N, false, 40).is_integral());
        // F_e + ell E2 = 0 and F_g + ell E2N = 0 exactly
        long ell = constants(N).ell;
        CHECK(series_add(F_g(N, true, 40), series_scale(eisenstein_E2(40), Rat(ell))).is_zero());
        CHECK(series_add(F_g(N, false, 40), series_scale(E2N(N, 40), Rat(ell))).is_zero());
    }
}

TEST_CASE("trace function sets") {
    TraceFunctionSet te = make_eisenstein_trace_set(5, 30);
    CHECK((te.identity_series.coeff_q(0) == -1));
    CHECK(te.identity_series.is_integral());
    CHECK(te.nonidentity_series.is_integral());
    CHECK(te.flavor == TraceFlavor::CyclicEisenstein);

    QSeries G = series_scale(appendix_GN(11, 30), make_rat(-1, 2));
    TraceFunctionSet tc = make_cusp_trace_set(11, G, 30);
    CHECK((tc.identity_series.coeff_q(0) == -1));  // -ell/n = -1 at N=11
    CHECK(tc.cusp_form_used.has_value());
}

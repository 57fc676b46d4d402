#include "doctest.h"

#include "qmt/modforms.hpp"

#include <vector>

using namespace qmt;

namespace {

// divisor sum by direct enumeration, independent of the sieve in the library
long sigma1_direct(long n) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

// coefficient of q^n in F2 by scanning all factorizations rs = 2n
long f2_direct(long n) {
    long total = 0;
    for (long r = 1; r <= 2 * n; ++r) {
        if ((2 * n) % r) continue;
        long s = 2 * n / r;
        if (r > s && s > 0 && (r - s) % 2 == 1) total += (r % 2 == 0 ? s : -s);
    }
    return total;
}

}  // namespace

TEST_CASE("level data") {
    CHECK(level_data(1).index == 1);
    CHECK(level_data(11).index == 12);
    CHECK(level_data(11).totient == 10);
    CHECK(level_data(14).index == 24);
    CHECK(level_data(15).index == 24);
    CHECK(level_data(12).index == 24);
    for (long p : {2, 3, 5, 7, 11, 13, 17}) {
        CHECK(level_data(p).index == p + 1);
        CHECK(level_data(p).totient == p - 1);
    }
}

TEST_CASE("E2 coefficients against the direct divisor sum") {
    QSeries e2 = eisenstein_E2(200);
    CHECK((e2.coeff_q(0) == 1));
    CHECK((e2.coeff_q(1) == -24));
    CHECK((e2.coeff_q(4) == -168));
    for (long n = 1; n < 200; ++n) CHECK((e2.coeff_q(n) == -24 * sigma1_direct(n)));
    CHECK((series_D(e2).coeff_q(1) == -24));
}

TEST_CASE("E2N at small levels") {
    CHECK(series_equal(E2N(1, 40), eisenstein_E2(40)));
    CHECK((E2N(2, 20).coeff_q(1) == 8));
    CHECK((E2N(11, 20).coeff_q(1) == make_rat(1, 5)));
    CHECK((E2N(11, 20).coeff_q(0) == 1));
}

TEST_CASE("E2N: Moebius sum equals the two-term prime form") {
    std::int64_t B = 60;
    QSeries e2 = eisenstein_E2(B);
    for (long N : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                   71, 73, 79, 83, 89, 97}) {
        QSeries lhs = E2N(N, B);
        QSeries rhs = series_scale(
            series_sub(series_scale(series_dilate(e2, N), Rat(N * N)), e2),
            make_rat(1, (N + 1) * (N - 1)));
        CHECK(series_equal(lhs, rhs));
    }
}

TEST_CASE("F2 coefficients") {
    QSeries f2 = F2(120);
    CHECK((f2.coeff_q(1) == 1));
    CHECK((f2.coeff_q(3) == -1));
    CHECK((f2.coeff_q(5) == -1));
    for (long n = 1; n < 120; ++n) CHECK((f2.coeff_q(n) == f2_direct(n)));
}

TEST_CASE("sigmaN series") {
    QSeries s11 = sigmaN_series(11, 60);
    CHECK((s11.coeff_q(0) == make_rat(5, 12)));
    CHECK((s11.coeff_q(1) == 1));
    CHECK((s11.coeff_q(2) == 3));
    for (long m = 1; m < 60; ++m) {
        CHECK(is_integer(s11.coeff_q(m)));
        if (m % 11 != 0) CHECK((s11.coeff_q(m) == sigma1_direct(m)));
    }
    CHECK((sigmaN_series(11, 60).coeff_q(11) == 1));  // sigma(11) - 11 = 1
}

TEST_CASE("He series: leading term and multiplicity doubles") {
    QSeries he = He_series(40);
    CHECK(he.offset() == -3);
    CHECK((he.at(-3) == -2));
    CHECK((he.at(21) == 90));    // q^{7/8}
    CHECK((he.at(45) == 462));   // q^{15/8}
    for (const auto &[e, c] : he.terms()) {
        CHECK(is_integer(c));
        CHECK((c.get_num() % 2 == 0));
    }
}

TEST_CASE("weight-2 completion identity: (-2 E2 + 48 F2) = He * eta^3") {
    std::int64_t B = 120;
    QSeries lhs = series_add(series_scale(eisenstein_E2(B), Rat(-2)),
                             series_scale(F2(B), Rat(48)));
    QSeries rhs = series_mul(He_series(B), eta_expand(EtaQuotientSpec{{{1, 3}}}, B));
    CHECK(series_sub(lhs, rhs).is_zero());
}

TEST_CASE("appendix cusp forms") {
    QSeries g11 = appendix_GN(11, 12);
    CHECK((g11.coeff_q(1) == 2));
    CHECK((g11.coeff_q(2) == -4));
    CHECK((g11.coeff_q(3) == -2));

    CHECK((appendix_GN(14, 12).coeff_q(1) == 1));
    CHECK((appendix_GN(15, 12).coeff_q(1) == 1));

    QSeries g23 = appendix_GN(23, 40);
    CHECK(g23.is_integral());
    CHECK((g23.coeff_q(0) == 0));
    CHECK((g23.coeff_q(1) == 1));

    CHECK(appendix_GN(5, 12).is_zero());
    CHECK(appendix_GN(2, 12).is_zero());
    CHECK_THROWS_AS(appendix_GN(9, 12), std::invalid_argument);
    CHECK_THROWS_AS(appendix_GN(13, 12), std::invalid_argument);

    for (long N : {11, 14, 15, 23}) {
        QSeries g = appendix_GN(N, 30);
        CHECK(g.is_integral());
        CHECK((g.coeff_q(0) == 0));
    }
}

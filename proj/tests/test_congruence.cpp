#include "doctest.h"

#include "qmt/basis_io.hpp"
#include "qmt/congruence.hpp"
#include "qmt/cyclic_trace.hpp"
#include "qmt/modforms.hpp"

#include <string>

using namespace qmt;

namespace {

std::string data_path(const std::string &rel) { return std::string(QMT_DATA_DIR) + "/" + rel; }

CuspBasis load_level(long N) {
    return parse_cusp_basis(data_path("cusp-bases/level-" + std::to_string(N) + ".txt"));
}

}  // namespace

TEST_CASE("sturm window floor") {
    CHECK(sturm_window(11) == 4);
    CHECK(sturm_window(97) == 34);
}

TEST_CASE("series_congruent basics") {
    QSeries a = series_scale(eisenstein_E2(20), Rat(-1));
    CHECK(series_congruent(a, a, Int(7), false).pass);

    // -E_{2,2} and -E_2 agree mod 2
    QSeries q2 = series_scale(E2N(2, 30), Rat(-1));
    QSeries q1 = series_scale(eisenstein_E2(30), Rat(-1));
    CHECK(series_congruent(q2, q1, Int(2), false).pass);

    QSeries u = series_add(QSeries::constant(Rat(1), 96), QSeries::monomial(Rat(1), 24, 96));
    QSeries v = series_add(QSeries::constant(Rat(1), 96), QSeries::monomial(Rat(2), 24, 96));
    CongruenceWitness w = series_congruent(u, v, Int(2), false);
    CHECK_FALSE(w.pass);
    CHECK(w.lattice_exponent == 24);

    QSeries frac = series_add(QSeries::constant(Rat(1), 96),
                              QSeries::monomial(make_rat(1, 2), 24, 96));
    CHECK_THROWS_AS(series_congruent(frac, u, Int(2), false), std::domain_error);

    // skip_constant exempts the constant term only
    QSeries c1 = QSeries::constant(make_rat(5, 12), 48);
    QSeries c2 = QSeries::zero(48);
    CHECK(series_congruent(c1, c2, Int(3), true).pass);
    CHECK_THROWS_AS(series_congruent(c1, c2, Int(3), false), std::domain_error);
}

TEST_CASE("solve_linear_mod: fields, prime powers, insoluble systems") {
    std::vector<Int> x;
    // 3x = 1 mod 5 -> x = 2
    CHECK(solve_linear_mod({{3}}, {1}, 5, x));
    CHECK(x[0] == 2);
    // mod 8: 2x = 4 -> x in {2, 6}; 2x = 2 mod 8 and 4x = 4 mod 8 jointly
    CHECK(solve_linear_mod({{2}, {4}}, {4, 0}, 8, x));
    CHECK((2 * x[0] - 4) % 8 == 0);
    CHECK((4 * x[0]) % 8 == 0);
    // insoluble: 2x = 1 mod 4
    CHECK_FALSE(solve_linear_mod({{2}}, {1}, 4, x));
    // composite modulus via CRT: 5x = 7 mod 6
    CHECK(solve_linear_mod({{5}}, {7}, 6, x));
    CHECK((5 * x[0] - 7) % 6 == 0);
    // two unknowns mod 10
    CHECK(solve_linear_mod({{2, 3}, {1, 1}}, {1, 2}, 10, x));
    CHECK((2 * x[0] + 3 * x[1] - 1) % 10 == 0);
    CHECK((x[0] + x[1] - 2) % 10 == 0);
}

TEST_CASE("mazur_search at level 11 finds the newform") {
    CuspBasis basis = load_level(11);
    CHECK(basis.dim() == 1);
    MazurResult mz = mazur_search(11, basis, 24);
    CHECK(mz.solution.size() == 1);
    CHECK(mz.solution[0] == 1);
    CHECK(mz.g.coeff_q(1) == 1);
    CHECK(mz.g.coeff_q(2) == -2);
    CHECK(mz.G.coeff_q(1) == -1);
    // c_g(2) = -2 = 3 = sigma_11(2) mod 5
    CHECK(series_congruent_below(mz.g, sigmaN_series(11, 24), Int(5), true, 24 * 24).pass);
}

TEST_CASE("mazur_search trivial branch and level 23") {
    CuspBasis b2 = load_level(2);
    CHECK(b2.dim() == 0);
    MazurResult mz2 = mazur_search(2, b2, 24);
    CHECK(mz2.g.is_zero());
    CHECK(mz2.G.is_zero());

    CuspBasis b23 = load_level(23);
    CHECK(b23.dim() == 2);
    MazurResult mz23 = mazur_search(23, b23, 48);
    CHECK(series_congruent_below(mz23.g, sigmaN_series(23, 48), Int(11), true, 24 * 48).pass);
}

TEST_CASE("mazur_search preconditions") {
    CuspBasis basis = load_level(11);
    CHECK_THROWS_AS(mazur_search(7, basis, 24), std::invalid_argument);  // level mismatch
    CHECK_THROWS_AS(mazur_search(11, basis, 2), std::invalid_argument);  // below Sturm floor
}

TEST_CASE("mazur_search rejects a basis that cannot satisfy the congruence") {
    // a fake basis whose single form vanishes identically mod 5 in the window
    CuspBasis fake;
    fake.level = 11;
    fake.bound = 30;
    std::vector<Rat> c(static_cast<std::size_t>(24 * 31));
    c[24] = 5;
    c[48] = 10;
    fake.forms.push_back(QSeries::from_coeffs(0, std::move(c), 24 * 31));
    CHECK_THROWS_AS(mazur_search(11, fake, 24), std::runtime_error);
}

TEST_CASE("prop33_check") {
    CuspBasis basis = load_level(11);
    MazurResult mz = mazur_search(11, basis, 24);
    CHECK(prop33_check(11, mz.G, 24).pass);
    CHECK(prop33_check(3, QSeries::zero(24 * 30), 24).pass);

    CongruenceWitness w = prop33_check(11, appendix_GN(11, 30), 24);
    CHECK_FALSE(w.pass);
    CHECK(w.lattice_exponent == 24);  // 1 != -22 mod 5 at q^1
}

TEST_CASE("lemma34_check at the worked small levels") {
    CHECK(lemma34_check(2, QSeries::zero(24 * 120), 100).pass);
    CHECK(lemma34_check(3, QSeries::zero(24 * 120), 100).pass);
    CuspBasis basis = load_level(11);
    MazurResult mz = mazur_search(11, basis, 24);
    CHECK(lemma34_check(11, mz.G, 100).pass);
}

TEST_CASE("znz_multiplicities spot values at N=2") {
    QSeries f_e = Q1_N(2, 20);
    QSeries f_g2 = QN_N(2, QSeries::zero(24 * 20), 20);
    MultiplicityTable t = znz_multiplicities(2, f_e, f_g2, 20);
    CHECK(t.multiplicity(0, 0) == -1);
    CHECK(t.multiplicity(0, 1) == 0);
    CHECK(t.multiplicity(1, 0) == 8);
    CHECK(t.multiplicity(1, 1) == 16);
}

TEST_CASE("znz_multiplicities: degenerate equality and reconstruction") {
    QSeries f = series_scale(eisenstein_E2(30), Rat(-5));
    MultiplicityTable t = znz_multiplicities(5, f, f, 30);
    for (long n = 0; n < 30; ++n) {
        CHECK(t.multiplicity(n, 1) == 0);
        CHECK(t.multiplicity(n, 0) == f.coeff_q(n).get_num());
    }

    QSeries f_e = F_g(5, true, 40), f_tw = F_g(5, false, 40);
    MultiplicityTable t5 = znz_multiplicities(5, f_e, f_tw, 40);
    for (long n = 0; n < 40; ++n) {
        Int m0 = t5.multiplicity(n, 0), m1 = t5.multiplicity(n, 1);
        CHECK(f_e.coeff_q(n).get_num() == m0 + 4 * m1);
        CHECK(f_tw.coeff_q(n).get_num() == m0 - m1);
    }
}

TEST_CASE("znz_multiplicities rejects non-congruent pairs") {
    QSeries a = QSeries::constant(Rat(1), 48);
    QSeries b = QSeries::constant(Rat(2), 48);
    CHECK_THROWS_WITH_AS(znz_multiplicities(5, a, b, 2), "module existence violated at n=0",
                         std::domain_error);
}

TEST_CASE("basis invariants across all shipped levels") {
    for (long N : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                   73, 79, 83, 89, 97}) {
        CuspBasis basis = load_level(N);
        CHECK(basis.level == N);
        CHECK(basis.bound >= sturm_window(N));
        for (const QSeries &f : basis.forms) {
            CHECK(f.is_integral());
            CHECK(f.coeff_q(0) == 0);
        }
    }
}

#pragma once

#include "qmt/qseries.hpp"

#include <vector>

namespace qmt {

// Ingested integer q-expansions spanning the weight-2 cusp forms of a level.
struct CuspBasis {
    std::int64_t level = 0;
    std::vector<QSeries> forms;  // integer coefficients, zero constant term
    std::int64_t bound = 0;      // coefficients 1..bound are trusted

    std::int64_t dim() const { return static_cast<std::int64_t>(forms.size()); }
};

// Verification window floor: 2 * ceil((N+1)/6).
std::int64_t sturm_window(std::int64_t N);

// Outcome of a coefficient-wise congruence scan.
struct CongruenceWitness {
    bool pass = true;
    std::int64_t lattice_exponent = 0;  // first failing exponent when !pass

    explicit operator bool() const { return pass; }
};

// a == b (mod m) coefficient-wise below the common bound.  Both series must be
// integral where compared; throws std::domain_error otherwise.  skip_constant
// exempts the exponent-zero coefficient.
CongruenceWitness series_congruent(const QSeries &a, const QSeries &b, const Int &m,
                                   bool skip_constant);
// Same scan restricted to lattice exponents < window_lattice.
CongruenceWitness series_congruent_below(const QSeries &a, const QSeries &b, const Int &m,
                                         bool skip_constant, std::int64_t window_lattice);

struct MazurResult {
    QSeries g;                   // integer combination with c_g(m) = sigma_N(m) mod n_N
    QSeries G;                   // -g, the cusp form entering the trace function
    std::vector<Int> solution;   // coefficients of g over the basis, in [0, n_N)
};

// Solves for an integer combination of the basis congruent to the normalized
// Eisenstein series modulo n_N on coefficients 1..window-1.  Returns (0, 0)
// for N in {2, 3}.  Throws std::runtime_error("congruence system insoluble")
// when no combination exists.
MazurResult mazur_search(std::int64_t N, const CuspBasis &basis, std::int64_t window);

// ell_N E_{2,N} == -N G (mod n_N) for exponents 0 <= m < window.
CongruenceWitness prop33_check(std::int64_t N, const QSeries &G, std::int64_t window);

// Q_N^{(N)} == Q_1^{(N)} (mod N) for exponents < window.
CongruenceWitness lemma34_check(std::int64_t N, const QSeries &G, std::int64_t window);

// Multiplicities of the irreducible characters of Z/NZ in the virtual module
// defined by a pair of integer trace series.  m_1(n) = ... = m_{N-1}(n).
struct MultiplicityTable {
    std::int64_t N = 0;
    std::vector<Int> m0;      // trivial character, index n from 0
    std::vector<Int> m_rest;  // common value of the non-trivial characters

    Int multiplicity(std::int64_t n, std::int64_t i) const {
        return i == 0 ? m0.at(static_cast<std::size_t>(n))
                      : m_rest.at(static_cast<std::size_t>(n));
    }
    std::int64_t rows() const { return static_cast<std::int64_t>(m0.size()); }
};

// m0(n) = (f_id[n] + (N-1) f_other[n]) / N, m_i(n) = (f_id[n] - f_other[n]) / N.
// Throws std::domain_error("module existence violated ...") when any entry is
// not an integer.
MultiplicityTable znz_multiplicities(std::int64_t N, const QSeries &f_identity,
                                     const QSeries &f_other, std::int64_t bound);

// Linear solver over Z/n used by mazur_search; exposed for tests.
// Finds x with A x = b (mod n); empty optional when insoluble.
bool solve_linear_mod(const std::vector<std::vector<Int>> &A, const std::vector<Int> &b,
                      const Int &n, std::vector<Int> &out);

}  // namespace qmt

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qmt {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; always build rationals through this.
inline Rat make_rat(const Int &num, const Int &den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat &r) { return r.get_den() == 1; }

// Truncated formal q-series with exact rational coefficients on the exponent
// lattice (1/24)Z.  A value knows three things:
//
//   offset()         exponent (in lattice units) of the first stored term;
//                    every exponent below it is exactly zero
//   lattice_bound()  exclusive bound; coefficients at exponents >= bound are
//                    unknown and may never be read
//   at(e)            coefficient of q^{e/24} for offset <= e < bound
//
// All operations are pure and propagate the bound pessimistically, so a
// coefficient can be read only where every contributing term was trusted.
class QSeries {
  public:
    QSeries() = default;

    // All-zero series trusted for exponents < lattice_bound.
    static QSeries zero(std::int64_t lattice_bound);
    static QSeries constant(const Rat &c, std::int64_t lattice_bound);
    // c * q^{e/24}
    static QSeries monomial(const Rat &c, std::int64_t lattice_exp, std::int64_t lattice_bound);
    // Raw construction: coeffs[i] is the coefficient of q^{(offset+i)/24}.
    static QSeries from_coeffs(std::int64_t offset, std::vector<Rat> coeffs,
                               std::int64_t lattice_bound);

    std::int64_t offset() const { return offset_; }
    std::int64_t lattice_bound() const { return bound_; }

    bool is_zero() const { return coeff_.empty(); }
    // True when every coefficient is an integer and the support lies on
    // integer exponents.  Recomputed on every call, never cached.
    bool is_integral() const;

    // Coefficient of q^{e/24}.  Throws std::out_of_range at or past the bound.
    const Rat &at(std::int64_t lattice_exp) const;
    // Coefficient of q^n (integer exponent).
    const Rat &coeff_q(std::int64_t n) const { return at(24 * n); }

    // Nonzero terms as (lattice exponent, coefficient), ascending.
    std::vector<std::pair<std::int64_t, Rat>> terms() const;

    std::string to_string() const;

  private:
    std::int64_t offset_ = 0;
    std::int64_t bound_ = 0;
    std::vector<Rat> coeff_;  // trimmed: empty, or first and last entries nonzero

    void normalize();
    friend QSeries series_add(const QSeries &, const QSeries &);
    friend QSeries series_mul(const QSeries &, const QSeries &);
    friend QSeries series_scale(const QSeries &, const Rat &);
    friend QSeries series_dilate(const QSeries &, std::int64_t);
    friend QSeries series_D(const QSeries &);
    friend QSeries series_invert(const QSeries &);
};

QSeries series_add(const QSeries &a, const QSeries &b);
QSeries series_sub(const QSeries &a, const QSeries &b);
QSeries series_mul(const QSeries &a, const QSeries &b);
QSeries series_scale(const QSeries &a, const Rat &r);
// Substitutes q -> q^k; lattice exponents multiply by k, and so does the bound.
QSeries series_dilate(const QSeries &a, std::int64_t k);
// D = q d/dq: c q^{m/24} -> c (m/24) q^{m/24}.
QSeries series_D(const QSeries &a);
// Multiplicative inverse through the bound.  Throws std::domain_error
// ("non-unit series") when no leading nonzero coefficient is known.
QSeries series_invert(const QSeries &a);
// Exact multiplication by the monomial q^{s/24}: offset and bound both move.
QSeries series_shift(const QSeries &a, std::int64_t s);

// Exact equality of every coefficient below the smaller bound.
bool series_equal(const QSeries &a, const QSeries &b);

// Finite list of (dilation k, exponent e) pairs denoting prod eta(k tau)^e.
struct EtaQuotientSpec {
    std::vector<std::pair<std::int64_t, std::int64_t>> factors;

    // Merge duplicate k, drop zero exponents, sort by k.
    EtaQuotientSpec normalized() const;
    // Leading exponent sum k*e in lattice units.
    std::int64_t lead_exponent() const;
    std::string to_string() const;
};

bool operator==(const EtaQuotientSpec &a, const EtaQuotientSpec &b);

// Expands prod_k [ q^{k/24} prod_{n>=1} (1 - q^{kn}) ]^{e_k} with `bound`
// trusted integer steps past the leading exponent.
QSeries eta_expand(const EtaQuotientSpec &spec, std::int64_t bound);

}  // namespace qmt

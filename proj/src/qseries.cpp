#include "qmt/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmt {

namespace {

const Rat kZero = 0;

// Nonzero entries of a trimmed series as (lattice exponent, pointer).
std::vector<std::pair<std::int64_t, const Rat *>> nonzeros(std::int64_t offset,
                                                           const std::vector<Rat> &c) {
    std::vector<std::pair<std::int64_t, const Rat *>> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out.emplace_back(offset + static_cast<std::int64_t>(i), &c[i]);
    return out;
}

}  // namespace

void QSeries::normalize() {
    std::size_t lo = 0;
    while (lo < coeff_.size() && coeff_[lo] == 0) ++lo;
    std::size_t hi = coeff_.size();
    while (hi > lo && coeff_[hi - 1] == 0) --hi;
    if (lo == hi) {
        coeff_.clear();
        offset_ = bound_;
        return;
    }
    if (lo > 0) coeff_.erase(coeff_.begin(), coeff_.begin() + static_cast<std::ptrdiff_t>(lo));
    coeff_.resize(hi - lo);
    offset_ += static_cast<std::int64_t>(lo);
}

QSeries QSeries::zero(std::int64_t lattice_bound) {
    QSeries s;
    s.offset_ = lattice_bound;
    s.bound_ = lattice_bound;
    return s;
}

QSeries QSeries::constant(const Rat &c, std::int64_t lattice_bound) {
    return monomial(c, 0, lattice_bound);
}

QSeries QSeries::monomial(const Rat &c, std::int64_t lattice_exp, std::int64_t lattice_bound) {
    if (c == 0 || lattice_exp >= lattice_bound) return zero(lattice_bound);
    QSeries s;
    s.offset_ = lattice_exp;
    s.bound_ = lattice_bound;
    s.coeff_.push_back(c);
    return s;
}

QSeries QSeries::from_coeffs(std::int64_t offset, std::vector<Rat> coeffs,
                             std::int64_t lattice_bound) {
    QSeries s;
    s.offset_ = offset;
    s.bound_ = lattice_bound;
    s.coeff_ = std::move(coeffs);
    std::int64_t len = static_cast<std::int64_t>(s.coeff_.size());
    if (offset + len > lattice_bound)
        s.coeff_.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, lattice_bound - offset)));
    s.normalize();
    return s;
}

bool QSeries::is_integral() const {
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        if ((offset_ + static_cast<std::int64_t>(i)) % 24 != 0) return false;
        if (!is_integer(coeff_[i])) return false;
    }
    return true;
}

const Rat &QSeries::at(std::int64_t e) const {
    if (e >= bound_) throw std::out_of_range("QSeries: coefficient beyond trusted bound");
    if (e < offset_) return kZero;
    std::int64_t i = e - offset_;
    if (i >= static_cast<std::int64_t>(coeff_.size())) return kZero;
    return coeff_[static_cast<std::size_t>(i)];
}

std::vector<std::pair<std::int64_t, Rat>> QSeries::terms() const {
    std::vector<std::pair<std::int64_t, Rat>> out;
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) out.emplace_back(offset_ + static_cast<std::int64_t>(i), coeff_[i]);
    return out;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        if (e != 0) {
            os << "*q^";
            if (e % 24 == 0)
                os << e / 24;
            else
                os << "(" << make_rat(e, 24).get_str() << ")";
        }
    }
    if (first) os << "0";
    os << " [+O(q^" << make_rat(bound_, 24).get_str() << ")]";
    return os.str();
}

QSeries series_add(const QSeries &a, const QSeries &b) {
    std::int64_t bound = std::min(a.bound_, b.bound_);
    std::int64_t off = std::min(a.offset_, b.offset_);
    if (off >= bound) return QSeries::zero(bound);
    std::vector<Rat> c(static_cast<std::size_t>(bound - off));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
        std::int64_t e = a.offset_ + static_cast<std::int64_t>(i);
        if (e >= bound) break;
        c[static_cast<std::size_t>(e - off)] = a.coeff_[i];
    }
    for (std::size_t i = 0; i < b.coeff_.size(); ++i) {
        std::int64_t e = b.offset_ + static_cast<std::int64_t>(i);
        if (e >= bound) break;
        c[static_cast<std::size_t>(e - off)] += b.coeff_[i];
    }
    return QSeries::from_coeffs(off, std::move(c), bound);
}

QSeries series_sub(const QSeries &a, const QSeries &b) {
    return series_add(a, series_scale(b, Rat(-1)));
}

QSeries series_mul(const QSeries &a, const QSeries &b) {
    std::int64_t bound = std::min(a.bound_ + b.offset_, b.bound_ + a.offset_);
    std::int64_t off = a.offset_ + b.offset_;
    if (a.coeff_.empty() || b.coeff_.empty() || off >= bound) return QSeries::zero(bound);
    auto na = nonzeros(a.offset_, a.coeff_);
    auto nb = nonzeros(b.offset_, b.coeff_);
    std::vector<Rat> c(static_cast<std::size_t>(bound - off));
    Rat prod;
    for (const auto &[ea, pa] : na) {
        if (ea + nb.front().first >= bound) break;
        for (const auto &[eb, pb] : nb) {
            std::int64_t e = ea + eb;
            if (e >= bound) break;
            prod = (*pa) * (*pb);
            c[static_cast<std::size_t>(e - off)] += prod;
        }
    }
    return QSeries::from_coeffs(off, std::move(c), bound);
}

QSeries series_scale(const QSeries &a, const Rat &r) {
    if (r == 0) return QSeries::zero(a.bound_);
    QSeries s = a;
    for (Rat &c : s.coeff_) c *= r;
    return s;
}

QSeries series_dilate(const QSeries &a, std::int64_t k) {
    if (k <= 0) throw std::invalid_argument("series_dilate: dilation must be positive");
    if (k == 1) return a;
    QSeries s;
    s.offset_ = a.offset_ * k;
    s.bound_ = a.bound_ * k;
    if (a.coeff_.empty()) {
        s.offset_ = s.bound_;
        return s;
    }
    s.coeff_.assign(static_cast<std::size_t>((a.coeff_.size() - 1) * k + 1), Rat(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i)
        if (a.coeff_[i] != 0) s.coeff_[i * static_cast<std::size_t>(k)] = a.coeff_[i];
    return s;
}

QSeries series_D(const QSeries &a) {
    QSeries s = a;
    for (std::size_t i = 0; i < s.coeff_.size(); ++i)
        s.coeff_[i] *= make_rat(s.offset_ + static_cast<std::int64_t>(i), 24);
    s.normalize();
    return s;
}

QSeries series_invert(const QSeries &a) {
    if (a.coeff_.empty()) throw std::domain_error("non-unit series");
    std::int64_t o = a.offset_;
    const Rat &lead = a.coeff_.front();
    std::int64_t bound = a.bound_ - 2 * o;  // b = q^{-o}/lead * (1 - u + u^2 - ...)
    std::int64_t len = bound - (-o);
    if (len <= 0) return QSeries::zero(bound);
    // relative nonzero tail of a (exponent j >= 1 relative to its leading term)
    std::vector<std::pair<std::int64_t, const Rat *>> tail;
    for (std::size_t i = 1; i < a.coeff_.size(); ++i)
        if (a.coeff_[i] != 0) tail.emplace_back(static_cast<std::int64_t>(i), &a.coeff_[i]);
    std::vector<Rat> b(static_cast<std::size_t>(len));
    Rat inv_lead = make_rat(lead.get_den(), lead.get_num());
    b[0] = inv_lead;
    Rat acc, t;
    for (std::int64_t n = 1; n < len; ++n) {
        acc = 0;
        for (const auto &[j, pa] : tail) {
            if (j > n) break;
            if (b[static_cast<std::size_t>(n - j)] == 0) continue;
            t = (*pa) * b[static_cast<std::size_t>(n - j)];
            acc += t;
        }
        if (acc != 0) b[static_cast<std::size_t>(n)] = -acc * inv_lead;
    }
    return QSeries::from_coeffs(-o, std::move(b), bound);
}

bool series_equal(const QSeries &a, const QSeries &b) { return series_sub(a, b).is_zero(); }

EtaQuotientSpec EtaQuotientSpec::normalized() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> merged;
    for (auto [k, e] : factors) {
        if (k <= 0) throw std::invalid_argument("eta quotient: dilation must be positive");
        bool found = false;
        for (auto &[mk, me] : merged)
            if (mk == k) {
                me += e;
                found = true;
                break;
            }
        if (!found) merged.emplace_back(k, e);
    }
    std::erase_if(merged, [](const auto &p) { return p.second == 0; });
    std::sort(merged.begin(), merged.end());
    return EtaQuotientSpec{std::move(merged)};
}

std::int64_t EtaQuotientSpec::lead_exponent() const {
    std::int64_t s = 0;
    for (auto [k, e] : factors) s += k * e;
    return s;
}

std::string EtaQuotientSpec::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto [k, e] : normalized().factors) {
        if (!first) os << " ";
        first = false;
        os << k << "^" << e;
    }
    if (first) os << "1";
    return os.str();
}

bool operator==(const EtaQuotientSpec &a, const EtaQuotientSpec &b) {
    return a.normalized().factors == b.normalized().factors;
}

namespace {

// prod_{n>=1} (1 - q^{kn}) through lattice exponents < window, offset 0.
// Worked in place on the stride-24k grid; the partial products stay sparse,
// so the zero-skip keeps each binomial pass near the support size.
QSeries euler_factor(std::int64_t k, std::int64_t window) {
    std::int64_t m = (window - 1) / (24 * k);
    std::vector<Rat> c(static_cast<std::size_t>(m + 1));
    c[0] = 1;
    for (std::int64_t n = 1; n <= m; ++n)
        for (std::int64_t i = m; i >= n; --i)
            if (c[static_cast<std::size_t>(i - n)] != 0)
                c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - n)];
    std::vector<Rat> lat(static_cast<std::size_t>(window));
    for (std::int64_t n = 0; n <= m; ++n)
        if (c[static_cast<std::size_t>(n)] != 0)
            lat[static_cast<std::size_t>(24 * k * n)] = c[static_cast<std::size_t>(n)];
    return QSeries::from_coeffs(0, std::move(lat), window);
}

QSeries series_pow(const QSeries &base, std::int64_t n) {
    // binary powering; n >= 1
    QSeries result = base;
    std::int64_t bit = 62;
    while (bit > 0 && !((n >> bit) & 1)) --bit;
    for (--bit; bit >= 0; --bit) {
        result = series_mul(result, result);
        if ((n >> bit) & 1) result = series_mul(result, base);
    }
    return result;
}

}  // namespace

QSeries series_shift(const QSeries &a, std::int64_t s) {
    std::vector<Rat> c;
    std::int64_t off = a.offset() + s;
    std::int64_t bnd = a.lattice_bound() + s;
    c.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, bnd - off)));
    for (const auto &[e, v] : a.terms()) c[static_cast<std::size_t>(e + s - off)] = v;
    return QSeries::from_coeffs(off, std::move(c), bnd);
}

QSeries eta_expand(const EtaQuotientSpec &spec, std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("eta_expand: bound must be >= 1");
    EtaQuotientSpec n = spec.normalized();
    std::int64_t window = 24 * bound;
    QSeries acc = QSeries::constant(Rat(1), window);
    for (auto [k, e] : n.factors) {
        QSeries f = euler_factor(k, window);
        QSeries p = series_pow(f, e > 0 ? e : -e);
        if (e < 0) p = series_invert(p);
        acc = series_mul(acc, p);
    }
    // attach the q^{sum k e / 24} prefactor as an exact offset shift
    return series_shift(acc, n.lead_exponent());
}

}  // namespace qmt

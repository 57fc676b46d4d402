#include "qmt/arithmetic.hpp"

#include "qmt/modforms.hpp"

#include <stdexcept>

namespace qmt {

Int CurveModel::discriminant() const {
    Int A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
    Int b2 = A1 * A1 + 4 * A2;
    Int b4 = 2 * A4 + A1 * A3;
    Int b6 = A3 * A3 + 4 * A6;
    Int b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool CurveModel::good_reduction(std::int64_t p) const { return discriminant() % p != 0; }

std::vector<std::int64_t> primes_below(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound <= 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(bound), true);
    for (std::int64_t i = 2; i < bound; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j < bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    return out;
}

std::int64_t count_points(const CurveModel &curve, std::int64_t p) {
    if (!curve.good_reduction(p)) throw std::domain_error("bad reduction");
    auto md = [p](std::int64_t v) { return ((v % p) + p) % p; };
    std::int64_t a1 = md(curve.a1), a2 = md(curve.a2), a3 = md(curve.a3), a4 = md(curve.a4),
                 a6 = md(curve.a6);
    if (p == 2) {
        std::int64_t count = 1;
        for (std::int64_t x = 0; x < 2; ++x)
            for (std::int64_t y = 0; y < 2; ++y) {
                std::int64_t f = y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6;
                if (f % 2 == 0) ++count;
            }
        return count;
    }
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6; solutions per x from a
    // residue table of u -> #{v : v^2 = u}
    std::int64_t b2 = md(a1 * a1 + 4 * a2);
    std::int64_t b4 = md(2 * a4 + a1 * a3);
    std::int64_t b6 = md(a3 * a3 + 4 * a6);
    std::vector<std::int64_t> sq(static_cast<std::size_t>(p), 0);
    for (std::int64_t v = 0; v < p; ++v) ++sq[static_cast<std::size_t>((v * v) % p)];
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t x2 = (x * x) % p;
        std::int64_t rhs = md(4 * (x2 * x % p) + b2 * x2 + 2 * b4 * x + b6);
        count += sq[static_cast<std::size_t>(rhs)];
    }
    return count;
}

Int ap_from_series(const QSeries &form, std::int64_t p, const Int &normalization) {
    const Rat &c = form.coeff_q(p);
    if (!is_integer(c)) throw std::domain_error("ap_from_series: non-integral coefficient");
    Int num = c.get_num();
    if (num % normalization != 0) throw std::domain_error("ap_from_series: normalization does not divide");
    return num / normalization;
}

namespace {

struct LevelArithData {
    std::int64_t divisor;
    Int normalization;
    std::vector<std::int64_t> bad_primes;
};

LevelArithData level_arith(std::int64_t N) {
    switch (N) {
        case 11: return {5, 2, {11}};
        case 14: return {3, 1, {2, 7}};
        case 15: return {4, 1, {3, 5}};
        default: throw std::invalid_argument("divisibility_report: unsupported level");
    }
}

}  // namespace

DivisibilityReport divisibility_report(std::int64_t N, std::int64_t prime_bound,
                                       const std::optional<CurveModel> &curve) {
    LevelArithData data = level_arith(N);
    DivisibilityReport rep;
    rep.level = N;
    rep.divisor = data.divisor;
    QSeries G = appendix_GN(N, prime_bound + 1);
    for (std::int64_t p : primes_below(prime_bound)) {
        DivisibilityLine line;
        line.p = p;
        line.c = ap_from_series(G, p, data.normalization);
        line.count = Int(p + 1) - line.c;
        bool bad = false;
        for (std::int64_t q : data.bad_primes) bad |= (q == p);
        line.excluded = bad;
        if (!bad) {
            line.pass = (line.count % data.divisor == 0);
            if (curve && p < 200) {
                std::int64_t pts = count_points(*curve, p);
                line.curve_checked = true;
                line.pass = line.pass && (Int(p + 1) - pts == line.c);
            }
        }
        rep.all_pass = rep.all_pass && line.pass;
        rep.lines.push_back(line);
    }
    return rep;
}

ResidueWitness residue_equivalence(std::int64_t prime_bound) {
    ResidueWitness w;
    QSeries G = appendix_GN(11, prime_bound + 1);
    for (std::int64_t p : primes_below(prime_bound)) {
        if (p == 11) continue;
        ResidueLine line;
        line.p = p;
        Int c = ap_from_series(G, p, Int(2));
        line.lhs = (p % 5 == 4);
        line.rhs = (c % 5 == 0);
        line.pass = (line.lhs == line.rhs);
        w.all_pass = w.all_pass && line.pass;
        w.lines.push_back(line);
    }
    return w;
}

}  // namespace qmt

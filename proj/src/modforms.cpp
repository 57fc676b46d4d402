#include "qmt/modforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qmt {

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> d{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t m = d.size();
        std::int64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < m; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

LevelData level_data(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("level_data: N must be positive");
    LevelData ld;
    ld.N = N;
    ld.index = N;
    ld.totient = N;
    for (auto [p, e] : factorize(N)) {
        ld.index += ld.index / p;  // N prod (1 + 1/p), exact over the factorization
        ld.totient -= ld.totient / p;
    }
    return ld;
}

std::int64_t moebius(std::int64_t n) {
    std::int64_t mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

QSeries eisenstein_E2(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("eisenstein_E2: bound must be >= 1");
    std::vector<Int> sigma(static_cast<std::size_t>(bound), 0);
    for (std::int64_t d = 1; d < bound; ++d)
        for (std::int64_t m = d; m < bound; m += d) sigma[static_cast<std::size_t>(m)] += d;
    std::vector<Rat> c(static_cast<std::size_t>(24 * bound));
    c[0] = 1;
    for (std::int64_t n = 1; n < bound; ++n)
        c[static_cast<std::size_t>(24 * n)] = Rat(-24 * sigma[static_cast<std::size_t>(n)]);
    return QSeries::from_coeffs(0, std::move(c), 24 * bound);
}

QSeries E2N(std::int64_t N, std::int64_t bound) {
    if (N < 1) throw std::invalid_argument("E2N: N must be positive");
    LevelData ld = level_data(N);
    QSeries e2 = eisenstein_E2(bound);
    QSeries acc = QSeries::zero(24 * bound);
    for (std::int64_t M : divisors(N)) {
        std::int64_t mu = moebius(N / M);
        if (mu == 0) continue;
        acc = series_add(acc, series_scale(series_dilate(e2, M), Rat(mu * M * M)));
    }
    return series_scale(acc, make_rat(Int(1), Int(ld.index) * ld.totient));
}

QSeries F2(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("F2: bound must be >= 1");
    std::vector<Rat> c(static_cast<std::size_t>(24 * bound));
    // rs/2 < bound, r > s > 0, r - s odd
    for (std::int64_t s = 1; s * (s + 1) < 2 * bound; ++s) {
        for (std::int64_t r = s + 1; r * s < 2 * bound; r += 2) {
            std::int64_t n = r * s / 2;
            std::int64_t sgn = (r % 2 == 0) ? 1 : -1;
            c[static_cast<std::size_t>(24 * n)] += Rat(sgn * s);
        }
    }
    return QSeries::from_coeffs(0, std::move(c), 24 * bound);
}

QSeries sigmaN_series(std::int64_t N, std::int64_t bound) {
    QSeries e2 = eisenstein_E2(bound);
    QSeries s = series_sub(series_scale(series_dilate(e2, N), Rat(N)), e2);
    return series_scale(s, make_rat(1, 24));
}

QSeries He_series(std::int64_t bound) {
    if (bound < 2) throw std::invalid_argument("He_series: bound must be >= 2");
    QSeries num = series_add(series_scale(eisenstein_E2(bound), Rat(-2)),
                             series_scale(F2(bound), Rat(48)));
    QSeries eta3 = eta_expand(EtaQuotientSpec{{{1, 3}}}, bound);
    return series_mul(num, series_invert(eta3));
}

bool has_appendix_GN(std::int64_t N) {
    return (N >= 2 && N <= 8) || N == 11 || N == 14 || N == 15 || N == 23;
}

QSeries appendix_GN(std::int64_t N, std::int64_t bound) {
    auto eta = [bound](std::initializer_list<std::pair<std::int64_t, std::int64_t>> fs) {
        return eta_expand(EtaQuotientSpec{std::vector<std::pair<std::int64_t, std::int64_t>>(fs)},
                          bound + 6);
    };
    switch (N) {
        case 2: case 3: case 4: case 5: case 6: case 7: case 8:
            return QSeries::zero(24 * bound);  // weight-2 cusp forms are absent at these levels
        case 11:
            return series_scale(eta({{1, 2}, {11, 2}}), Rat(2));
        case 14:
            return eta({{1, 1}, {2, 1}, {7, 1}, {14, 1}});
        case 15:
            return eta({{1, 1}, {3, 1}, {5, 1}, {15, 1}});
        case 23: {
            QSeries quot = series_mul(eta({{1, 3}, {23, 3}}),
                                      series_invert(eta({{2, 1}, {46, 1}})));
            QSeries a = quot;
            a = series_add(a, series_scale(eta({{1, 2}, {23, 2}}), Rat(3)));
            a = series_add(a, series_scale(eta({{1, 1}, {2, 1}, {23, 1}, {46, 1}}), Rat(4)));
            a = series_add(a, series_scale(eta({{2, 2}, {46, 2}}), Rat(4)));
            QSeries b = eta({{1, 2}, {23, 2}});
            return series_add(a, series_scale(b, Rat(3)));
        }
        default:
            throw std::invalid_argument("no appendix form");
    }
}

}  // namespace qmt

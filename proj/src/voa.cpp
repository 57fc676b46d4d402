#include "qmt/voa.hpp"

#include "qmt/cyclic_trace.hpp"

#include <numeric>
#include <stdexcept>

namespace qmt {

VOAConfig voa_config(std::int64_t N) {
    VOAConfig cfg;
    cfg.N = N;
    MoonshineConstants mc = constants(N);
    cfg.heisenberg_dim = 24 * mc.ell;
    if (N == 2) {
        cfg.identity_frame = FrameShape{{{1, 24}}};
        cfg.gamma = FrameShape{{{2, 16}, {1, -8}}};
        cfg.clifford_factors = 32;
        cfg.sigma = CycleShape{{{2, 16}}};
        cfg.u_dim = 8;
    } else if (N == 3) {
        cfg.identity_frame = FrameShape{{{1, 24}}};
        cfg.gamma = FrameShape{{{3, 9}, {1, -3}}};
        cfg.clifford_factors = 27;
        cfg.sigma = CycleShape{{{3, 9}}};
        cfg.u_dim = 3;
    } else {
        cfg.identity_frame = FrameShape{{{1, N * N - 1}}};
        cfg.gamma = FrameShape{{{N, N}, {1, -1}}};
        cfg.clifford_factors = N * N;
        cfg.sigma = CycleShape{{{N, N}}};
        cfg.u_dim = 1;
    }
    cfg.clifford_identity = CycleShape{{{1, cfg.clifford_factors}}};
    if (cfg.identity_frame.degree() != cfg.heisenberg_dim || cfg.gamma.degree() != cfg.heisenberg_dim)
        throw std::logic_error("voa_config: frame degree mismatch");
    return cfg;
}

EtaQuotientSpec heisenberg_eta_spec(const FrameShape &shape) {
    EtaQuotientSpec s;
    for (auto [k, e] : shape.entries) s.factors.emplace_back(k, -e);
    return s.normalized();
}

EtaQuotientSpec clifford_eta_spec(const CycleShape &shape) {
    EtaQuotientSpec s;
    for (auto [k, c] : shape.cycles) s.factors.emplace_back(k, c);
    return s.normalized();
}

EtaQuotientSpec u_eta_spec(std::int64_t dim) {
    return EtaQuotientSpec{{{1, -dim}}}.normalized();
}

QSeries heisenberg_trace(const FrameShape &shape, std::int64_t bound) {
    return eta_expand(heisenberg_eta_spec(shape), bound);
}

QSeries heisenberg_weighted_trace(const FrameShape &shape, std::int64_t bound) {
    return series_D(heisenberg_trace(shape, bound));
}

QSeries clifford_trace(std::int64_t factors, const CycleShape &shape, std::int64_t bound) {
    if (shape.total() != factors)
        throw std::invalid_argument("clifford_trace: cycle shape does not cover the factors");
    return eta_expand(clifford_eta_spec(shape), bound);
}

QSeries U_trace(std::int64_t dim, std::int64_t bound) {
    return eta_expand(u_eta_spec(dim), bound);
}

QSeries W_trace(std::int64_t N, bool is_identity, std::int64_t bound) {
    VOAConfig cfg = voa_config(N);
    const FrameShape &frame = is_identity ? cfg.identity_frame : cfg.gamma;
    const CycleShape &cyc = is_identity ? cfg.clifford_identity : cfg.sigma;
    QSeries w = heisenberg_weighted_trace(frame, bound);
    w = series_mul(w, clifford_trace(cfg.clifford_factors, cyc, bound));
    w = series_mul(w, U_trace(cfg.u_dim, bound));
    return w;
}

// ---------------------------------------------------------------------------
// brute oracles: exact arithmetic in Z[x]/Phi_L(x), L prime (or 1)

namespace {

// Element of Z[x]/Phi_L(x) for prime L, on the basis 1, x, ..., x^{L-2}.
// L = 1 degenerates to plain integers (vector length 1).
struct Cyc {
    std::vector<Int> c;

    static Cyc zero(std::int64_t L) { return Cyc{std::vector<Int>(width(L), 0)}; }
    static std::size_t width(std::int64_t L) { return L <= 1 ? 1 : static_cast<std::size_t>(L - 1); }

    bool is_zero() const {
        for (const Int &v : c)
            if (v != 0) return false;
        return true;
    }
};

// x^j as an element; j arbitrary (reduced mod L, then mod Phi_L)
Cyc cyc_power(std::int64_t L, std::int64_t j) {
    Cyc z = Cyc::zero(L);
    if (L <= 1) {
        z.c[0] = 1;  // the only root of unity is 1
        return z;
    }
    j = ((j % L) + L) % L;
    if (j < L - 1) {
        z.c[static_cast<std::size_t>(j)] = 1;
    } else {
        for (auto &v : z.c) v = -1;  // x^{L-1} = -(1 + x + ... + x^{L-2})
    }
    return z;
}

Cyc cyc_mul(const Cyc &a, const Cyc &b, std::int64_t L) {
    std::size_t w = Cyc::width(L);
    std::vector<Int> conv(2 * w - 1, 0);
    for (std::size_t i = 0; i < w; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < w; ++j) {
            if (b.c[j] == 0) continue;
            conv[i + j] += a.c[i] * b.c[j];
        }
    }
    if (L <= 1) return Cyc{{conv[0]}};
    // fold exponents e >= L via x^L = 1, then e = L-1 via Phi_L
    std::vector<Int> folded(static_cast<std::size_t>(L), 0);
    for (std::size_t e = 0; e < conv.size(); ++e) folded[e % static_cast<std::size_t>(L)] += conv[e];
    Cyc out = Cyc::zero(L);
    const Int &top = folded[static_cast<std::size_t>(L - 1)];
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(L); ++i) out.c[i] = folded[i] - top;
    return out;
}

void cyc_addmul(Cyc &acc, const Cyc &a, const Cyc &b, std::int64_t L) {
    Cyc p = cyc_mul(a, b, L);
    for (std::size_t i = 0; i < acc.c.size(); ++i) acc.c[i] += p.c[i];
}

void cyc_submul(Cyc &acc, const Cyc &a, const Cyc &b, std::int64_t L) {
    Cyc p = cyc_mul(a, b, L);
    for (std::size_t i = 0; i < acc.c.size(); ++i) acc.c[i] -= p.c[i];
}

using CycSeries = std::vector<Cyc>;  // coefficient of q^i at index i

// s *= 1/(1 - a q^n): forward recurrence g_i = f_i + a g_{i-n}
void mul_geometric(CycSeries &s, const Cyc &a, std::int64_t n, std::int64_t L) {
    for (std::size_t i = static_cast<std::size_t>(n); i < s.size(); ++i)
        cyc_addmul(s[i], a, s[i - static_cast<std::size_t>(n)], L);
}

// s *= (1 - a q^n): backward g_i = f_i - a f_{i-n}
void mul_binomial(CycSeries &s, const Cyc &a, std::int64_t n, std::int64_t L) {
    for (std::size_t i = s.size(); i-- > static_cast<std::size_t>(n);)
        cyc_submul(s[i], a, s[i - static_cast<std::size_t>(n)], L);
}

std::int64_t shape_lcm(const std::vector<std::pair<std::int64_t, std::int64_t>> &entries) {
    std::int64_t L = 1;
    for (auto [k, e] : entries)
        if (e != 0) L = std::lcm(L, k);
    return L;
}

void require_prime_or_one(std::int64_t L) {
    if (L <= 1) return;
    for (std::int64_t d = 2; d * d <= L; ++d)
        if (L % d == 0) throw std::invalid_argument("brute oracle: cycle lengths must have prime lcm");
}

// Collapse to a rational sequence; throws if any coefficient is irrational.
QSeries collapse(const CycSeries &s, std::int64_t L, std::int64_t offset_lattice) {
    std::vector<Rat> out;
    out.reserve(s.size());
    for (const Cyc &z : s) {
        for (std::size_t i = 1; i < z.c.size(); ++i)
            if (z.c[i] != 0) throw std::logic_error("brute oracle: coefficient did not collapse to a rational");
        out.push_back(Rat(z.c[0]) );
    }
    std::vector<Rat> lattice(static_cast<std::size_t>(24 * s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) lattice[24 * i] = out[i];
    return QSeries::from_coeffs(offset_lattice, std::move(lattice),
                                offset_lattice + 24 * static_cast<std::int64_t>(s.size()));
}

constexpr std::int64_t kMaxBruteDegree = 25;

}  // namespace

QSeries brute_sym_trace(const FrameShape &shape, std::int64_t max_degree) {
    if (max_degree > kMaxBruteDegree || max_degree < 0)
        throw std::invalid_argument("brute_sym_trace: degree guard exceeded");
    std::int64_t L = shape_lcm(shape.entries);
    require_prime_or_one(L);
    CycSeries s(static_cast<std::size_t>(max_degree) + 1, Cyc::zero(L));
    s[0].c[0] = 1;
    for (auto [k, e] : shape.entries) {
        for (std::int64_t j = 0; j < k; ++j) {
            Cyc eigen = cyc_power(L, j * (L / k));
            for (std::int64_t n = 1; n <= max_degree; ++n) {
                for (std::int64_t rep = 0; rep < (e > 0 ? e : -e); ++rep) {
                    if (e > 0)
                        mul_geometric(s, eigen, n, L);
                    else
                        mul_binomial(s, eigen, n, L);
                }
            }
        }
    }
    return collapse(s, L, 0);
}

QSeries brute_ext_trace(const CycleShape &shape, std::int64_t max_degree) {
    if (max_degree > kMaxBruteDegree || max_degree < 0)
        throw std::invalid_argument("brute_ext_trace: degree guard exceeded");
    std::int64_t L = shape_lcm(shape.cycles);
    require_prime_or_one(L);
    CycSeries s(static_cast<std::size_t>(max_degree) + 1, Cyc::zero(L));
    s[0].c[0] = 1;
    for (auto [k, count] : shape.cycles) {
        for (std::int64_t rep = 0; rep < count; ++rep)
            for (std::int64_t j = 0; j < k; ++j) {
                Cyc eigen = cyc_power(L, j * (L / k));
                for (std::int64_t n = 1; n <= max_degree; ++n) mul_binomial(s, eigen, n, L);
            }
    }
    // each length-k cycle carries a q^{k/24} ground-state prefactor
    return collapse(s, L, shape.total());
}

}  // namespace qmt

#include "qmt/congruence.hpp"

#include "qmt/cyclic_trace.hpp"
#include "qmt/modforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmt {

std::int64_t sturm_window(std::int64_t N) { return 2 * ((N + 1 + 5) / 6); }

namespace {

void require_integer_at(const Rat &c, std::int64_t e) {
    if (!is_integer(c) || (c != 0 && e % 24 != 0)) {
        std::ostringstream os;
        os << "series_congruent: non-integral coefficient at lattice exponent " << e;
        throw std::domain_error(os.str());
    }
}

}  // namespace

CongruenceWitness series_congruent_below(const QSeries &a, const QSeries &b, const Int &m,
                                         bool skip_constant, std::int64_t window_lattice) {
    std::int64_t hi = std::min({a.lattice_bound(), b.lattice_bound(), window_lattice});
    std::int64_t lo = std::min(a.offset(), b.offset());
    for (std::int64_t e = lo; e < hi; ++e) {
        if (skip_constant && e == 0) continue;
        const Rat &ca = a.at(e);
        const Rat &cb = b.at(e);
        if (ca == cb) continue;
        require_integer_at(ca, e);
        require_integer_at(cb, e);
        Int diff = ca.get_num() - cb.get_num();
        if (diff % m != 0) return {false, e};
    }
    return {true, 0};
}

CongruenceWitness series_congruent(const QSeries &a, const QSeries &b, const Int &m,
                                   bool skip_constant) {
    return series_congruent_below(a, b, m, skip_constant,
                                  std::min(a.lattice_bound(), b.lattice_bound()));
}

namespace {

std::vector<std::pair<Int, int>> factor_modulus(Int n) {
    std::vector<std::pair<Int, int>> f;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

long gf_inv(long a, long p) {
    a = ((a % p) + p) % p;
    long inv = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) inv = (inv * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return inv;
}

// Reduced row-echelon data of [A | b] over GF(p).
struct GfSystem {
    std::vector<std::vector<long>> red;        // fully reduced rows, width d+1
    std::vector<std::pair<int, int>> pivots;   // (column, row)
    std::vector<int> free_cols;
    bool consistent = true;
    int d = 0;
};

GfSystem gf_reduce(std::vector<std::vector<long>> mat, long p) {
    GfSystem sys;
    int rows = static_cast<int>(mat.size());
    sys.d = rows == 0 ? 0 : static_cast<int>(mat[0].size()) - 1;
    int r = 0;
    for (int c = 0; c < sys.d; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (mat[i][c] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            sys.free_cols.push_back(c);
            continue;
        }
        std::swap(mat[r], mat[piv]);
        long inv = gf_inv(mat[r][c], p);
        for (auto &v : mat[r]) v = (((v % p) * inv) % p + p) % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = ((mat[i][c] % p) + p) % p;
            if (!f) continue;
            for (int j = 0; j <= sys.d; ++j) mat[i][j] = ((mat[i][j] - f * mat[r][j]) % p + p) % p;
        }
        sys.pivots.emplace_back(c, r);
        ++r;
        if (r == rows) {
            for (int cc = c + 1; cc < sys.d; ++cc) sys.free_cols.push_back(cc);
            break;
        }
    }
    for (int i = r; i < rows; ++i)
        if (mat[i][sys.d] % p != 0) sys.consistent = false;
    sys.red = std::move(mat);
    return sys;
}

// Solution of the reduced system for a given assignment to the free columns.
std::vector<long> gf_solution(const GfSystem &sys, const std::vector<long> &free_vals, long p) {
    std::vector<long> x(static_cast<std::size_t>(sys.d), 0);
    for (std::size_t i = 0; i < sys.free_cols.size(); ++i) x[sys.free_cols[i]] = free_vals[i];
    for (auto [c, row] : sys.pivots) {
        long v = sys.red[row][sys.d];
        for (std::size_t i = 0; i < sys.free_cols.size(); ++i)
            v -= sys.red[row][sys.free_cols[i]] * free_vals[i];
        x[c] = ((v % p) + p) % p;
    }
    return x;
}

// x with A x = b (mod p^e) by p-adic digits, branching over the GF(p)
// solution space when a digit choice fails to lift.
bool solve_prime_power(const std::vector<std::vector<long>> &A, const std::vector<long> &b,
                       long p, int e, std::vector<long> &out) {
    int rows = static_cast<int>(A.size());
    int d = rows == 0 ? 0 : static_cast<int>(A[0].size());
    long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;

    struct Frame {
        std::vector<long> xs;
        int k;
    };
    std::vector<Frame> stack{{std::vector<long>(static_cast<std::size_t>(d), 0), 0}};
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.k == e) {
            out = fr.xs;
            return true;
        }
        long pk = 1;
        for (int i = 0; i < fr.k; ++i) pk *= p;
        // residual (b - A xs) must vanish mod p^k; next digit solves mod p
        std::vector<std::vector<long>> mat;
        bool ok = true;
        for (int i = 0; i < rows && ok; ++i) {
            long s = b[i] % pe;
            for (int j = 0; j < d; ++j) s = (s - A[i][j] % pe * fr.xs[j]) % pe;
            s = ((s % pe) + pe) % pe;
            if (s % pk != 0) {
                ok = false;
                break;
            }
            std::vector<long> row(static_cast<std::size_t>(d) + 1);
            for (int j = 0; j < d; ++j) row[j] = ((A[i][j] % p) + p) % p;
            row[d] = (s / pk) % p;
            mat.push_back(std::move(row));
        }
        if (!ok) continue;
        GfSystem sys = gf_reduce(std::move(mat), p);
        if (!sys.consistent) continue;
        bool last_layer = (fr.k + 1 == e);
        long count = 1;
        if (!last_layer) {
            double bits = static_cast<double>(sys.free_cols.size()) *
                          std::log2(static_cast<double>(p));
            if (bits > 21) throw std::runtime_error("solve_linear_mod: branch space too large");
            for (std::size_t i = 0; i < sys.free_cols.size(); ++i) count *= p;
        }
        for (long assign = 0; assign < count; ++assign) {
            std::vector<long> fv(sys.free_cols.size(), 0);
            long a = assign;
            for (std::size_t i = 0; i < fv.size(); ++i) {
                fv[i] = a % p;
                a /= p;
            }
            std::vector<long> y = gf_solution(sys, fv, p);
            std::vector<long> nxt = fr.xs;
            for (int j = 0; j < d; ++j) nxt[j] = (nxt[j] + pk * y[j]) % pe;
            stack.push_back({std::move(nxt), fr.k + 1});
        }
    }
    return false;
}

}  // namespace

bool solve_linear_mod(const std::vector<std::vector<Int>> &A, const std::vector<Int> &b,
                      const Int &n, std::vector<Int> &out) {
    std::size_t d = A.empty() ? 0 : A[0].size();
    out.assign(d, 0);
    if (n == 1) return true;
    auto factors = factor_modulus(n);
    // reduce to long arithmetic; moduli here are tiny
    std::vector<std::vector<long>> Al(A.size(), std::vector<long>(d));
    std::vector<long> bl(b.size());
    std::vector<std::vector<long>> parts;
    std::vector<long> part_mod;
    for (auto &[pz, e] : factors) {
        long p = pz.get_si();
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Int r = A[i][j] % pe;
                if (r < 0) r += pe;
                Al[i][j] = r.get_si();
            }
        for (std::size_t i = 0; i < b.size(); ++i) {
            Int r = b[i] % pe;
            if (r < 0) r += pe;
            bl[i] = r.get_si();
        }
        std::vector<long> x;
        if (!solve_prime_power(Al, bl, p, e, x)) return false;
        parts.push_back(x);
        part_mod.push_back(pe);
    }
    // CRT per coordinate
    for (std::size_t j = 0; j < d; ++j) {
        Int res = 0, mod = 1;
        for (std::size_t t = 0; t < parts.size(); ++t) {
            Int pe = part_mod[t];
            Int target = parts[t][j];
            Int minv;
            mpz_invert(minv.get_mpz_t(), Int(mod % pe).get_mpz_t(), pe.get_mpz_t());
            Int step = ((target - res) * minv) % pe;
            if (step < 0) step += pe;
            res += mod * step;
            mod *= pe;
        }
        out[j] = res % n;
        if (out[j] < 0) out[j] += n;
    }
    // final verification
    for (std::size_t i = 0; i < A.size(); ++i) {
        Int s = -b[i];
        for (std::size_t j = 0; j < d; ++j) s += A[i][j] * out[j];
        if (s % n != 0) return false;
    }
    return true;
}

MazurResult mazur_search(std::int64_t N, const CuspBasis &basis, std::int64_t window) {
    if (basis.level != N) throw std::invalid_argument("mazur_search: basis level mismatch");
    if (window < sturm_window(N)) throw std::invalid_argument("mazur_search: window below Sturm floor");
    MazurResult res;
    std::int64_t zero_bound = 24 * (basis.bound + 1);
    if (N == 2 || N == 3) {
        res.g = QSeries::zero(zero_bound);
        res.G = QSeries::zero(zero_bound);
        return res;
    }
    if (basis.bound < window - 1)
        throw std::invalid_argument("mazur_search: basis bound below verification window");
    Int n = constants(N).n;
    std::int64_t d = basis.dim();
    QSeries sig = sigmaN_series(N, window);
    std::vector<std::vector<Int>> A;
    std::vector<Int> b;
    for (std::int64_t m = 1; m < window; ++m) {
        std::vector<Int> row;
        for (std::int64_t i = 0; i < d; ++i) {
            const Rat &c = basis.forms[static_cast<std::size_t>(i)].coeff_q(m);
            if (!is_integer(c)) throw std::domain_error("mazur_search: basis not integral");
            row.push_back(c.get_num());
        }
        A.push_back(std::move(row));
        b.push_back(sig.coeff_q(m).get_num());
    }
    std::vector<Int> x;
    if (!solve_linear_mod(A, b, n, x))
        throw std::runtime_error("congruence system insoluble");
    res.solution = x;
    QSeries g = QSeries::zero(zero_bound);
    for (std::int64_t i = 0; i < d; ++i)
        g = series_add(g, series_scale(basis.forms[static_cast<std::size_t>(i)], Rat(x[static_cast<std::size_t>(i)].get_si())));
    res.g = g;
    res.G = series_scale(g, Rat(-1));
    return res;
}

CongruenceWitness prop33_check(std::int64_t N, const QSeries &G, std::int64_t window) {
    MoonshineConstants mc = constants(N);
    QSeries lhs = series_scale(E2N(N, window), Rat(mc.ell));
    QSeries rhs = series_scale(G, Rat(-N));
    return series_congruent_below(lhs, rhs, Int(mc.n), false, 24 * window);
}

CongruenceWitness lemma34_check(std::int64_t N, const QSeries &G, std::int64_t window) {
    QSeries qn = QN_N(N, G, window);
    QSeries q1 = Q1_N(N, window);
    return series_congruent_below(qn, q1, Int(N), false, 24 * window);
}

MultiplicityTable znz_multiplicities(std::int64_t N, const QSeries &f_identity,
                                     const QSeries &f_other, std::int64_t bound) {
    MultiplicityTable t;
    t.N = N;
    std::int64_t max_n =
        std::min({bound, f_identity.lattice_bound() / 24, f_other.lattice_bound() / 24});
    for (std::int64_t n = 0; n < max_n; ++n) {
        const Rat &ca = f_identity.coeff_q(n);
        const Rat &cb = f_other.coeff_q(n);
        if (!is_integer(ca) || !is_integer(cb))
            throw std::domain_error("znz_multiplicities: trace series not integral");
        Int a = ca.get_num(), b = cb.get_num();
        Int num0 = a + (N - 1) * b;
        Int num1 = a - b;
        if (num0 % N != 0 || num1 % N != 0) {
            std::ostringstream os;
            os << "module existence violated at n=" << n;
            throw std::domain_error(os.str());
        }
        t.m0.push_back(num0 / N);
        t.m_rest.push_back(num1 / N);
    }
    return t;
}

}  // namespace qmt

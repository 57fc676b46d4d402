#pragma once

#include "qmt/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmt {

// Long Weierstrass model with integer coefficients and a level label.
struct CurveModel {
    std::string label;
    std::int64_t level = 0;
    std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

    Int discriminant() const;
    bool good_reduction(std::int64_t p) const;
};

// #E(F_p) including the point at infinity, by direct enumeration with a
// quadratic-residue table.  Throws std::domain_error("bad reduction") when
// p divides the discriminant.
std::int64_t count_points(const CurveModel &curve, std::int64_t p);

// p-th coefficient of form/normalization; throws when not divisible.
Int ap_from_series(const QSeries &form, std::int64_t p, const Int &normalization);

struct DivisibilityLine {
    std::int64_t p = 0;
    Int c;                 // c_N(p)
    Int count;             // p + 1 - c_N(p)
    bool excluded = false; // prime of bad reduction: count reported, not tested
    bool pass = true;
    bool curve_checked = false;  // count_points cross-check ran at this prime
};

struct DivisibilityReport {
    std::int64_t level = 0;
    std::int64_t divisor = 0;
    std::vector<DivisibilityLine> lines;
    bool all_pass = true;
};

// Checks divisor | p + 1 - c_N(p) for every good prime p < prime_bound at the
// supported levels (11, 5), (14, 3), (15, 4); reports the bad-prime values
// directly.  With a curve model, additionally checks
// p + 1 - #E(F_p) = c_N(p) for good p < 200.
DivisibilityReport divisibility_report(std::int64_t N, std::int64_t prime_bound,
                                       const std::optional<CurveModel> &curve);

struct ResidueLine {
    std::int64_t p = 0;
    bool lhs = false;  // p = 4 (mod 5)
    bool rhs = false;  // 5 | c_11(p)
    bool pass = true;
};

struct ResidueWitness {
    std::vector<ResidueLine> lines;
    bool all_pass = true;
};

// (p = 4 mod 5) iff (5 | c_11(p)) for every prime p != 11 below the bound.
ResidueWitness residue_equivalence(std::int64_t prime_bound);

std::vector<std::int64_t> primes_below(std::int64_t bound);

}  // namespace qmt

// Acceptance suite: runs every verification at full scale and prints one
// pass/fail line per criterion.  All checks are exact; the stated wall-clock
// budgets are asserted as well.
#include "doctest.h"

#include "qmt/jobs.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace qmt;

namespace {

std::string basis_dir() { return std::string(QMT_DATA_DIR) + "/cusp-bases"; }
std::string curves_path() { return std::string(QMT_DATA_DIR) + "/curves.txt"; }

struct Outcome {
    bool pass;
    double seconds;
    std::size_t checks;
    std::string first_failure;
};

Outcome run(const VerificationJob &job) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ReportLine> lines = run_job(job);
    auto t1 = std::chrono::steady_clock::now();
    Outcome o{true, std::chrono::duration<double>(t1 - t0).count(), lines.size(), ""};
    for (const auto &l : lines)
        if (!l.pass) {
            o.pass = false;
            if (o.first_failure.empty()) o.first_failure = format_line(l, "text");
        }
    return o;
}

void report(int criterion, const std::string &label, const Outcome &o, double budget_s) {
    bool in_budget = o.seconds < budget_s;
    std::printf("[criterion %2d] %s  %s (%zu checks, %.2fs, budget %.0fs)\n", criterion,
                (o.pass && in_budget) ? "PASS" : "FAIL", label.c_str(), o.checks, o.seconds,
                budget_s);
    if (!o.first_failure.empty()) std::printf("    first failure: %s\n", o.first_failure.c_str());
    CHECK(o.pass);
    CHECK(in_budget);
}

VerificationJob make_job(const std::string &name) {
    VerificationJob j;
    j.name = name;
    j.basis_dir = basis_dir();
    j.curves_path = curves_path();
    return j;
}

}  // namespace

TEST_CASE("criterion 1: weight-2 completion identity through q^100") {
    VerificationJob j = make_job("dmz");
    j.bound = 100;
    report(1, "dmz identity, leading -2 q^{-1/8}, coefficients 90 and 462", run(j), 1.0);
}

TEST_CASE("criterion 2: trace-function integrality through q^500") {
    VerificationJob j = make_job("m23-integrality");
    j.bound = 500;
    report(2, "integrality at all twelve orders plus statements (a)-(d)", run(j), 5.0);
}

TEST_CASE("criterion 3: Eisenstein-cusp congruence at every prime level <= 97") {
    VerificationJob j32 = make_job("prop32");
    Outcome o32 = run(j32);
    VerificationJob j33 = make_job("prop33");
    Outcome o33 = run(j33);
    Outcome merged{o32.pass && o33.pass, o32.seconds + o33.seconds, o32.checks + o33.checks,
                   o32.first_failure.empty() ? o33.first_failure : o32.first_failure};
    report(3, "search + congruence on window 2(N+1), negative control included", merged, 10.0);
}

TEST_CASE("criterion 4: Q_N = Q_1 (mod N) through q^200 at every prime level <= 97") {
    VerificationJob j = make_job("lemma34");
    j.bound = 200;
    report(4, "trace congruence mod N", run(j), 5.0);
}

TEST_CASE("criterion 5: integral multiplicity tables through n = 200") {
    VerificationJob j = make_job("thm35");
    j.bound = 200;
    report(5, "both trace flavors, reconstruction, spot values at N=2", run(j), 5.0);
}

TEST_CASE("criterion 6: point-count divisibility below 2000 with curve cross-checks") {
    VerificationJob j = make_job("cor41");
    j.prime_bound = 2000;
    report(6, "divisors (11,5), (14,3), (15,4); direct bad-prime values", run(j), 30.0);
}

TEST_CASE("criterion 7: residue equivalence below 2000") {
    VerificationJob j = make_job("residue");
    j.prime_bound = 2000;
    report(7, "(p = 4 mod 5) iff (5 | c_11(p)) for p != 11", run(j), 30.0);
}

TEST_CASE("criterion 8: closed-form traces and brute enumeration oracles") {
    VerificationJob j = make_job("voa-lemmas");
    report(8, "eta-quotient symbols plus oracle agreement through q^25 at N=2,3,5", run(j), 60.0);
}

TEST_CASE("criterion 9: assembled twisted traces equal the Eisenstein forms") {
    VerificationJob j = make_job("voa-theorem");
    j.bound = 200;
    report(9, "both conjugacy cases at N=2,3,5,7,11,13 through q^200", run(j), 10.0);
}

TEST_CASE("criterion 10: full suite under budget and byte-deterministic") {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> reports;
    for (int round = 0; round < 2; ++round) {
        std::string all;
        for (const VerificationJob &job : default_suite(basis_dir(), curves_path()))
            for (const ReportLine &l : run_job(job)) all += format_line(l, "tsv") + "\n";
        reports.push_back(std::move(all));
    }
    auto t1 = std::chrono::steady_clock::now();
    double total = std::chrono::duration<double>(t1 - t0).count();
    bool deterministic = reports[0] == reports[1];
    bool all_pass = reports[0].find("\tfail\t") == std::string::npos;
    bool in_budget = total / 2.0 < 180.0;
    std::printf("[criterion 10] %s  full suite twice (%.2fs per run)\n",
                (deterministic && all_pass && in_budget) ? "PASS" : "FAIL", total / 2.0);
    CHECK(deterministic);
    CHECK(all_pass);
    CHECK(in_budget);
}

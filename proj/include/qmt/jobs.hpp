#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmt {

// A named verification with its parameters; every job is reproducible from
// this structure alone.
struct VerificationJob {
    std::string name;              // dmz, m23-integrality, prop32, prop33, lemma34,
                                   // thm35, cor41, residue, voa-lemmas, voa-theorem
    std::int64_t bound = 0;        // series truncation (0 = job default)
    std::int64_t prime_bound = 0;  // arithmetic jobs (0 = job default)
    std::int64_t max_level = 97;   // congruence jobs run over primes <= max_level
    std::string basis_dir;         // directory holding level-<N>.txt
    std::string curves_path;       // optional curve models
};

struct ReportLine {
    std::string job;
    std::string target;
    bool pass = true;
    std::string witness;  // first failing exponent/prime (or error) when !pass
};

std::string format_line(const ReportLine &line, const std::string &format);  // text | tsv

// Runs one job and returns its report; deterministic and byte-stable for
// fixed inputs.  Module errors surface as failed lines, never as silence.
std::vector<ReportLine> run_job(const VerificationJob &job);

// All ten jobs with their default (acceptance) parameters, in fixed order.
std::vector<VerificationJob> default_suite(const std::string &basis_dir,
                                           const std::string &curves_path);

// 0 when every line passes, 1 otherwise.
int exit_code(const std::vector<ReportLine> &lines);

}  // namespace qmt

#include "CLI11.hpp"

#include "qmt/basis_io.hpp"
#include "qmt/cyclic_trace.hpp"
#include "qmt/jobs.hpp"
#include "qmt/modforms.hpp"
#include "qmt/voa.hpp"

#include <iostream>
#include <sstream>

namespace {

using namespace qmt;

// series names accepted by `expand`
QSeries named_series(const std::string &name, std::int64_t bound) {
    auto split = name.find(':');
    std::string head = name.substr(0, split);
    std::string arg = split == std::string::npos ? "" : name.substr(split + 1);
    auto level = [&]() { return std::stoll(arg); };
    if (head == "E2") return eisenstein_E2(bound);
    if (head == "E2N") return E2N(level(), bound);
    if (head == "F2") return F2(bound);
    if (head == "sigmaN") return sigmaN_series(level(), bound);
    if (head == "He") return He_series(bound);
    if (head == "GN") return appendix_GN(level(), bound);
    if (head == "QM23") return Q_M23(level(), bound);
    if (head == "Q1N") return Q1_N(level(), bound);
    if (head == "Fe") return F_g(level(), true, bound);
    if (head == "Ftw") return F_g(level(), false, bound);
    if (head == "We") return W_trace(level(), true, bound);
    if (head == "Wtw") return W_trace(level(), false, bound);
    if (head == "eta") {
        // comma list of k^e factors, e.g. eta:1^2,11^2
        EtaQuotientSpec spec;
        std::istringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto caret = tok.find('^');
            if (caret == std::string::npos) throw std::invalid_argument("eta factor needs k^e");
            spec.factors.emplace_back(std::stoll(tok.substr(0, caret)),
                                      std::stoll(tok.substr(caret + 1)));
        }
        return eta_expand(spec, bound);
    }
    throw std::invalid_argument("unknown series: " + name);
}

std::string exponent_str(std::int64_t e) {
    if (e % 24 == 0) return std::to_string(e / 24);
    return make_rat(e, 24).get_str();
}

int run_lines(const std::vector<ReportLine> &lines, const std::string &format) {
    std::int64_t passed = 0;
    for (const auto &l : lines) {
        std::cout << format_line(l, format) << "\n";
        if (l.pass) ++passed;
    }
    std::cout << passed << "/" << lines.size() << " checks passed\n";
    return exit_code(lines);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact q-series and quasimodular trace verification toolkit"};
    app.require_subcommand(1);

    std::string basis_dir = "data/cusp-bases";
    std::string curves_path = "data/curves.txt";
    std::string format = "text";
    std::int64_t bound = 0;
    std::int64_t prime_bound = 0;
    app.add_option("--basis-dir", basis_dir, "directory with level-<N>.txt cusp bases");
    app.add_option("--curves", curves_path, "curve model file");
    app.add_option("--format", format, "output format: text|tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
    app.add_option("--bound", bound, "series truncation override");
    app.add_option("--primes", prime_bound, "prime bound override for arithmetic jobs");

    auto *expand = app.add_subcommand("expand", "print a named series");
    expand->fallthrough();
    std::string series_name;
    expand->add_option("series", series_name,
                       "E2, E2N:<N>, F2, sigmaN:<N>, He, GN:<N>, QM23:<N>, Q1N:<N>, "
                       "Fe:<N>, Ftw:<N>, We:<N>, Wtw:<N>, eta:<k^e,...>")
        ->required();

    auto *verify = app.add_subcommand("verify", "run one verification job");
    verify->fallthrough();
    std::string job_name;
    verify->add_option("job", job_name,
                       "dmz, m23-integrality, prop32, prop33, lemma34, thm35, cor41, "
                       "residue, voa-lemmas, voa-theorem")
        ->required();

    auto *suite = app.add_subcommand("suite", "run every verification job");
    suite->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) {
            std::int64_t b = bound > 0 ? bound : 20;
            QSeries s = named_series(series_name, b);
            for (const auto &[e, c] : s.terms())
                std::cout << "q^" << exponent_str(e) << " " << c.get_str() << "\n";
            return 0;
        }
        if (verify->parsed()) {
            VerificationJob job;
            job.name = job_name;
            job.bound = bound;
            job.prime_bound = prime_bound;
            job.basis_dir = basis_dir;
            job.curves_path = curves_path;
            return run_lines(run_job(job), format);
        }
        if (suite->parsed()) {
            std::vector<ReportLine> all;
            for (VerificationJob job : qmt::default_suite(basis_dir, curves_path)) {
                if (bound > 0) job.bound = bound;
                if (prime_bound > 0) job.prime_bound = prime_bound;
                auto lines = run_job(job);
                all.insert(all.end(), lines.begin(), lines.end());
            }
            return run_lines(all, format);
        }
    } catch (const qmt::ParseError &e) {
        std::cerr << "input error";
        if (e.line_no > 0) std::cerr << " (line " << e.line_no << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

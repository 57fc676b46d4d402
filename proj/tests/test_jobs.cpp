#include "doctest.h"

#include "qmt/basis_io.hpp"
#include "qmt/jobs.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace qmt;

namespace {

std::string data_dir() { return std::string(QMT_DATA_DIR); }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string &content) {
        static int counter = 0;
        path = "qmt_test_tmp_" + std::to_string(counter++) + ".txt";
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parse_cusp_basis: well-formed file") {
    CuspBasis b = parse_cusp_basis(data_dir() + "/cusp-bases/level-11.txt");
    CHECK(b.level == 11);
    CHECK(b.dim() == 1);
    CHECK(b.bound == 240);
    CHECK(b.forms[0].coeff_q(1) == 1);
    CHECK(b.forms[0].coeff_q(2) == -2);
    CHECK(b.forms[0].coeff_q(3) == -1);
}

TEST_CASE("parse_cusp_basis: empty basis at level 2") {
    CuspBasis b = parse_cusp_basis(data_dir() + "/cusp-bases/level-2.txt");
    CHECK(b.dim() == 0);
    CHECK(b.level == 2);
}

TEST_CASE("parse_cusp_basis: malformed inputs carry line numbers") {
    TempFile rational("level 11 weight 2 dim 1 bound 6\nform 1\n1 1/2\n2 0\n3 0\n4 0\n5 0\n6 0\n");
    CHECK_THROWS_AS(parse_cusp_basis(rational.path), ParseError);
    try {
        parse_cusp_basis(rational.path);
    } catch (const ParseError &e) {
        CHECK(e.line_no == 3);
    }

    TempFile bad_header("level eleven weight 2 dim 1 bound 10\n");
    CHECK_THROWS_AS(parse_cusp_basis(bad_header.path), ParseError);

    TempFile low_bound("level 97 weight 2 dim 0 bound 4\n");
    CHECK_THROWS_AS(parse_cusp_basis(low_bound.path), ParseError);

    TempFile truncated("level 11 weight 2 dim 1 bound 6\nform 1\n1 1\n2 0\n");
    CHECK_THROWS_AS(parse_cusp_basis(truncated.path), ParseError);

    CHECK_THROWS_AS(parse_cusp_basis("does_not_exist.txt"), ParseError);
}

TEST_CASE("parse_curves") {
    std::vector<CurveModel> curves = parse_curves(data_dir() + "/curves.txt");
    CHECK(curves.size() == 3);
    CHECK(curves[0].level == 11);
    CHECK(curves[0].a6 == -20);

    TempFile singular("label bad level 11 a 0 0 0 0 0\n");
    CHECK_THROWS_AS(parse_curves(singular.path), ParseError);
    try {
        parse_curves(singular.path);
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("bad") != std::string::npos);
    }

    TempFile empty("");
    CHECK(parse_curves(empty.path).empty());
}

TEST_CASE("run_job: dmz all-pass and unknown job") {
    VerificationJob job;
    job.name = "dmz";
    auto lines = run_job(job);
    CHECK(lines.size() == 4);
    for (const auto &l : lines) CHECK(l.pass);
    CHECK(exit_code(lines) == 0);

    job.name = "nonsense";
    CHECK_THROWS_AS(run_job(job), std::invalid_argument);
}

TEST_CASE("run_job: module errors become failed lines") {
    VerificationJob job;
    job.name = "prop32";
    job.basis_dir = "no_such_dir";
    CHECK_THROWS_AS(run_job(job), ParseError);  // input errors propagate (exit 2)
}

TEST_CASE("format_line") {
    ReportLine l{"dmz", "identity", false, "first failure at lattice exponent 24"};
    CHECK(format_line(l, "text") == "dmz | identity | fail | first failure at lattice exponent 24");
    CHECK(format_line(l, "tsv") == "dmz\tidentity\tfail\tfirst failure at lattice exponent 24");
    ReportLine ok{"dmz", "identity", true, ""};
    CHECK(format_line(ok, "text") == "dmz | identity | pass");
}

TEST_CASE("suite determinism: two runs produce identical reports") {
    std::string basis = data_dir() + "/cusp-bases";
    std::string curves = data_dir() + "/curves.txt";
    // trimmed parameters keep this fast; byte-determinism is what matters here
    std::vector<std::string> runs;
    for (int run = 0; run < 2; ++run) {
        std::string all;
        for (VerificationJob job : default_suite(basis, curves)) {
            job.bound = (job.name == "m23-integrality") ? 60 : 50;
            job.prime_bound = 300;
            job.max_level = 23;
            for (const auto &l : run_job(job)) all += format_line(l, "tsv") + "\n";
        }
        runs.push_back(all);
    }
    CHECK(runs[0] == runs[1]);
    CHECK(runs[0].find("\tfail\t") == std::string::npos);
}

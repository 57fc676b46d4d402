#include "qmt/basis_io.hpp"

#include <fstream>
#include <sstream>

namespace qmt {

namespace {

bool parse_int(const std::string &tok, std::int64_t &out) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    out = std::stoll(tok);
    return true;
}

bool parse_bigint(const std::string &tok, Int &out) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    out = Int(tok);
    return true;
}

}  // namespace

CuspBasis parse_cusp_basis(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open basis file: " + path, 0);
    std::string line;
    long line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("empty basis file", line_no);
    std::istringstream hdr(line);
    std::string kw_level, kw_weight, kw_dim, kw_bound;
    std::int64_t level = 0, weight = 0, dim = 0, bound = 0;
    hdr >> kw_level >> level >> kw_weight >> weight >> kw_dim >> dim >> kw_bound >> bound;
    if (hdr.fail() || kw_level != "level" || kw_weight != "weight" || kw_dim != "dim" ||
        kw_bound != "bound")
        throw ParseError("malformed basis header", line_no);
    if (weight != 2) throw ParseError("only weight 2 bases are supported", line_no);
    if (level < 1 || dim < 0 || bound < 1) throw ParseError("malformed basis header values", line_no);
    if (bound < sturm_window(level))
        throw ParseError("basis bound below the verification window", line_no);

    CuspBasis basis;
    basis.level = level;
    basis.bound = bound;
    for (std::int64_t f = 1; f <= dim; ++f) {
        if (!next_line()) throw ParseError("unexpected end of file before form " + std::to_string(f), line_no);
        std::istringstream fh(line);
        std::string kw;
        std::int64_t idx = 0;
        fh >> kw >> idx;
        if (fh.fail() || kw != "form" || idx != f)
            throw ParseError("expected 'form " + std::to_string(f) + "'", line_no);
        std::vector<Rat> coeffs(static_cast<std::size_t>(24 * (bound + 1)));
        for (std::int64_t n = 1; n <= bound; ++n) {
            if (!next_line()) throw ParseError("missing coefficient line", line_no);
            std::istringstream cl(line);
            std::string ntok, ctok;
            cl >> ntok >> ctok;
            std::int64_t got_n;
            Int c;
            if (cl.fail() || !parse_int(ntok, got_n))
                throw ParseError("malformed coefficient line", line_no);
            if (got_n != n) throw ParseError("coefficient index out of order", line_no);
            if (!parse_bigint(ctok, c))
                throw ParseError("non-integer coefficient", line_no);
            coeffs[static_cast<std::size_t>(24 * n)] = Rat(c);
        }
        QSeries form = QSeries::from_coeffs(0, std::move(coeffs), 24 * (bound + 1));
        if (form.coeff_q(0) != 0) throw ParseError("cusp form with nonzero constant term", line_no);
        basis.forms.push_back(std::move(form));
    }
    if (next_line()) throw ParseError("trailing content after the last form", line_no);
    return basis;
}

std::vector<CurveModel> parse_curves(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve file: " + path, 0);
    std::vector<CurveModel> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string kw_label, label, kw_level, kw_a;
        CurveModel m;
        ls >> kw_label >> label >> kw_level >> m.level >> kw_a >> m.a1 >> m.a2 >> m.a3 >> m.a4 >>
            m.a6;
        if (ls.fail() || kw_label != "label" || kw_level != "level" || kw_a != "a")
            throw ParseError("malformed curve line", line_no);
        m.label = label;
        if (m.discriminant() == 0)
            throw ParseError("singular model: " + label, line_no);
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace qmt

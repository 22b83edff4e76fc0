#include "acd/codefile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "acd/errors.hpp"

namespace acd {

const char* kind_name(CodeKind k) {
    switch (k) {
        case CodeKind::Binary: return "binary";
        case CodeKind::Additive: return "additive";
        default: return "linear4";
    }
}

BinaryCode CodeFile::to_binary() const {
    if (kind != CodeKind::Binary) throw std::logic_error("to_binary on a non-binary code file");
    return BinaryCode::from_generator(gen.a_plane());
}

AdditiveCode CodeFile::to_additive() const {
    switch (kind) {
        case CodeKind::Additive: return AdditiveCode::from_generator(gen);
        case CodeKind::LinearF4: return AdditiveCode::from_linear(gen);
        default: throw std::logic_error("to_additive on a binary code file");
    }
}

namespace {

// Significant line: stripped of trailing whitespace/CR, not blank, not a comment.
bool next_significant(std::istream& in, std::string& line, size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

size_t parse_field(const std::string& tok, const char* name, size_t lineno) {
    std::string prefix = std::string(name) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError("expected `" + prefix + "<count>`, got `" + tok + "`", lineno);
    const std::string num = tok.substr(prefix.size());
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad count in `" + tok + "`", lineno);
    try {
        return std::stoull(num);
    } catch (const std::out_of_range&) {
        throw ParseError("count out of range in `" + tok + "`", lineno);
    }
}

}  // namespace

CodeFile parse_code(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    if (!next_significant(in, line, lineno)) throw ParseError("missing header line", 1);

    std::istringstream hs(line);
    std::string kind_tok, n_tok, k_tok, extra;
    hs >> kind_tok >> n_tok >> k_tok;
    if (hs >> extra) throw ParseError("trailing tokens after header", lineno);

    CodeFile cf;
    if (kind_tok == "binary")
        cf.kind = CodeKind::Binary;
    else if (kind_tok == "additive")
        cf.kind = CodeKind::Additive;
    else if (kind_tok == "linear4")
        cf.kind = CodeKind::LinearF4;
    else
        throw ParseError("unknown code kind `" + kind_tok + "` (want binary/additive/linear4)",
                         lineno);
    size_t header_line = lineno;
    cf.n = parse_field(n_tok, "n", lineno);
    cf.k = parse_field(k_tok, "k", lineno);

    cf.gen = F4Matrix(cf.k, cf.n);
    for (size_t r = 0; r < cf.k; ++r) {
        if (!next_significant(in, line, lineno))
            throw ParseError("expected " + std::to_string(cf.k) + " rows, found " +
                                 std::to_string(r),
                             lineno + 1);
        size_t first = line.find_first_not_of(" \t");
        std::string row = line.substr(first);
        if (row.size() != cf.n)
            throw ParseError("row has " + std::to_string(row.size()) + " symbols, expected " +
                                 std::to_string(cf.n),
                             lineno);
        for (size_t c = 0; c < cf.n; ++c) {
            auto x = Gf4::from_symbol(row[c]);
            if (!x || (cf.kind == CodeKind::Binary && x->code() > 1))
                throw ParseError(std::string("bad symbol `") + row[c] + "`", lineno,
                                 first + c + 1);
            cf.gen.set(r, c, *x);
        }
    }
    if (next_significant(in, line, lineno))
        throw ParseError("unexpected content after " + std::to_string(cf.k) + " rows", lineno);

    size_t rank = 0;
    switch (cf.kind) {
        case CodeKind::Binary: rank = cf.gen.a_plane().rank(); break;
        case CodeKind::Additive: rank = cf.gen.rank2(); break;
        case CodeKind::LinearF4: rank = cf.gen.f4_rank(); break;
    }
    if (rank != cf.k)
        throw ParseError("rows have rank " + std::to_string(rank) + " but header says k=" +
                             std::to_string(cf.k),
                         header_line);
    return cf;
}

CodeFile parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open `" + path + "`", 1);
    return parse_code(in);
}

void write_code(std::ostream& out, CodeKind kind, const F4Matrix& gen) {
    out << kind_name(kind) << " n=" << gen.cols() << " k=" << gen.rows() << "\n";
    for (size_t r = 0; r < gen.rows(); ++r) out << gen.row(r).to_string() << "\n";
}

void write_code(std::ostream& out, const BinaryCode& c) {
    write_code(out, CodeKind::Binary, F4Matrix::from_binary(c.generator()));
}

void write_code(std::ostream& out, const AdditiveCode& c) {
    write_code(out, CodeKind::Additive, c.generator());
}

void write_code_file(const std::string& path, CodeKind kind, const F4Matrix& gen) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write `" + path + "`");
    write_code(out, kind, gen);
}

}  // namespace acd

#ifndef ACD_CODEFILE_HPP
#define ACD_CODEFILE_HPP

#include <iosfwd>
#include <string>

#include "acd/additive_code.hpp"
#include "acd/binary_code.hpp"
#include "acd/f4linalg.hpp"

namespace acd {

enum class CodeKind { Binary, Additive, LinearF4 };

const char* kind_name(CodeKind k);

/**
 * One parsed code file. The text format is:
 *
 *     <kind> n=<length> k=<rows>
 *     <k rows of n symbols>
 *
 * where <kind> is `binary` (symbols 0/1), `additive` or `linear4` (symbols
 * 0/1/w/W, case-sensitive). Blank lines and lines starting with `#` are
 * ignored. For `binary` the rows must have GF(2) rank k, for `additive`
 * 2-rank k, for `linear4` GF(4) rank k.
 */
struct CodeFile {
    CodeKind kind = CodeKind::Additive;
    size_t n = 0;
    size_t k = 0;
    F4Matrix gen;  // for Binary, the b-plane is all zero

    BinaryCode to_binary() const;      // Binary kind only
    AdditiveCode to_additive() const;  // Additive (as given) or LinearF4 (via from_linear)
};

CodeFile parse_code(std::istream& in);
CodeFile parse_code_file(const std::string& path);

void write_code(std::ostream& out, CodeKind kind, const F4Matrix& gen);
void write_code(std::ostream& out, const BinaryCode& c);
void write_code(std::ostream& out, const AdditiveCode& c);
void write_code_file(const std::string& path, CodeKind kind, const F4Matrix& gen);

}  // namespace acd

#endif

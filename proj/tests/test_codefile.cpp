#include <doctest.h>

#include <sstream>

#include "acd/codefile.hpp"
#include "acd/errors.hpp"
#include "testutil.hpp"

using namespace acd;

namespace {

CodeFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

}  // namespace

TEST_CASE("parses all three kinds and round-trips through the writer") {
    CodeFile add = parse_text("additive n=3 k=2\n1w0\n0W1\n");
    CHECK(add.kind == CodeKind::Additive);
    CHECK(add.n == 3);
    CHECK(add.k == 2);
    CHECK(add.gen.get(1, 1) == gf4_w2);

    std::ostringstream out;
    write_code(out, add.kind, add.gen);
    CodeFile back = parse_text(out.str());
    CHECK(back.kind == add.kind);
    CHECK(back.gen == add.gen);

    CodeFile binf = parse_text("binary n=4 k=2\n1100\n0011\n");
    CHECK(binf.to_binary().dim() == 2);

    CodeFile lin = parse_text("linear4 n=2 k=1\n1w\n");
    CHECK(lin.to_additive().k() == 2);
}

TEST_CASE("comments, blank lines and surrounding whitespace are ignored") {
    CodeFile cf = parse_text(
        "# heading comment\n"
        "\n"
        "additive n=2 k=1   \n"
        "  # interior comment\n"
        "  w1\r\n"
        "\n"
        "# trailing comment\n");
    CHECK(cf.k == 1);
    CHECK(cf.gen.get(0, 0) == gf4_w);
}

TEST_CASE("the zero code is a header with no rows") {
    CodeFile cf = parse_text("additive n=3 k=0\n");
    CHECK(cf.to_additive() == AdditiveCode::zero(3));
}

TEST_CASE("parse failures carry line and column positions") {
    CHECK_THROWS_AS(parse_text(""), ParseError);
    CHECK_THROWS_AS(parse_text("quaternary n=2 k=1\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_text("additive n=2\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_text("additive n=2 k=2\n1w\n"), ParseError);        // missing row
    CHECK_THROWS_AS(parse_text("additive n=2 k=1\n1w\nw1\n"), ParseError);    // extra row
    CHECK_THROWS_AS(parse_text("additive n=2 k=1\n1w0\n"), ParseError);       // long row
    CHECK_THROWS_AS(parse_text("binary n=2 k=1\n1w\n"), ParseError);          // GF(4) symbol
    CHECK_THROWS_AS(parse_text("additive n=2 k=2\n1w\n1w\n"), ParseError);    // rank 1 rows

    try {
        parse_text("additive n=3 k=1\n1x0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
}

TEST_CASE("symbol case matters") {
    CodeFile lower = parse_text("additive n=1 k=1\nw\n");
    CodeFile upper = parse_text("additive n=1 k=1\nW\n");
    CHECK(lower.gen.get(0, 0) == gf4_w);
    CHECK(upper.gen.get(0, 0) == gf4_w2);
    CHECK(!(lower.to_additive() == upper.to_additive()));  // {0,w} vs {0,W}
}

TEST_CASE("bundled catalog files all parse") {
    for (const char* name :
         {"hexacode.code", "ex2_c.code", "ex2_d.code", "ex2_c4.code", "ex3_c1.code",
          "ex3_c2.code", "k1.code", "k2_1.code", "k2_2.code", "k2_3.code", "k3.code",
          "k4.code"}) {
        CHECK_NOTHROW(parse_code_file(testutil::data_dir() + "/" + name));
    }
}

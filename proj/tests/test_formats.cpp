#include "doctest.h"

#include <sstream>

#include "cforge/cretan.hpp"
#include "cforge/errors.hpp"
#include "cforge/formats.hpp"
#include "helpers.hpp"

using namespace cforge;
namespace io = cforge::io;

namespace {

Design design_742() { return circulant_incidence({1, 1, 1, 0, 1, 0, 0}); }

std::vector<int> pgm_pixels(const std::string& text, std::size_t& side) {
    std::istringstream in(text);
    std::string magic;
    std::size_t w = 0, h = 0;
    int maxval = 0;
    REQUIRE((in >> magic >> w >> h >> maxval));
    REQUIRE(magic == "P2");
    REQUIRE(w == h);
    REQUIRE(maxval == 255);
    side = w;
    std::vector<int> px;
    int v;
    while (in >> v) px.push_back(v);
    REQUIRE(px.size() == w * h);
    return px;
}

} // namespace

TEST_CASE("kind detection by leading line") {
    CHECK(io::detect("sbibd 7 4 2\n1110100\n") == io::FileKind::incidence);
    CHECK(io::detect("101\n011\n110\n") == io::FileKind::incidence);
    CHECK(io::detect("++\n+-\n") == io::FileKind::sign_grid);
    CHECK(io::detect("P2\n1 1\n255\n0\n") == io::FileKind::pgm);
    CHECK(io::detect(R"({"order":1,"disc":1,"entries":[[{"a":[1,1],"b":[0,1]}]]})") ==
          io::FileKind::matrix_json);
    CHECK_THROWS_AS(io::detect("hello\n"), format_error);
    CHECK_THROWS_AS(io::detect(""), format_error);
    CHECK_THROWS_AS(io::detect("{not json"), format_error);
}

TEST_CASE("incidence text round trip") {
    Design d = design_742();
    std::string text = io::write_incidence(d);
    CHECK(text.rfind("sbibd 7 4 2\n", 0) == 0);
    CHECK(io::read_incidence(text) == d);

    // Header is optional on input.
    std::string headerless = text.substr(text.find('\n') + 1);
    CHECK(io::read_incidence(headerless) == d);

    // A lying header is a failed certificate.
    std::string lying = "sbibd 7 3 1\n" + headerless;
    CHECK_THROWS_AS(io::read_incidence(lying), verify_error);

    CHECK_THROWS_AS(io::read_incidence("sbibd x y z\n101\n"), format_error);
    CHECK_THROWS_AS(io::read_incidence("10\n011\n110\n"), format_error);
}

TEST_CASE("sign grid round trip") {
    HadamardMatrix h = paley_hadamard(7);
    std::string text = io::write_sign_grid(h);
    CHECK(text.size() == 8 * 9); // 8 rows of 8 chars + newlines
    CHECK(hadamard_from_entries(io::read_sign_grid(text)) == h);
    CHECK_THROWS_AS(io::read_sign_grid("+*\n++\n"), format_error);
}

TEST_CASE("matrix JSON round trips bit-exactly") {
    for (int i = 0; i < 25; ++i) {
        ExactMatrix m = testutil::random_matrix(1 + i % 4, i % 2 ? 2 : 7);
        ExactMatrix back = io::read_matrix_json(io::write_matrix_json(m));
        CHECK(back == m);
    }
    // Purely rational matrices carry disc 1.
    ExactMatrix r = ExactMatrix::identity(3);
    std::string text = io::write_matrix_json(r);
    CHECK(text.find("\"disc\":1") != std::string::npos);
    CHECK(io::read_matrix_json(text) == r);
}

TEST_CASE("matrix JSON carries integers beyond 64 bits as strings") {
    const BigInt huge("123456789012345678901234567890123456789");
    ExactMatrix m(1);
    m(0, 0) = QuadNum(Rational(huge, BigInt(7)));
    std::string text = io::write_matrix_json(m);
    CHECK(text.find("\"123456789012345678901234567890123456789\"") != std::string::npos);
    CHECK(io::read_matrix_json(text) == m);
}

TEST_CASE("matrix JSON rejects malformed inputs") {
    CHECK_THROWS_AS(io::read_matrix_json("{\"order\":2,\"disc\":2,\"entries\":[]}"), format_error);
    CHECK_THROWS_AS(io::read_matrix_json("{\"order\":1,\"entries\":[[]]}"), format_error);
    CHECK_THROWS_AS(
        io::read_matrix_json(R"({"order":1,"disc":0,"entries":[[{"a":[1,1],"b":[0,1]}]]})"),
        format_error);
    CHECK_THROWS_AS(
        io::read_matrix_json(R"({"order":1,"disc":1,"entries":[[{"a":[1],"b":[0,1]}]]})"),
        format_error);
}

TEST_CASE("cretan JSON round trip re-certifies") {
    CretanMatrix s = cretan_from_sbibd(qr_design(7), LevelConvention::x_on_zeros);
    std::string text = io::write_cretan_json(s);
    CHECK(io::detect(text) == io::FileKind::cretan_json);

    CretanMatrix back = io::read_cretan_json(text);
    CHECK(back.matrix() == s.matrix());
    CHECK(back.y() == s.y());
    CHECK(back.omega() == s.omega());
    CHECK(back.convention() == LevelConvention::x_on_zeros);
    CHECK(back.source_params() == s.source_params());

    // Tampered weight fails the certificate.
    std::string bad = text;
    auto pos = bad.find("22/1 + -12/1*sqrt(2)");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 20, "23/1 + -12/1*sqrt(2)");
    CHECK_THROWS_AS(io::read_cretan_json(bad), verify_error);

    CHECK_THROWS_AS(io::read_cretan_json("{\"order\":1,\"disc\":1,\"entries\":[[{\"a\":[1,1],"
                                         "\"b\":[0,1]}]]}"),
                    format_error); // no metadata block
}

TEST_CASE("any-matrix reader accepts every input kind") {
    CHECK(io::read_any_matrix("+-\n-+\n")(0, 1) == QuadNum(-1));
    CHECK(io::read_any_matrix(io::write_incidence(design_742()))(0, 0) == QuadNum(1));
    ExactMatrix m = testutil::random_matrix(3);
    CHECK(io::read_any_matrix(io::write_matrix_json(m)) == m);
    CretanMatrix s = cretan_from_sbibd(design_742(), LevelConvention::x_on_ones);
    CHECK(io::read_any_matrix(io::write_cretan_json(s)) == s.matrix());
    CHECK_THROWS_AS(io::read_any_matrix("P2\n1 1\n255\n0\n"), format_error);
}

TEST_CASE("portrait of the order-7 principal matrix") {
    CretanMatrix s = cretan_from_sbibd(design_742(), LevelConvention::x_on_ones);
    std::string pgm = io::render_pgm(s.matrix());
    std::size_t side = 0;
    std::vector<int> px = pgm_pixels(pgm, side);
    CHECK(side == 7);
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            const int expected = s.pattern().mask().at(i, j) ? 255 : 53;
            CHECK(px[i * 7 + j] == expected);
        }
    }
}

TEST_CASE("portrait conventions") {
    std::size_t side = 0;

    std::vector<int> ones = pgm_pixels(io::render_pgm(ExactMatrix::ones(3)), side);
    for (int g : ones) CHECK(g == 255);

    std::vector<int> had = pgm_pixels(io::render_pgm(sylvester(2).exact()), side);
    CHECK(side == 4);
    for (int g : had) CHECK((g == 0 || g == 255));

    // Scaling repeats entries in k x k blocks.
    std::vector<int> scaled = pgm_pixels(io::render_pgm(sylvester(1).exact(), 3), side);
    CHECK(side == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(scaled[i * 6 + j] == (sylvester(1).at(i / 3, j / 3) > 0 ? 255 : 0));

    // Entries outside [-1,1] clamp instead of overflowing.
    ExactMatrix wild(1);
    wild(0, 0) = QuadNum(9);
    CHECK(pgm_pixels(io::render_pgm(wild), side)[0] == 255);
    wild(0, 0) = QuadNum(-9);
    CHECK(pgm_pixels(io::render_pgm(wild), side)[0] == 0);

    CHECK_THROWS_AS(io::render_pgm(ExactMatrix::ones(2), 0), format_error);
}

TEST_CASE("portraits keep plain-format lines short and invert within one step") {
    CretanMatrix s = cretan_from_sbibd(qr_design(23), LevelConvention::x_on_zeros);
    std::string pgm = io::render_pgm(s.matrix(), 2);
    std::istringstream lines(pgm);
    std::string line;
    while (std::getline(lines, line)) CHECK(line.size() <= 70);

    std::size_t side = 0;
    std::vector<int> px = pgm_pixels(pgm, side);
    CHECK(side == 46);
    for (std::size_t pi = 0; pi < side; ++pi) {
        for (std::size_t pj = 0; pj < side; ++pj) {
            const double value = s.matrix()(pi / 2, pj / 2).to_double();
            const double expected = 255.0 * (value + 1.0) / 2.0;
            CHECK(std::abs(px[pi * side + pj] - expected) <= 0.5 + 1e-9);
        }
    }
}

TEST_CASE("writers are deterministic") {
    CretanMatrix s = cretan_from_sbibd(design_742(), LevelConvention::x_on_ones);
    CHECK(io::write_cretan_json(s) == io::write_cretan_json(s));
    CHECK(io::write_incidence(design_742()) == io::write_incidence(design_742()));
    CHECK(io::render_pgm(s.matrix()) == io::render_pgm(s.matrix()));
}

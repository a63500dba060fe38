#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "diact/csv.hpp"
#include "diact/svg.hpp"

using namespace diact;

TEST_CASE("parse a labeled matrix with comments and CRLF") {
    std::stringstream in(
        "# produced by hand\r\n"
        "sector,Farming,Industry\r\n"
        "Farming,1.5,0\r\n"
        "Industry,0.25,3e-2\r\n");
    const auto m = parse_matrix_csv(in);
    CHECK(m.col_labels == std::vector<std::string>{"Farming", "Industry"});
    CHECK(m.row_labels == std::vector<std::string>{"Farming", "Industry"});
    CHECK(m.values(0, 0) == 1.5);
    CHECK(m.values(1, 1) == 0.03);
}

TEST_CASE("parse errors: ragged rows, non-numeric cells, empty input") {
    std::stringstream ragged("s,a,b\nr1,1,2\nr2,3\n");
    CHECK_THROWS_AS(parse_matrix_csv(ragged), ParseError);
    std::stringstream text("s,a\nr1,abc\n");
    CHECK_THROWS_AS(parse_matrix_csv(text), ParseError);
    std::stringstream trailing("s,a\nr1,1x\n");
    CHECK_THROWS_AS(parse_matrix_csv(trailing), ParseError);
    std::stringstream empty("");
    CHECK_THROWS_AS(parse_matrix_csv(empty), ParseError);
    std::stringstream inf_cell("s,a\nr1,inf\n");
    CHECK_THROWS_AS(parse_matrix_csv(inf_cell), ParseError);
    CHECK_THROWS_AS(load_matrix_csv("/no/such/file.csv"), ParseError);
}

TEST_CASE("as_vector accepts one-column and one-row shapes only") {
    std::stringstream col("s,v\na,1\nb,2\n");
    const auto v = as_vector(parse_matrix_csv(col));
    CHECK(v == Vector{1, 2});
    std::stringstream wide("s,a,b\nr,1,2\n");
    CHECK(as_vector(parse_matrix_csv(wide)) == Vector{1, 2});
    std::stringstream square("s,a,b\nr,1,2\nq,3,4\n");
    CHECK_THROWS_AS(as_vector(parse_matrix_csv(square)), ParseError);
}

TEST_CASE("emit then parse round-trips 12-significant-digit values") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unif(-100.0, 100.0);
    LabeledMatrix m;
    m.row_labels = {"r1", "r2", "r3"};
    m.col_labels = {"c1", "c2", "c3"};
    Matrix values(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            values(i, k) = std::stod(format_number(unif(rng)));  // quantize to emitted precision
    m.values = values;

    std::stringstream out;
    write_matrix_csv(out, m, {"row-to-column convention"});
    const auto parsed = parse_matrix_csv(out);
    CHECK(parsed.values == m.values);
    CHECK(parsed.col_labels == m.col_labels);

    // emission is deterministic
    std::stringstream again;
    write_matrix_csv(again, m, {"row-to-column convention"});
    CHECK(again.str() == out.str());
}

TEST_CASE("heatmap SVG structure") {
    Matrix m(3, 3, {0.0, 0.1, 0.0, 0.0, 0.0, 0.2, 0.3, 0.0, 0.0});
    const auto svg = heatmap_svg(m, {"a", "b", "c"}, "coefficients");

    CHECK(svg.find("<?xml") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (std::size_t pos = svg.find(needle); pos != std::string::npos;
             pos = svg.find(needle, pos + needle.size()))
            ++n;
        return n;
    };
    CHECK(count("<rect class=\"cell\"") == 9);
    CHECK(count("<text class=\"label\"") == 6);
    // max entry 0.3 maps to the full ramp color
    CHECK(svg.find("rgb(8,81,156)") != std::string::npos);
    // zero maps to white
    CHECK(svg.find("rgb(255,255,255)") != std::string::npos);
    CHECK(svg.find("linear ramp") != std::string::npos);

    CHECK_THROWS_AS(heatmap_svg(Matrix(2, 3), {"a", "b"}, "t"), std::invalid_argument);
    CHECK_THROWS_AS(heatmap_svg(Matrix(2, 2), {"a"}, "t"), std::invalid_argument);
}

TEST_CASE("format_number keeps 12 significant digits") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(12676.0563380282) == "12676.056338");
}

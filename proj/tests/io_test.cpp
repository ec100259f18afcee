#include <stdexcept>
#include <string>

#include "doctest.h"
#include "rotorlab/io.hpp"
#include "support/fixtures.hpp"

using namespace rotorlab;

namespace {

const char* kTriangle =
    "# a bidirected triangle\n"
    "vertex a\n"
    "vertex b\n"
    "vertex c\n"
    "\n"
    "out a: b c\n"
    "out b: c a   # slot order fixes the rotation\n"
    "out c: a b\n"
    "rotor b = 1\n"
    "chips a = 2\n"
    "chips c = -1\n";

}  // namespace

TEST_CASE("parsing a full document") {
    auto doc = parse_graph_file(kTriangle);
    CHECK(doc.names == std::vector<std::string>{"a", "b", "c"});
    CHECK(doc.out_lists ==
          std::vector<std::vector<int>>{{1, 2}, {2, 0}, {0, 1}});
    CHECK(doc.rotor == RotorConfiguration{0, 1, 0});
    CHECK(doc.chips == Divisor{2, 0, -1});

    auto g = doc.to_graph();
    CHECK(g.label(0) == "a");
    CHECK(g.vertex_by_label("c") == 2);
    CHECK(doc.to_state() == Drc{{2, 0, -1}, {0, 1, 0}});
}

TEST_CASE("the colon may stand alone") {
    auto doc = parse_graph_file("vertex a\nvertex b\nout a : b\nout b : a\n");
    CHECK(doc.out_lists == std::vector<std::vector<int>>{{1}, {0}});
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line, const std::string& what) {
        try {
            parse_graph_file(text);
            FAIL_CHECK("no error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(std::string(e.what()) == what);
        }
    };

    expect_error("vertex a\nvertex a\n", 2, "line 2: duplicate vertex 'a'");
    expect_error("vertex a\nout q: a\n", 2, "line 2: unknown vertex name 'q'");
    expect_error("vertex a\nout a b\n", 2, "line 2: expected ':' after the vertex name");
    expect_error("vertex a\nvertex b\nout a: b\nout a: b\nout b: a\n", 4,
                 "line 4: second out line for vertex 'a'");
    expect_error("vertex a\nout a:\n", 2, "line 2: vertex 'a' needs at least one out-edge");
    expect_error("vertex a\nvertex b\nout a: b\n", 0, "missing out line for vertex 'b'");
    expect_error("flip a\n", 1, "line 1: unknown directive 'flip'");
    expect_error("", 0, "no vertices declared");
    expect_error("vertex a\nvertex b\nout a: b\nout b: a\nrotor a = 1\n", 5,
                 "line 5: rotor slot out of range for vertex 'a'");
    expect_error("vertex a\nvertex b\nout a: b\nout b: a\nrotor a = x\n", 5,
                 "line 5: rotor slot out of range for vertex 'a'");
    expect_error("vertex a\nvertex b\nout a: b\nout b: a\nchips a = ++2\n", 5,
                 "line 5: bad chip count for vertex 'a'");
    expect_error("vertex a\nvertex b\nout a: b\nout b: a\nchips a = 1\nchips a = 2\n", 6,
                 "line 6: second chips line for vertex 'a'");
    expect_error("vertex a\nvertex b\nout a: b\nout b: a\nrotor q = 0\n", 5,
                 "line 5: unknown vertex name 'q'");
    expect_error("vertex\n", 1, "line 1: expected: vertex <name>");
    expect_error("vertex a\nout\n", 2, "line 2: expected: out <name>: <heads...>");
    expect_error("vertex a\nvertex b\nout a: b\nout b: a\nrotor a 0\n", 5,
                 "line 5: expected: rotor <name> = <value>");
}

TEST_CASE("loading a missing file") {
    CHECK_THROWS_WITH_AS(load_graph_file("/nonexistent/g.rg"),
                         "cannot open file: /nonexistent/g.rg", std::runtime_error);
}

TEST_CASE("documents validate as graphs") {
    auto doc = parse_graph_file("vertex a\nvertex b\nout a: a b\nout b: a\n");
    CHECK_THROWS_WITH_AS(doc.to_graph(), "invalid graph: loop, at a", std::invalid_argument);
}

TEST_CASE("serialization round-trips") {
    auto doc = parse_graph_file(kTriangle);
    auto g = doc.to_graph();
    auto s = doc.to_state();
    std::string text = serialize_graph_file(g, s);
    auto again = parse_graph_file(text);
    CHECK(again.names == doc.names);
    CHECK(again.out_lists == doc.out_lists);
    CHECK(again.to_state() == s);
    // Serialization is canonical: a second pass is byte-identical.
    CHECK(serialize_graph_file(again.to_graph(), again.to_state()) == text);
}

TEST_CASE("serialization prints every rotor and only nonzero chips") {
    auto g = fixtures::triangle().graph;
    std::string text = serialize_graph_file(g, {{0, 0, 0}, {0, 1, 0}});
    CHECK(text ==
          "vertex v0\n"
          "vertex v1\n"
          "vertex v2\n"
          "out v0: v1 v2\n"
          "out v1: v2 v0\n"
          "out v2: v0 v1\n"
          "rotor v0 = 0\n"
          "rotor v1 = 1\n"
          "rotor v2 = 0\n");
}

TEST_CASE("negative chip counts survive the round trip") {
    auto doc = parse_graph_file("vertex a\nvertex b\nout a: b\nout b: a a\nchips b = -12\n");
    CHECK(doc.chips == Divisor{0, -12});
    auto text = serialize_graph_file(doc.to_graph(), doc.to_state());
    CHECK(parse_graph_file(text).chips == Divisor{0, -12});
}

TEST_CASE("text rendering of result documents") {
    ResultDoc doc;
    doc.add_text("answer", "yes");
    doc.add_number("count", BigInt("123456789012345678901234567890"));
    doc.add_names("trace", {"a", "b"});
    doc.add_numbers("per", {BigInt(2), BigInt(1)});
    doc.add_map("period", {{"a", BigInt(2)}, {"b", BigInt(-1)}});
    IntMatrix m(2, 2);
    m(0, 0) = -1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = -4;
    doc.add_matrix("laplacian", m);

    CHECK(doc.render_text() ==
          "answer: yes\n"
          "count: 123456789012345678901234567890\n"
          "trace: a b\n"
          "per: 2 1\n"
          "period: a=2 b=-1\n"
          "laplacian:\n"
          "  -1 2\n"
          "  3 -4\n");

    CHECK(doc.render_json() ==
          "{\n"
          "  \"answer\": \"yes\",\n"
          "  \"count\": 123456789012345678901234567890,\n"
          "  \"trace\": [\"a\", \"b\"],\n"
          "  \"per\": [2, 1],\n"
          "  \"period\": {\"a\": 2, \"b\": -1},\n"
          "  \"laplacian\": [[-1, 2], [3, -4]]\n"
          "}\n");
}

TEST_CASE("json strings are escaped") {
    ResultDoc doc;
    doc.add_text("weird", "a\"b\\c\nd\te");
    CHECK(doc.render_json() == "{\n  \"weird\": \"a\\\"b\\\\c\\nd\\te\"\n}\n");
}

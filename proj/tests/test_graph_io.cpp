#include "chibound/enumerate.hpp"
#include "chibound/error.hpp"
#include "chibound/graph_io.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace chibound;

namespace {

Errc parse_error(std::string_view line)
{
    try {
        parse_graph6(line);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error for " << line);
    return Errc::InternalConsistency;
}

} // namespace

TEST_CASE("graph6 fixed vectors")
{
    CHECK(parse_graph6("Bw") == named::complete(3));
    CHECK(parse_graph6("Dhc") == named::cycle(5));
    CHECK(parse_graph6("@") == named::empty(1));
    CHECK(emit_graph6(named::complete(3)) == "Bw");
    CHECK(emit_graph6(named::cycle(5)) == "Dhc");
    CHECK(emit_graph6(named::empty(1)) == "@");
    // the hand encoder agrees on the fixed vectors
    CHECK(ref::hand_graph6(named::complete(3)) == "Bw");
    CHECK(ref::hand_graph6(named::cycle(5)) == "Dhc");
}

TEST_CASE("graph6 tolerates line endings and the optional header")
{
    CHECK(parse_graph6("Dhc\n") == named::cycle(5));
    CHECK(parse_graph6("Dhc\r\n") == named::cycle(5));
    CHECK(parse_graph6(">>graph6<<Dhc") == named::cycle(5));
}

TEST_CASE("graph6 size encodings at 62, 63 and 64 vertices")
{
    for (int n : {62, 63, 64}) {
        const Graph g = named::cycle(n);
        const std::string s = emit_graph6(g);
        if (n <= 62)
            CHECK(s[0] == static_cast<char>(63 + n));
        else
            CHECK(s.substr(0, 4) == (n == 63 ? "~??~" : "~?@?"));
        CHECK(parse_graph6(s) == g);
    }
}

TEST_CASE("graph6 errors")
{
    CHECK(parse_error("") == Errc::MalformedHeader);
    CHECK(parse_error("?") == Errc::MalformedHeader);                 // n = 0
    CHECK(parse_error("~?@@") == Errc::CapacityExceeded);             // n = 65 in long form
    CHECK(parse_error("~~??A???") == Errc::CapacityExceeded);         // 36-bit size form
    CHECK(parse_error("~??A") == Errc::MalformedHeader);              // long form for n < 63
    CHECK(parse_error("~") == Errc::MalformedHeader);
    CHECK(parse_error("Bww") == Errc::BadLength);
    CHECK(parse_error("D") == Errc::BadLength);
    CHECK(parse_error("B\x7f") == Errc::BadByte);
    CHECK(parse_error("B ") == Errc::BadByte);
    CHECK(parse_error(":Fa@x^") == Errc::Sparse6Unsupported);
    CHECK(parse_error("&Bw") == Errc::Digraph6Unsupported);
    // Padding bits are ignored on input; emission always clears them.
    CHECK(parse_graph6("Bx") == named::complete(3));
    CHECK(emit_graph6(parse_graph6("Bx")) == "Bw");
}

TEST_CASE("emitted bytes lie in the printable graph6 range")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = ref::random_graph(rng, 1 + static_cast<int>(rng() % 64), 0.5);
        for (unsigned char ch : emit_graph6(g)) {
            CHECK(ch >= 63);
            CHECK(ch <= 126);
        }
    }
}

TEST_CASE("property: graph6 round trip and agreement with the hand encoder")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const Graph g = ref::random_graph(rng, n, (trial % 9 + 1) / 10.0);
        const std::string s = emit_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(emit_graph6(parse_graph6(s)) == s);
        if (n <= 62)
            CHECK(s == ref::hand_graph6(g));
    }
}

TEST_CASE("round trip over enumerated graphs")
{
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : triangle_free_graphs(n)) {
            CHECK(parse_graph6(emit_graph6(g)) == g);
            CHECK(emit_graph6(g) == ref::hand_graph6(g));
        }
}

TEST_CASE("edge list examples")
{
    CHECK(parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0") == named::cycle(5));
    CHECK(parse_edge_list("3") == named::empty(3));
    CHECK(parse_edge_list("# comment\n\n3\n0 1\n") == Graph::from_edges(3, {{0, 1}}));

    auto code = [](std::string_view text) {
        try {
            parse_edge_list(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InternalConsistency;
    };
    CHECK(code("2\n0 0") == Errc::InvalidEdge);
    CHECK(code("2\n0 2") == Errc::InvalidEdge);
    CHECK(code("2\n0") == Errc::InvalidEdge);
    CHECK(code("65") == Errc::CapacityExceeded);
    CHECK(code("x") == Errc::ParseError);
    CHECK(code("") == Errc::ParseError);

    const Graph p = named::petersen();
    CHECK(parse_edge_list(emit_edge_list(p)) == p);
}

TEST_CASE("read_graph_stream examples")
{
    {
        std::istringstream in("Bw\nDhc\n@\n");
        const auto s = read_graph_stream(in, "f");
        REQUIRE(s.records.size() == 3);
        CHECK(s.records[0].graph == named::complete(3));
        CHECK(s.records[1].graph == named::cycle(5));
        CHECK(s.records[2].source == "f:3");
        CHECK(s.errors.empty());
    }
    {
        std::istringstream in("");
        CHECK(read_graph_stream(in, "f").records.empty());
    }
    {
        std::istringstream in("Bw\n\nB!\nDhc");
        const auto s = read_graph_stream(in, "f", ParseErrorPolicy::Skip);
        REQUIRE(s.records.size() == 2);
        CHECK(s.records[1].source == "f:4");
        REQUIRE(s.errors.size() == 1);
        CHECK(s.errors[0].line == 3);
        CHECK(s.errors[0].code == Errc::BadByte);
    }
    {
        std::istringstream in("Bw\nB!\n");
        try {
            read_graph_stream(in, "f", ParseErrorPolicy::Abort);
            FAIL("abort policy must throw");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::BadByte);
            CHECK(std::string(e.what()).find("f:2") != std::string::npos);
        }
    }
}

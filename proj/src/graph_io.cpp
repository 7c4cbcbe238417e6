#include "chibound/graph_io.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace chibound {

namespace {

constexpr int kBias = 63;
constexpr unsigned char kMaxByte = 126;

std::string_view strip_line_end(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int checked_value(unsigned char c, Errc code, std::string_view what)
{
    if (c < kBias || c > kMaxByte)
        throw Error(code, std::string(what) + " byte " + std::to_string(static_cast<int>(c)) + " outside 63..126");
    return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view line)
{
    line = strip_line_end(line);
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header))
        line.remove_prefix(header.size());
    if (line.empty())
        throw Error(Errc::MalformedHeader, "empty graph6 record");
    if (line.front() == ':')
        throw Error(Errc::Sparse6Unsupported, "sparse6 records are not supported");
    if (line.front() == '&')
        throw Error(Errc::Digraph6Unsupported, "digraph6 records are not supported");

    const auto* bytes = reinterpret_cast<const unsigned char*>(line.data());
    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto need = [&](std::size_t count) {
        if (line.size() < pos + count)
            throw Error(Errc::MalformedHeader, "truncated size field");
    };
    if (bytes[0] != kMaxByte) {
        n = checked_value(bytes[0], Errc::MalformedHeader, "size");
        pos = 1;
    } else if (line.size() >= 2 && bytes[1] == kMaxByte) {
        pos = 2;
        need(6);
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(checked_value(bytes[pos++], Errc::MalformedHeader, "size"));
        if (n < 258048)
            throw Error(Errc::MalformedHeader, "non-canonical 8-byte size field");
    } else {
        pos = 1;
        need(3);
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(checked_value(bytes[pos++], Errc::MalformedHeader, "size"));
        if (n < 63)
            throw Error(Errc::MalformedHeader, "non-canonical 4-byte size field");
    }
    if (n == 0)
        throw Error(Errc::MalformedHeader, "graphs with zero vertices are not representable");
    if (n > static_cast<std::uint64_t>(kMaxVertices))
        throw Error(Errc::CapacityExceeded, "graph6 record declares " + std::to_string(n) + " vertices (max 64)");

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (line.size() - pos != body)
        throw Error(Errc::BadLength, "expected " + std::to_string(body) + " edge bytes, found " +
                                         std::to_string(line.size() - pos));

    std::array<Word, kMaxVertices> rows{};
    std::size_t k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int value = checked_value(bytes[pos + k / 6], Errc::BadByte, "edge");
            if ((value >> (5 - k % 6)) & 1) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    for (std::size_t b = pos; b < line.size(); ++b)
        checked_value(bytes[b], Errc::BadByte, "edge");
    return Graph::from_rows(order, std::span<const Word>(rows.data(), order));
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kBias + ((n >> shift) & 0x3f)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

namespace {

bool parse_int(std::string_view token, int& out)
{
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const auto tokens = split_ws(text.substr(start, end - start));
        ++line_no;
        start = end + 1;
        if (tokens.empty() || tokens.front().starts_with('#'))
            continue;
        if (n < 0) {
            if (tokens.size() != 1 || !parse_int(tokens[0], n))
                throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected vertex count");
            if (n < 1 || n > kMaxVertices)
                throw Error(Errc::CapacityExceeded, "vertex count " + std::to_string(n) + " outside 1..64");
            continue;
        }
        int u = 0;
        int v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw Error(Errc::InvalidEdge, "line " + std::to_string(line_no) + ": expected \"i j\"");
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw Error(Errc::InvalidEdge, "line " + std::to_string(line_no) + ": invalid edge " +
                                               std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw Error(Errc::ParseError, "edge list has no vertex count");
    return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

Graph6Reader::Graph6Reader(std::istream& in, std::string source_name, ParseErrorPolicy policy)
    : in_(in), name_(std::move(source_name)), policy_(policy)
{
}

std::optional<GraphRecord> Graph6Reader::next()
{
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        const auto trimmed = strip_line_end(line);
        if (trimmed.find_first_not_of(" \t") == std::string_view::npos)
            continue;
        try {
            return GraphRecord{parse_graph6(trimmed), name_ + ":" + std::to_string(line_no_)};
        } catch (const Error& e) {
            if (policy_ == ParseErrorPolicy::Abort)
                throw Error(e.code(), name_ + ":" + std::to_string(line_no_) + ": " + e.detail());
            errors_.push_back({line_no_, e.code(), e.detail()});
        }
    }
    return std::nullopt;
}

GraphStream read_graph_stream(std::istream& in, const std::string& source_name, ParseErrorPolicy policy)
{
    Graph6Reader reader(in, source_name, policy);
    GraphStream out;
    while (auto rec = reader.next())
        out.records.push_back(std::move(*rec));
    out.errors = reader.errors();
    return out;
}

} // namespace chibound

#pragma once

#include "chibound/error.hpp"
#include "chibound/graph.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chibound {

/// Parses one graph6 record. A trailing "\n" or "\r\n" and an optional
/// ">>graph6<<" header are accepted.
Graph parse_graph6(std::string_view line);

/// graph6 encoding of g; padding bits are zero.
std::string emit_graph6(const Graph& g);

/// Edge-list text: first line "n", then one "i j" pair per line, 0-based.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

struct GraphRecord {
    Graph graph;
    std::string source; // "file:line" or "constructed"
};

enum class ParseErrorPolicy { Abort, Skip };

struct LineError {
    std::size_t line;
    Errc code;
    std::string message;
};

/// Line-oriented graph6 reader. Blank lines are skipped. Under the Abort
/// policy the first malformed line throws; under Skip it is recorded in
/// errors() and reading continues.
class Graph6Reader {
public:
    Graph6Reader(std::istream& in, std::string source_name, ParseErrorPolicy policy);

    std::optional<GraphRecord> next();

    const std::vector<LineError>& errors() const noexcept { return errors_; }

private:
    std::istream& in_;
    std::string name_;
    ParseErrorPolicy policy_;
    std::size_t line_no_ = 0;
    std::vector<LineError> errors_;
};

struct GraphStream {
    std::vector<GraphRecord> records;
    std::vector<LineError> errors;
};

GraphStream read_graph_stream(std::istream& in, const std::string& source_name,
                              ParseErrorPolicy policy = ParseErrorPolicy::Abort);

} // namespace chibound

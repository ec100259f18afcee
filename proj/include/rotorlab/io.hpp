#pragma once
// GraphFile parsing and serialization plus structured result rendering.
//
// GraphFile format, one directive per line, '#' starts a comment:
//   vertex <name>             declaration order fixes the vertex index
//   out <name>: <heads...>    out-edges in slot order (slot 0 first)
//   rotor <name> = <slot>     optional, default 0
//   chips <name> = <int>      optional, default 0

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotorlab/graph.hpp"
#include "rotorlab/lattice.hpp"

namespace rotorlab {

struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_, const std::string& message)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + message
                                       : message),
          line(line_) {}
};

struct GraphDocument {
    std::vector<std::string> names;
    std::vector<std::vector<int>> out_lists;
    RotorConfiguration rotor;  // per vertex, default 0
    Divisor chips;             // per vertex, default 0

    RibbonDigraph to_graph() const;  // throws std::invalid_argument on bad structure
    Drc to_state() const { return {chips, rotor}; }
};

GraphDocument parse_graph_file(const std::string& text);
GraphDocument load_graph_file(const std::string& path);

std::string serialize_graph_file(const RibbonDigraph& g, const Drc& s);

// Ordered key-value document rendered as plain text or a JSON object.
// Numbers are arbitrary-precision and printed in full.
class ResultDoc {
public:
    void add_text(std::string key, std::string value);
    void add_number(std::string key, const BigInt& value);
    void add_names(std::string key, std::vector<std::string> items);
    void add_numbers(std::string key, const std::vector<BigInt>& items);
    void add_map(std::string key, std::vector<std::pair<std::string, BigInt>> items);
    void add_matrix(std::string key, const IntMatrix& m);

    std::string render_text() const;
    std::string render_json() const;

private:
    enum class Kind { kText, kNumber, kNames, kNumbers, kMap, kMatrix };
    struct Entry {
        Kind kind;
        std::string key;
        std::string scalar;
        std::vector<std::string> items;
        std::vector<std::pair<std::string, std::string>> pairs;
        std::vector<std::vector<std::string>> rows;
    };
    std::vector<Entry> entries_;
};

}  // namespace rotorlab

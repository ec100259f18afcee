#include "rotorlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace rotorlab {

RibbonDigraph GraphDocument::to_graph() const { return RibbonDigraph::make(out_lists, names); }

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

bool parse_int(const std::string& s, BigInt& out) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    out = BigInt(s);
    return true;
}

}  // namespace

GraphDocument parse_graph_file(const std::string& text) {
    GraphDocument doc;
    std::map<std::string, int> index;
    std::vector<std::vector<std::string>> head_names;  // resolved after all vertices are known
    std::vector<int> out_line, rotor_line, chips_line;
    std::vector<std::pair<int, std::string>> rotor_raw, chips_raw;

    auto vertex_of = [&](const std::string& name, int line) {
        auto it = index.find(name);
        if (it == index.end()) throw ParseError(line, "unknown vertex name '" + name + "'");
        return it->second;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];

        if (kind == "vertex") {
            if (tokens.size() != 2) throw ParseError(lineno, "expected: vertex <name>");
            if (index.count(tokens[1])) {
                throw ParseError(lineno, "duplicate vertex '" + tokens[1] + "'");
            }
            index[tokens[1]] = static_cast<int>(doc.names.size());
            doc.names.push_back(tokens[1]);
        } else if (kind == "out") {
            if (tokens.size() < 2) throw ParseError(lineno, "expected: out <name>: <heads...>");
            std::string name = tokens[1];
            size_t first_head = 2;
            if (!name.empty() && name.back() == ':') {
                name.pop_back();
            } else if (tokens.size() > 2 && tokens[2] == ":") {
                first_head = 3;
            } else {
                throw ParseError(lineno, "expected ':' after the vertex name");
            }
            int v = vertex_of(name, lineno);
            if (static_cast<int>(out_line.size()) <= v) out_line.resize(doc.names.size(), 0);
            if (out_line[v]) {
                throw ParseError(lineno, "second out line for vertex '" + name + "'");
            }
            out_line[v] = lineno;
            if (static_cast<int>(head_names.size()) < static_cast<int>(doc.names.size())) {
                head_names.resize(doc.names.size());
            }
            if (tokens.size() == first_head) {
                throw ParseError(lineno, "vertex '" + name + "' needs at least one out-edge");
            }
            head_names[v].assign(tokens.begin() + first_head, tokens.end());
        } else if (kind == "rotor" || kind == "chips") {
            if (tokens.size() != 4 || tokens[2] != "=") {
                throw ParseError(lineno, "expected: " + kind + " <name> = <value>");
            }
            int v = vertex_of(tokens[1], lineno);
            auto& lines = kind == "rotor" ? rotor_line : chips_line;
            auto& raw = kind == "rotor" ? rotor_raw : chips_raw;
            if (static_cast<int>(lines.size()) <= v) lines.resize(doc.names.size(), 0);
            if (static_cast<int>(raw.size()) <= v) raw.resize(doc.names.size(), {0, ""});
            if (lines[v]) {
                throw ParseError(lineno, "second " + kind + " line for vertex '" + tokens[1] + "'");
            }
            lines[v] = lineno;
            raw[v] = {lineno, tokens[3]};
        } else {
            throw ParseError(lineno, "unknown directive '" + kind + "'");
        }
    }

    const int n = static_cast<int>(doc.names.size());
    if (n == 0) throw ParseError(0, "no vertices declared");
    out_line.resize(n, 0);
    head_names.resize(n);
    rotor_raw.resize(n, {0, ""});
    chips_raw.resize(n, {0, ""});

    doc.out_lists.resize(n);
    for (int v = 0; v < n; ++v) {
        if (!out_line[v]) {
            throw ParseError(0, "missing out line for vertex '" + doc.names[v] + "'");
        }
        for (const std::string& h : head_names[v]) {
            doc.out_lists[v].push_back(vertex_of(h, out_line[v]));
        }
    }

    doc.rotor.assign(n, 0);
    doc.chips.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!rotor_raw[v].second.empty()) {
            BigInt slot;
            if (!parse_int(rotor_raw[v].second, slot) || slot < 0 ||
                slot >= static_cast<int>(doc.out_lists[v].size())) {
                throw ParseError(rotor_raw[v].first,
                                 "rotor slot out of range for vertex '" + doc.names[v] + "'");
            }
            doc.rotor[v] = static_cast<int>(slot);
        }
        if (!chips_raw[v].second.empty()) {
            BigInt c;
            if (!parse_int(chips_raw[v].second, c)) {
                throw ParseError(chips_raw[v].first,
                                 "bad chip count for vertex '" + doc.names[v] + "'");
            }
            doc.chips[v] = c;
        }
    }
    return doc;
}

GraphDocument load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_file(buf.str());
}

std::string serialize_graph_file(const RibbonDigraph& g, const Drc& s) {
    std::ostringstream out;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) out << "vertex " << g.label(v) << "\n";
    for (int v = 0; v < n; ++v) {
        out << "out " << g.label(v) << ":";
        for (int w : g.out_list(v)) out << " " << g.label(w);
        out << "\n";
    }
    for (int v = 0; v < n; ++v) out << "rotor " << g.label(v) << " = " << s.rotor[v] << "\n";
    for (int v = 0; v < n; ++v) {
        if (s.divisor[v] != 0) {
            out << "chips " << g.label(v) << " = " << s.divisor[v] << "\n";
        }
    }
    return out.str();
}

void ResultDoc::add_text(std::string key, std::string value) {
    entries_.push_back({Kind::kText, std::move(key), std::move(value), {}, {}, {}});
}

void ResultDoc::add_number(std::string key, const BigInt& value) {
    entries_.push_back({Kind::kNumber, std::move(key), value.str(), {}, {}, {}});
}

void ResultDoc::add_names(std::string key, std::vector<std::string> items) {
    entries_.push_back({Kind::kNames, std::move(key), "", std::move(items), {}, {}});
}

void ResultDoc::add_numbers(std::string key, const std::vector<BigInt>& items) {
    Entry e{Kind::kNumbers, std::move(key), "", {}, {}, {}};
    for (const BigInt& x : items) e.items.push_back(x.str());
    entries_.push_back(std::move(e));
}

void ResultDoc::add_map(std::string key, std::vector<std::pair<std::string, BigInt>> items) {
    Entry e{Kind::kMap, std::move(key), "", {}, {}, {}};
    for (auto& [k, v] : items) e.pairs.emplace_back(std::move(k), v.str());
    entries_.push_back(std::move(e));
}

void ResultDoc::add_matrix(std::string key, const IntMatrix& m) {
    Entry e{Kind::kMatrix, std::move(key), "", {}, {}, {}};
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        e.rows.push_back(std::move(row));
    }
    entries_.push_back(std::move(e));
}

namespace {

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace

std::string ResultDoc::render_text() const {
    std::ostringstream out;
    for (const Entry& e : entries_) {
        switch (e.kind) {
            case Kind::kText:
            case Kind::kNumber:
                out << e.key << ": " << e.scalar << "\n";
                break;
            case Kind::kNames:
            case Kind::kNumbers: {
                out << e.key << ":";
                for (const auto& item : e.items) out << " " << item;
                out << "\n";
                break;
            }
            case Kind::kMap: {
                out << e.key << ":";
                for (const auto& [k, v] : e.pairs) out << " " << k << "=" << v;
                out << "\n";
                break;
            }
            case Kind::kMatrix: {
                out << e.key << ":\n";
                for (const auto& row : e.rows) {
                    out << " ";
                    for (const auto& v : row) out << " " << v;
                    out << "\n";
                }
                break;
            }
        }
    }
    return out.str();
}

std::string ResultDoc::render_json() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const Entry& e : entries_) {
        if (!first) out << ",";
        first = false;
        out << "\n  " << json_quote(e.key) << ": ";
        switch (e.kind) {
            case Kind::kText:
                out << json_quote(e.scalar);
                break;
            case Kind::kNumber:
                out << e.scalar;
                break;
            case Kind::kNames: {
                out << "[";
                for (size_t i = 0; i < e.items.size(); ++i) {
                    out << (i ? ", " : "") << json_quote(e.items[i]);
                }
                out << "]";
                break;
            }
            case Kind::kNumbers: {
                out << "[";
                for (size_t i = 0; i < e.items.size(); ++i) out << (i ? ", " : "") << e.items[i];
                out << "]";
                break;
            }
            case Kind::kMap: {
                out << "{";
                for (size_t i = 0; i < e.pairs.size(); ++i) {
                    out << (i ? ", " : "") << json_quote(e.pairs[i].first) << ": "
                        << e.pairs[i].second;
                }
                out << "}";
                break;
            }
            case Kind::kMatrix: {
                out << "[";
                for (size_t r = 0; r < e.rows.size(); ++r) {
                    out << (r ? ", " : "") << "[";
                    for (size_t c = 0; c < e.rows[r].size(); ++c) {
                        out << (c ? ", " : "") << e.rows[r][c];
                    }
                    out << "]";
                }
                out << "]";
                break;
            }
        }
    }
    out << "\n}\n";
    return out.str();
}

}  // namespace rotorlab

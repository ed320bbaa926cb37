#include "ttc/io.hpp"

#include <algorithm>
#include <sstream>

namespace ttc {

namespace {

struct Cursor {
    int line = 0;
    int col = 0;
};

[[noreturn]] void fail(const Cursor& at, const std::string& what) {
    throw structural_error("line " + std::to_string(at.line + 1) + ", column " +
                           std::to_string(at.col + 1) + ": " + what);
}

std::vector<std::string> split_words(const std::string& line, std::vector<int>& cols) {
    std::vector<std::string> words;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
        words.push_back(line.substr(start, i - start));
        cols.push_back(static_cast<int>(start));
    }
    return words;
}

std::optional<long> parse_int(const std::string& w) {
    if (w.empty()) return std::nullopt;
    size_t i = w[0] == '-' ? 1 : 0;
    if (i == w.size()) return std::nullopt;
    long value = 0;
    for (; i < w.size(); ++i) {
        if (w[i] < '0' || w[i] > '9') return std::nullopt;
        value = value * 10 + (w[i] - '0');
        if (value > 1000000000L) return std::nullopt;
    }
    return w[0] == '-' ? -value : value;
}

} // namespace

GraphDocument parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Cursor at;
    std::optional<std::string> name;
    std::optional<int> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> far;

    for (at.line = 0; std::getline(in, line); ++at.line) {
        std::vector<int> cols;
        const auto words = split_words(line, cols);
        if (words.empty()) continue;
        at.col = cols[0];
        if (words[0] == "graph") {
            if (words.size() != 2) fail(at, "expected: graph <name>");
            if (name) fail(at, "duplicate graph directive");
            name = words[1];
        } else if (words[0] == "vertices") {
            if (words.size() != 2) fail(at, "expected: vertices <n>");
            const auto n = parse_int(words[1]);
            if (!n || *n < 0) fail({at.line, cols[1]}, "bad vertex count");
            if (vertices) fail(at, "duplicate vertices directive");
            vertices = static_cast<int>(*n);
        } else if (words[0] == "edge") {
            if (words.size() != 3 && words.size() != 4) fail(at, "expected: edge <u> <v> [near|far]");
            if (!vertices) fail(at, "edge before vertices directive");
            const auto u = parse_int(words[1]);
            const auto v = parse_int(words[2]);
            if (!u || *u < 0 || *u >= *vertices) fail({at.line, cols[1]}, "vertex index out of range");
            if (!v || *v < 0 || *v >= *vertices) fail({at.line, cols[2]}, "vertex index out of range");
            if (*u == *v) fail({at.line, cols[1]}, "loop edge");
            const int lo = static_cast<int>(std::min(*u, *v));
            const int hi = static_cast<int>(std::max(*u, *v));
            for (const auto& e : edges)
                if (e.first == lo && e.second == hi) fail({at.line, cols[1]}, "duplicate edge");
            bool is_far = false;
            if (words.size() == 4) {
                if (words[3] == "far")
                    is_far = true;
                else if (words[3] != "near")
                    fail({at.line, cols[3]}, "label must be near or far");
            }
            edges.emplace_back(lo, hi);
            far.push_back(is_far);
        } else {
            fail(at, "unknown directive '" + words[0] + "'");
        }
    }
    if (!vertices) throw structural_error("missing vertices directive");

    GraphDocument doc;
    doc.name = name.value_or("g");
    doc.graph = Graph(*vertices, edges);
    doc.labeling = NearFarLabeling(doc.graph.edge_count());
    for (int e = 0; e < doc.graph.edge_count(); ++e) doc.labeling.set_far(e, far[static_cast<size_t>(e)]);
    return doc;
}

std::string serialize_graph_file(const GraphDocument& doc) {
    std::string out = "graph " + doc.name + "\n";
    out += "vertices " + std::to_string(doc.graph.vertex_count()) + "\n";
    for (int e = 0; e < doc.graph.edge_count(); ++e) {
        auto [u, v] = doc.graph.edge(e);
        out += "edge " + std::to_string(u) + " " + std::to_string(v) +
               (doc.labeling.is_far(e) ? " far\n" : " near\n");
    }
    return out;
}

ThresholdColoring parse_coloring_file(const std::string& text, int vertex_count) {
    std::istringstream in(text);
    std::string line;
    Cursor at;
    std::optional<ParamPair> pair;
    std::vector<std::optional<int>> colors(static_cast<size_t>(vertex_count));
    for (at.line = 0; std::getline(in, line); ++at.line) {
        std::vector<int> cols;
        const auto words = split_words(line, cols);
        if (words.empty()) continue;
        at.col = cols[0];
        if (words[0] == "pair") {
            if (words.size() != 2) fail(at, "expected: pair <r>,<t>");
            pair = parse_pair(words[1]);
            if (!pair) fail({at.line, cols[1]}, "bad parameter pair");
        } else if (words[0] == "color") {
            if (words.size() != 3) fail(at, "expected: color <vertex> <integer>");
            const auto v = parse_int(words[1]);
            const auto c = parse_int(words[2]);
            if (!v || *v < 0 || *v >= vertex_count) fail({at.line, cols[1]}, "vertex index out of range");
            if (!c) fail({at.line, cols[2]}, "bad color");
            if (colors[static_cast<size_t>(*v)]) fail({at.line, cols[1]}, "duplicate color line");
            colors[static_cast<size_t>(*v)] = static_cast<int>(*c);
        } else {
            fail(at, "unknown directive '" + words[0] + "'");
        }
    }
    if (!pair) throw structural_error("missing pair directive");
    ThresholdColoring col;
    col.pair = *pair;
    col.colors.resize(static_cast<size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) {
        if (!colors[static_cast<size_t>(v)])
            throw structural_error("vertex " + std::to_string(v) + " has no color");
        col.colors[static_cast<size_t>(v)] = *colors[static_cast<size_t>(v)];
    }
    return col;
}

std::string serialize_coloring_file(const ThresholdColoring& col) {
    std::string out = "pair " + col.pair.str() + "\n";
    for (size_t v = 0; v < col.colors.size(); ++v)
        out += "color " + std::to_string(v) + " " + std::to_string(col.colors[v]) + "\n";
    return out;
}

std::optional<ParamPair> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return std::nullopt;
    const auto r = parse_int(text.substr(0, comma));
    const auto t = parse_int(text.substr(comma + 1));
    if (!r || !t || *r < 1 || *t < 0) return std::nullopt;
    return ParamPair(static_cast<int>(*r), static_cast<int>(*t));
}

std::string export_dot(const GraphDocument& doc) {
    std::string out = "graph " + doc.name + " {\n";
    out += "  node [shape=circle];\n";
    for (int v = 0; v < doc.graph.vertex_count(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (int e = 0; e < doc.graph.edge_count(); ++e) {
        auto [u, v] = doc.graph.edge(e);
        out += "  " + std::to_string(u) + " -- " + std::to_string(v);
        out += doc.labeling.is_far(e) ? " [style=dashed];\n" : ";\n";
    }
    out += "}\n";
    return out;
}

std::optional<int> matches_family(const Graph& g, Family family) {
    const int nv = g.vertex_count();
    int n = 0;
    switch (family) {
    case Family::path:
    case Family::fan: n = nv - 1; break;
    case Family::cycle:
    case Family::complete: n = nv; break;
    case Family::ladder: n = nv / 2 - 1; break;
    case Family::prism:
    case Family::moebius: n = nv / 2; break;
    case Family::petersen:
    case Family::k33: n = 0; break;
    default: return std::nullopt;
    }
    Graph reference{0, {}};
    try {
        reference = build_family(family, n);
    } catch (const parameter_error&) {
        return std::nullopt;
    }
    if (reference.vertex_count() != nv || reference.edge_count() != g.edge_count())
        return std::nullopt;
    auto sorted_edges = [](const Graph& gr) {
        auto es = gr.edges();
        std::sort(es.begin(), es.end());
        return es;
    };
    if (sorted_edges(reference) != sorted_edges(g)) return std::nullopt;
    return n;
}

} // namespace ttc

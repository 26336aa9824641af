#include "holes/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace holes {

std::uint64_t Graph::edge_count() const {
    std::uint64_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return twice / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph build_graph(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("self-loop (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") is not a valid edge");
    }
    std::map<std::uint64_t, Vertex> index_of;  // ascending label -> compact index
    for (const auto& [a, b] : edges) {
        index_of.emplace(a, 0);
        index_of.emplace(b, 0);
    }
    Graph g;
    g.labels.reserve(index_of.size());
    Vertex next = 0;
    for (auto& [label, idx] : index_of) {
        idx = next++;
        g.labels.push_back(label);
    }
    g.adj.resize(index_of.size());
    for (const auto& [a, b] : edges) {
        Vertex u = index_of[a], v = index_of[b];
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

namespace {

std::uint64_t parse_label(const std::string& tok, int lineno) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(lineno,
                         "line " + std::to_string(lineno) + ": label '" + tok + "' out of range");
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(lineno, "line " + std::to_string(lineno) + ": '" + tok +
                                     "' is not a non-negative integer label");
    return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::vector<std::string> toks;
        for (std::string tok; fields >> tok;) toks.push_back(tok);
        if (toks.empty()) continue;  // blank or comment-only line
        if (toks.size() != 2)
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": expected two labels, got " +
                                         std::to_string(toks.size()));
        std::uint64_t a = parse_label(toks[0], lineno);
        std::uint64_t b = parse_label(toks[1], lineno);
        if (a == b)
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": self-loop (" +
                                         std::to_string(a) + "," + std::to_string(b) + ")");
        edges.emplace_back(a, b);
    }
    return build_graph(edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << "\n";
    if (!g.names.empty()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            out << "# vertex " << g.labels[v] << " = " << g.names[v] << "\n";
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.adj[u])
            if (u < v) out << g.labels[u] << " " << g.labels[v] << "\n";
}

}  // namespace holes

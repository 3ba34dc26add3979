#include "balclust/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace balclust {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace {

// The adjacency matrix is n^2 bits.
constexpr long long kMaxVertices = 50000;

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long number(const Token& t, int line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
    return v;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    Instance inst;
    long long m = 0;
    std::set<Pair> seen;
    std::vector<Pair> edges;
    int header_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;
        if (!have_header) {
            if (toks.size() != 5) throw ParseError(line_no, 1, "header needs 5 fields: variant n m k eta");
            auto v = parse_variant(toks[0].text);
            if (!v) throw ParseError(line_no, toks[0].column, "unknown variant '" + toks[0].text + "'");
            const long long n = number(toks[1], line_no);
            m = number(toks[2], line_no);
            const long long k = number(toks[3], line_no);
            const long long eta = number(toks[4], line_no);
            if (n < 0 || n > kMaxVertices) throw ParseError(line_no, toks[1].column, "vertex count out of range");
            if (m < 0 || m > n * (n - 1) / 2) throw ParseError(line_no, toks[2].column, "edge count out of range");
            if (k < 0 || k > 2'000'000'000) throw ParseError(line_no, toks[3].column, "k out of range");
            if (eta < 0 || eta > 2'000'000'000) throw ParseError(line_no, toks[4].column, "eta out of range");
            inst.variant = *v;
            inst.graph = Graph(static_cast<int>(n));
            inst.k = static_cast<int>(k);
            inst.eta = static_cast<int>(eta);
            have_header = true;
            header_line = line_no;
            continue;
        }
        if (toks.size() != 2) throw ParseError(line_no, 1, "edge line needs 2 fields");
        if (static_cast<long long>(edges.size()) >= m) throw ParseError(line_no, 1, "more edge lines than the header declares");
        const long long u = number(toks[0], line_no), v = number(toks[1], line_no);
        const int n = inst.graph.n();
        if (u < 0 || u >= n) throw ParseError(line_no, toks[0].column, "vertex id out of range");
        if (v < 0 || v >= n) throw ParseError(line_no, toks[1].column, "vertex id out of range");
        if (u == v) throw ParseError(line_no, toks[1].column, "self-loop");
        const Pair p = norm_pair(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(p).second) throw ParseError(line_no, toks[0].column, "duplicate edge");
        edges.push_back(p);
    }
    if (!have_header) throw ParseError(line_no + 1, 1, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no + 1, 1, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(edges.size()));
    for (auto [u, v] : edges) inst.graph.add_edge(u, v);
    if (inst.variant == Variant::BCC && !is_cluster_graph(inst.graph))
        throw ParseError(header_line, 1, "BCC instances must be cluster graphs");
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    const auto edges = inst.graph.edges();
    out << to_string(inst.variant) << ' ' << inst.graph.n() << ' ' << edges.size() << ' ' << inst.k << ' '
        << inst.eta << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_instance(inst);
}

std::string format_edits(const EditSet& f) {
    std::ostringstream out;
    bool first = true;
    for (auto [u, v] : f.additions) {
        out << (first ? "" : " ") << '+' << u << '-' << v;
        first = false;
    }
    for (auto [u, v] : f.deletions) {
        out << (first ? "" : " ") << '-' << u << '-' << v;
        first = false;
    }
    return out.str();
}

}  // namespace balclust

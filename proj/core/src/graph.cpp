#include "balclust/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace balclust {

std::vector<int> ComponentView::size_multiset() const {
    std::vector<int> out = sizes;
    std::sort(out.begin(), out.end());
    return out;
}

Graph::Graph(int n) : n_(n), w_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    bits_.assign(static_cast<std::size_t>(n_) * w_, 0);
}

Graph::Graph(int n, const std::vector<Pair>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    row_mut(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    row_mut(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
    ++m_;
    cache_.reset();
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    if (!has_edge(u, v))
        throw std::invalid_argument("missing edge " + std::to_string(u) + " " + std::to_string(v));
    row_mut(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    row_mut(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
    cache_.reset();
}

int Graph::degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int i = 0; i < w_; ++i) d += std::popcount(r[i]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int i = 0; i < w_; ++i) {
        std::uint64_t x = r[i];
        while (x) {
            out.push_back(i * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

std::vector<Pair> Graph::edges() const {
    std::vector<Pair> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

const ComponentView& Graph::components() const {
    if (!cache_) cache_ = connected_components(*this);
    return *cache_;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

std::string to_string(Variant v) {
    switch (v) {
        case Variant::BCC: return "BCC";
        case Variant::BCD: return "BCD";
        case Variant::BCE: return "BCE";
    }
    return "?";
}

std::optional<Variant> parse_variant(const std::string& s) {
    std::string u = s;
    for (auto& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u == "BCC") return Variant::BCC;
    if (u == "BCD") return Variant::BCD;
    if (u == "BCE") return Variant::BCE;
    return std::nullopt;
}

ComponentView connected_components(const Graph& g) {
    ComponentView cv;
    const int n = g.n();
    cv.comp_of.assign(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (cv.comp_of[s] != -1) continue;
        const int id = cv.count();
        cv.members.emplace_back();
        cv.comp_of[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            cv.members[id].push_back(x);
            for (int y : g.neighbors(x)) {
                if (cv.comp_of[y] == -1) {
                    cv.comp_of[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(cv.members[id].begin(), cv.members[id].end());
        cv.sizes.push_back(static_cast<int>(cv.members[id].size()));
    }
    if (!cv.sizes.empty()) {
        cv.lcomp = *std::max_element(cv.sizes.begin(), cv.sizes.end());
        cv.scomp = *std::min_element(cv.sizes.begin(), cv.sizes.end());
    }
    return cv;
}

bool is_cluster_graph(const Graph& g) {
    const auto& cv = g.components();
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != cv.sizes[cv.comp_of[v]] - 1) return false;
    return true;
}

std::optional<P3> find_induced_p3(const Graph& g) {
    const int w = g.words();
    for (int v = 0; v < g.n(); ++v) {
        const std::uint64_t* rv = g.row(v);
        for (int u : g.neighbors(v)) {
            const std::uint64_t* ru = g.row(u);
            for (int i = 0; i < w; ++i) {
                std::uint64_t x = rv[i] & ~ru[i];
                if (i == (u >> 6)) x &= ~(std::uint64_t{1} << (u & 63));
                if (x) return P3{u, v, i * 64 + std::countr_zero(x)};
            }
        }
    }
    return std::nullopt;
}

bool is_eta_balanced(const Graph& g, int eta) {
    if (g.n() == 0) return true;
    const auto& cv = g.components();
    return cv.lcomp - cv.scomp <= eta;
}

bool is_eta_blocker(const Graph& g, int component_id, int eta) {
    const auto& cv = g.components();
    if (component_id < 0 || component_id >= cv.count())
        throw std::invalid_argument("bad component id");
    const int h = cv.sizes[component_id];
    for (int c = 0; c < cv.count(); ++c)
        if (c != component_id && std::abs(h - cv.sizes[c]) > eta) return true;
    return false;
}

void check_edits(const Graph& g, const EditSet& f) {
    auto in_range = [&](const Pair& p) {
        return p.first >= 0 && p.second < g.n() && p.first < p.second;
    };
    for (const auto& p : f.additions) {
        if (!in_range(p)) throw std::invalid_argument("addition pair out of range");
        if (g.has_edge(p.first, p.second)) throw std::invalid_argument("addition is already an edge");
        if (f.deletions.count(p)) throw std::invalid_argument("pair both added and deleted");
    }
    for (const auto& p : f.deletions) {
        if (!in_range(p)) throw std::invalid_argument("deletion pair out of range");
        if (!g.has_edge(p.first, p.second)) throw std::invalid_argument("deletion is not an edge");
    }
}

Graph apply_edits(const Graph& g, const EditSet& f) {
    check_edits(g, f);
    Graph h = g;
    for (auto [u, v] : f.deletions) h.remove_edge(u, v);
    for (auto [u, v] : f.additions) h.add_edge(u, v);
    return h;
}

Graph add_edges(const Graph& g, const std::set<Pair>& pairs) {
    return apply_edits(g, EditSet{pairs, {}});
}

Graph delete_edges(const Graph& g, const std::set<Pair>& pairs) {
    return apply_edits(g, EditSet{{}, pairs});
}

EditSet edit_diff(const Graph& g, const Graph& h) {
    if (g.n() != h.n()) throw std::invalid_argument("edit_diff on graphs of different order");
    EditSet f;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool a = g.has_edge(u, v), b = h.has_edge(u, v);
            if (a && !b) f.deletions.insert({u, v});
            if (!a && b) f.additions.insert({u, v});
        }
    return f;
}

bool verify_solution(const Instance& inst, const EditSet& f) {
    if (f.size() > static_cast<std::size_t>(std::max(inst.k, 0))) return false;
    if (inst.variant == Variant::BCC && !f.deletions.empty()) return false;
    if (inst.variant == Variant::BCD && !f.additions.empty()) return false;
    Graph h;
    try {
        h = apply_edits(inst.graph, f);
    } catch (const std::invalid_argument&) {
        return false;
    }
    // Fresh components; the result never shares a cache with the input.
    ComponentView cv = connected_components(h);
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) != cv.sizes[cv.comp_of[v]] - 1) return false;
    return h.n() == 0 || cv.lcomp - cv.scomp <= inst.eta;
}

Graph remove_vertices(const Graph& g, const std::vector<int>& drop, std::vector<int>* old_to_new) {
    std::vector<char> gone(g.n(), 0);
    for (int v : drop) gone.at(v) = 1;
    std::vector<int> keep;
    std::vector<int> map(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) {
            map[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    if (old_to_new) *old_to_new = map;
    return g.induced(keep);
}

Graph cluster_graph(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("clique size must be positive");
        n += s;
    }
    Graph g(n);
    int base = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) g.add_edge(base + i, base + j);
        base += s;
    }
    return g;
}

}  // namespace balclust

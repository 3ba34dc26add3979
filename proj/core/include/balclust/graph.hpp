#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace balclust {

// Unordered vertex pair, always stored with first < second.
using Pair = std::pair<int, int>;

inline Pair norm_pair(int u, int v) { return u < v ? Pair{u, v} : Pair{v, u}; }

struct ComponentView {
    std::vector<int> comp_of;               // vertex -> component id
    std::vector<std::vector<int>> members;  // sorted vertex ids; ids ordered by smallest member
    std::vector<int> sizes;                 // sizes[c] == members[c].size()
    int lcomp = 0;
    int scomp = 0;

    int count() const { return static_cast<int>(sizes.size()); }
    // CS(G) as an ascending list.
    std::vector<int> size_multiset() const;
};

// Simple undirected graph on 0..n-1 backed by a bit matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Pair>& edges);

    int n() const { return n_; }
    std::size_t m() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<Pair> edges() const;

    // Raw adjacency row of v, words() 64-bit words long.
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * w_; }
    int words() const { return w_; }

    const ComponentView& components() const;

    // Subgraph induced by `keep` (any order); vertex keep[i] becomes i.
    Graph induced(const std::vector<int>& keep) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void check_pair(int u, int v) const;
    std::uint64_t* row_mut(int v) { return bits_.data() + static_cast<std::size_t>(v) * w_; }

    int n_ = 0;
    int w_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
    mutable std::optional<ComponentView> cache_;
};

struct P3 {
    int u, v, w;  // uv, vw edges; uw non-edge; v is the middle
};

struct EditSet {
    std::set<Pair> additions;
    std::set<Pair> deletions;

    std::size_t size() const { return additions.size() + deletions.size(); }
    bool empty() const { return additions.empty() && deletions.empty(); }
    bool operator==(const EditSet&) const = default;
};

enum class Variant { BCC, BCD, BCE };

std::string to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& s);

struct Instance {
    Graph graph;
    int k = 0;
    int eta = 0;
    Variant variant = Variant::BCE;
};

// Decision plus witness; edits are relative to the instance graph.
struct Answer {
    bool yes = false;
    EditSet edits;
};

ComponentView connected_components(const Graph& g);
bool is_cluster_graph(const Graph& g);
std::optional<P3> find_induced_p3(const Graph& g);
bool is_eta_balanced(const Graph& g, int eta);
bool is_eta_blocker(const Graph& g, int component_id, int eta);

// Throws std::invalid_argument when f does not fit g.
void check_edits(const Graph& g, const EditSet& f);
Graph apply_edits(const Graph& g, const EditSet& f);
Graph add_edges(const Graph& g, const std::set<Pair>& pairs);
Graph delete_edges(const Graph& g, const std::set<Pair>& pairs);

// The edit set turning g into h (same vertex count).
EditSet edit_diff(const Graph& g, const Graph& h);

bool verify_solution(const Instance& inst, const EditSet& f);

// Drop the given vertices; old_to_new[v] is -1 for dropped vertices.
Graph remove_vertices(const Graph& g, const std::vector<int>& drop, std::vector<int>* old_to_new);

// Disjoint cliques of the given sizes on consecutive ids.
Graph cluster_graph(const std::vector<int>& sizes);

}  // namespace balclust

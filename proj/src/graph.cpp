#include "somspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace somspec {

SimpleGraph::SimpleGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
}

size_t SimpleGraph::idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("vertex index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
}

void SimpleGraph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("loops are not allowed");
    adj_[idx(i, j)] = 1;
    adj_[idx(j, i)] = 1;
}

void SimpleGraph::remove_edge(int i, int j) {
    adj_[idx(i, j)] = 0;
    adj_[idx(j, i)] = 0;
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[idx(v, u)];
    return d;
}

long SimpleGraph::edge_count() const {
    long total = 0;
    for (uint8_t b : adj_) total += b;
    return total / 2;
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
    return d;
}

std::vector<int> SimpleGraph::sorted_degree_sequence() const {
    auto d = degrees();
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(v, u)]) out.push_back(u);
    return out;
}

bool SimpleGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<uint8_t> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
            if (adj_[idx(v, u)] && !seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
}

bool SimpleGraph::same_edges(const SimpleGraph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

bool SimpleGraph::spanning_subgraph_of(const SimpleGraph& other) const {
    if (n_ != other.n_) return false;
    for (size_t k = 0; k < adj_.size(); ++k)
        if (adj_[k] && !other.adj_[k]) return false;
    return true;
}

SimpleGraph complete_graph(int m) {
    SimpleGraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph empty_graph(int m) { return SimpleGraph(m); }

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g(a.vertex_count() + b.vertex_count());
    const int off = a.vertex_count();
    for (int i = 0; i < a.vertex_count(); ++i)
        for (int j = i + 1; j < a.vertex_count(); ++j)
            if (a.adjacent(i, j)) g.add_edge(i, j);
    for (int i = 0; i < b.vertex_count(); ++i)
        for (int j = i + 1; j < b.vertex_count(); ++j)
            if (b.adjacent(i, j)) g.add_edge(off + i, off + j);
    return g;
}

SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g = disjoint_union(a, b);
    const int off = a.vertex_count();
    for (int i = 0; i < a.vertex_count(); ++i)
        for (int j = 0; j < b.vertex_count(); ++j) g.add_edge(i, off + j);
    return g;
}

std::string kind_code(GraphKind k) {
    switch (k) {
        case GraphKind::Power: return "power";
        case GraphKind::Enhanced: return "enhanced";
        case GraphKind::Commuting: return "commuting";
    }
    throw std::logic_error("unknown graph kind");
}

std::string relation_code(Relation r) {
    switch (r) {
        case Relation::Equality: return "equality";
        case Relation::Order: return "order";
        case Relation::Conjugacy: return "conjugacy";
    }
    throw std::logic_error("unknown relation");
}

GraphKind kind_from_code(const std::string& s) {
    if (s == "power") return GraphKind::Power;
    if (s == "enhanced") return GraphKind::Enhanced;
    if (s == "commuting") return GraphKind::Commuting;
    throw std::invalid_argument("unknown graph kind '" + s + "'");
}

Relation relation_from_code(const std::string& s) {
    if (s == "equality") return Relation::Equality;
    if (s == "order") return Relation::Order;
    if (s == "conjugacy") return Relation::Conjugacy;
    throw std::invalid_argument("unknown relation '" + s + "'");
}

namespace {

std::vector<std::string> element_labels(const FiniteGroup& g) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(g.order()));
    for (const auto& x : g.elements()) labels.push_back(g.name(x));
    return labels;
}

}  // namespace

SimpleGraph power_graph(const FiniteGroup& g) {
    const int m = g.order();
    SimpleGraph out(m);
    std::vector<std::vector<uint8_t>> in_subgroup(static_cast<size_t>(m),
                                                  std::vector<uint8_t>(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j : g.cyclic_subgroup(g.element(i))) in_subgroup[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (in_subgroup[static_cast<size_t>(i)][static_cast<size_t>(j)] ||
                in_subgroup[static_cast<size_t>(j)][static_cast<size_t>(i)])
                out.add_edge(i, j);
    out.set_labels(element_labels(g));
    return out;
}

SimpleGraph enhanced_power_graph(const FiniteGroup& g) {
    // x ~ y iff some <z> contains both; scans every cyclic subgroup.
    const int m = g.order();
    SimpleGraph out(m);
    for (int z = 0; z < m; ++z) {
        auto sub = g.cyclic_subgroup(g.element(z));
        for (size_t a = 0; a < sub.size(); ++a)
            for (size_t b = a + 1; b < sub.size(); ++b) out.add_edge(sub[a], sub[b]);
    }
    out.set_labels(element_labels(g));
    return out;
}

SimpleGraph commuting_graph(const FiniteGroup& g) {
    const int m = g.order();
    SimpleGraph out(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.multiply_index(i, j) == g.multiply_index(j, i)) out.add_edge(i, j);
    out.set_labels(element_labels(g));
    return out;
}

SimpleGraph base_graph(const FiniteGroup& g, GraphKind kind) {
    switch (kind) {
        case GraphKind::Power: return power_graph(g);
        case GraphKind::Enhanced: return enhanced_power_graph(g);
        case GraphKind::Commuting: return commuting_graph(g);
    }
    throw std::logic_error("unknown graph kind");
}

VertexPartition relation_partition(const FiniteGroup& g, Relation r) {
    switch (r) {
        case Relation::Equality: return VertexPartition::singletons(g.order());
        case Relation::Order: return order_partition(g);
        case Relation::Conjugacy: return conjugacy_partition(g);
    }
    throw std::logic_error("unknown relation");
}

SimpleGraph build_group_graph(const FiniteGroup& g, GraphKind kind, Relation r) {
    SimpleGraph base = base_graph(g, kind);
    if (r == Relation::Equality) return base;
    return super_graph(base, relation_partition(g, r));
}

SimpleGraph super_graph(const SimpleGraph& base, const VertexPartition& p) {
    const int n = base.vertex_count();
    p.validate(n);
    const auto owner = p.class_of_vertex(n);
    const int k = static_cast<int>(p.classes.size());

    std::vector<uint8_t> class_adj(static_cast<size_t>(k) * static_cast<size_t>(k), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (base.adjacent(i, j)) {
                int ci = owner[static_cast<size_t>(i)], cj = owner[static_cast<size_t>(j)];
                class_adj[static_cast<size_t>(ci) * k + cj] = 1;
                class_adj[static_cast<size_t>(cj) * k + ci] = 1;
            }

    SimpleGraph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int ci = owner[static_cast<size_t>(i)], cj = owner[static_cast<size_t>(j)];
            if (ci == cj || class_adj[static_cast<size_t>(ci) * k + cj]) out.add_edge(i, j);
        }
    if (base.has_labels()) out.set_labels(base.labels());
    return out;
}

SimpleGraph compressed_graph(const SimpleGraph& base, const VertexPartition& p) {
    const int n = base.vertex_count();
    p.validate(n);
    const auto owner = p.class_of_vertex(n);
    const int k = static_cast<int>(p.classes.size());
    SimpleGraph out(k);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (base.adjacent(i, j)) {
                int ci = owner[static_cast<size_t>(i)], cj = owner[static_cast<size_t>(j)];
                if (ci != cj) out.add_edge(ci, cj);
            }
    if (base.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(static_cast<size_t>(k));
        for (const auto& cls : p.classes) {
            std::string name = "{";
            for (size_t i = 0; i < cls.size(); ++i)
                name += (i ? "," : "") + base.labels()[static_cast<size_t>(cls[i])];
            labels.push_back(name + "}");
        }
        out.set_labels(std::move(labels));
    }
    return out;
}

SimpleGraph star_skeleton_graph(int k) {
    if (k < 1) throw std::invalid_argument("star skeleton needs at least one vertex");
    SimpleGraph g(k);
    for (int i = 1; i < k; ++i) g.add_edge(0, i);
    return g;
}

SimpleGraph generalized_join(const JoinSkeleton& j) {
    const int k = j.skeleton.vertex_count();
    if (static_cast<int>(j.parts.size()) != k)
        throw std::invalid_argument("part count does not match skeleton vertex count");
    std::vector<int> offset(static_cast<size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i) {
        if (j.parts[static_cast<size_t>(i)].size < 1)
            throw std::invalid_argument("join parts must be non-empty");
        offset[static_cast<size_t>(i) + 1] = offset[static_cast<size_t>(i)] + j.parts[static_cast<size_t>(i)].size;
    }
    SimpleGraph out(offset[static_cast<size_t>(k)]);
    for (int i = 0; i < k; ++i) {
        const auto& part = j.parts[static_cast<size_t>(i)];
        if (part.complete)
            for (int a = offset[static_cast<size_t>(i)]; a < offset[static_cast<size_t>(i) + 1]; ++a)
                for (int b = a + 1; b < offset[static_cast<size_t>(i) + 1]; ++b) out.add_edge(a, b);
    }
    for (int i = 0; i < k; ++i)
        for (int j2 = i + 1; j2 < k; ++j2)
            if (j.skeleton.adjacent(i, j2))
                for (int a = offset[static_cast<size_t>(i)]; a < offset[static_cast<size_t>(i) + 1]; ++a)
                    for (int b = offset[static_cast<size_t>(j2)]; b < offset[static_cast<size_t>(j2) + 1]; ++b)
                        out.add_edge(a, b);
    return out;
}

namespace {

// Iterated neighbourhood-colour refinement; returns a colour per vertex.
std::vector<int> refine_colors(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[static_cast<size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            sig[static_cast<size_t>(v)] = {color[static_cast<size_t>(v)], std::move(nb)};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            next[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<size_t>(v)]) - sorted.begin());
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool extend_mapping(const SimpleGraph& g1, const SimpleGraph& g2, const std::vector<int>& c1,
                    const std::vector<int>& c2, std::vector<int>& map, std::vector<uint8_t>& used, int v) {
    const int n = g1.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[static_cast<size_t>(w)] || c1[static_cast<size_t>(v)] != c2[static_cast<size_t>(w)]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            ok = g1.adjacent(u, v) == g2.adjacent(map[static_cast<size_t>(u)], w);
        if (!ok) continue;
        map[static_cast<size_t>(v)] = w;
        used[static_cast<size_t>(w)] = 1;
        if (extend_mapping(g1, g2, c1, c2, map, used, v + 1)) return true;
        used[static_cast<size_t>(w)] = 0;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2) {
    constexpr int kMaxVertices = 64;
    if (g1.vertex_count() > kMaxVertices || g2.vertex_count() > kMaxVertices)
        throw std::invalid_argument("isomorphism check is capped at 64 vertices");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    if (g1.sorted_degree_sequence() != g2.sorted_degree_sequence()) return false;

    auto c1 = refine_colors(g1);
    auto c2 = refine_colors(g2);
    auto h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return false;

    std::vector<int> map(static_cast<size_t>(g1.vertex_count()), -1);
    std::vector<uint8_t> used(static_cast<size_t>(g1.vertex_count()), 0);
    return extend_mapping(g1, g2, c1, c2, map, used, 0);
}

std::string to_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << "\n";
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j)) out << "e " << i << " " << j << "\n";
    if (g.has_labels()) {
        for (int i = 0; i < g.vertex_count(); ++i) out << "l " << i << " " << g.labels()[static_cast<size_t>(i)] << "\n";
    }
    return out.str();
}

SimpleGraph from_edge_list(std::istream& in) {
    std::string tag;
    int n = -1;
    SimpleGraph g;
    std::vector<std::string> labels;
    while (in >> tag) {
        if (tag == "p") {
            if (!(in >> n) || n < 0) throw std::invalid_argument("bad 'p' line in edge list");
            g = SimpleGraph(n);
            labels.assign(static_cast<size_t>(n), "");
        } else if (tag == "e") {
            int i, j;
            if (n < 0 || !(in >> i >> j)) throw std::invalid_argument("bad 'e' line in edge list");
            g.add_edge(i, j);
        } else if (tag == "l") {
            int i;
            std::string name;
            if (n < 0 || !(in >> i >> name)) throw std::invalid_argument("bad 'l' line in edge list");
            labels.at(static_cast<size_t>(i)) = name;
        } else {
            throw std::invalid_argument("unknown edge-list tag '" + tag + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("edge list has no 'p' header");
    bool any_label = false;
    for (const auto& l : labels) any_label = any_label || !l.empty();
    if (any_label) g.set_labels(std::move(labels));
    return g;
}

SimpleGraph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

}  // namespace somspec

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "somspec/group.hpp"

namespace somspec {

// Undirected loop-free graph over indexed vertices, optionally labelled.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count);

    int vertex_count() const { return n_; }
    bool adjacent(int i, int j) const { return adj_[idx(i, j)] != 0; }
    void add_edge(int i, int j);  // throws on loops / out-of-range
    void remove_edge(int i, int j);

    int degree(int v) const;
    long edge_count() const;
    std::vector<int> degrees() const;
    std::vector<int> sorted_degree_sequence() const;
    std::vector<int> neighbors(int v) const;
    bool connected() const;  // vacuously true for the empty graph

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);  // count must equal vertex_count

    // Structural equality; labels are not compared.
    bool same_edges(const SimpleGraph& other) const;
    // True when every edge of this graph is an edge of other (same vertex count).
    bool spanning_subgraph_of(const SimpleGraph& other) const;

private:
    size_t idx(int i, int j) const;
    int n_ = 0;
    std::vector<uint8_t> adj_;
    std::vector<std::string> labels_;
};

SimpleGraph complete_graph(int m);
SimpleGraph empty_graph(int m);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b);

enum class GraphKind { Power, Enhanced, Commuting };
enum class Relation { Equality, Order, Conjugacy };

std::string kind_code(GraphKind k);      // "power", "enhanced", "commuting"
std::string relation_code(Relation r);   // "equality", "order", "conjugacy"
GraphKind kind_from_code(const std::string&);
Relation relation_from_code(const std::string&);

SimpleGraph power_graph(const FiniteGroup& g);
SimpleGraph enhanced_power_graph(const FiniteGroup& g);
SimpleGraph commuting_graph(const FiniteGroup& g);
SimpleGraph base_graph(const FiniteGroup& g, GraphKind kind);
VertexPartition relation_partition(const FiniteGroup& g, Relation r);

// Base graph of `kind` with the B-super construction applied for `r`
// (equality leaves the base untouched).
SimpleGraph build_group_graph(const FiniteGroup& g, GraphKind kind, Relation r);

// x ~ y iff same class or some cross-class pair is adjacent in the base;
// every class induces a clique.
SimpleGraph super_graph(const SimpleGraph& base, const VertexPartition& p);

// One vertex per class, adjacent iff some cross-class pair is adjacent.
SimpleGraph compressed_graph(const SimpleGraph& base, const VertexPartition& p);

struct JoinPart {
    int size;
    bool complete;  // false: empty part
};

struct JoinSkeleton {
    SimpleGraph skeleton;
    std::vector<JoinPart> parts;  // one per skeleton vertex
};

SimpleGraph star_skeleton_graph(int k);  // K_{1,k-1} with the centre at vertex 0
SimpleGraph generalized_join(const JoinSkeleton& j);

// Backtracking search with degree / neighbour-degree refinement.
// Both graphs must have at most 64 vertices.
bool is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2);

// Edge-list text format: "p <n>" header, "e <i> <j>" per edge and optional
// "l <i> <name>" label lines, all in ascending order.
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph from_edge_list(std::istream& in);
SimpleGraph from_edge_list(const std::string& text);

}  // namespace somspec

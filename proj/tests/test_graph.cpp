#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "somspec/graph.hpp"
#include "somspec/group.hpp"

using namespace somspec;

namespace {

// xorshift generator for the round-trip property test
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int uniform(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

SimpleGraph random_graph(Rng& rng, int n, int percent) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform(100) < percent) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("simple graph basics") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.connected());
    g.add_edge(2, 3);
    CHECK(g.connected());
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(g.set_labels({"a", "b"}), std::invalid_argument);
}

TEST_CASE("power graph") {
    SUBCASE("prime cyclic groups give complete graphs") {
        for (int p : {5, 7}) {
            auto g = power_graph(make_group({Family::Cyclic, p}));
            CHECK(g.same_edges(complete_graph(p)));
        }
    }
    SUBCASE("dihedral reflections are pendant at e") {
        auto grp = make_group({Family::Dihedral, 6});
        auto g = power_graph(grp);
        for (int i = 6; i < 12; ++i) {
            CHECK(g.degree(i) == 1);
            CHECK(g.adjacent(0, i));
        }
    }
    SUBCASE("quaternion reflections have degree 3") {
        auto g = power_graph(make_group({Family::GeneralizedQuaternion, 2}));
        for (int i = 4; i < 8; ++i) CHECK(g.degree(i) == 3);
    }
}

TEST_CASE("enhanced power graph") {
    SUBCASE("cyclic groups give complete graphs") {
        auto g = enhanced_power_graph(make_group({Family::Cyclic, 6}));
        CHECK(g.same_edges(complete_graph(6)));
        // the power graph of Z_6 is strictly smaller
        CHECK_FALSE(power_graph(make_group({Family::Cyclic, 6})).same_edges(complete_graph(6)));
    }
    SUBCASE("semidihedral closed neighbourhoods from the structure lemma") {
        auto grp = make_group({Family::Semidihedral, 2});
        auto g = enhanced_power_graph(grp);
        const int R = 8;
        // N[a^{2i}b] = {e, a^{2i}b}
        for (int i = 1; i <= 4; ++i) {
            int v = R + (2 * i) % R;
            CHECK(g.degree(v) == 1);
            CHECK(g.adjacent(0, v));
        }
        // N[a^{2n}] = <a> plus the odd reflections
        int hub = 4;
        for (int i = 0; i < R; ++i)
            if (i != hub) CHECK(g.adjacent(hub, i));
        for (int i = 1; i < R; i += 2) CHECK(g.adjacent(hub, R + i));
        for (int i = 0; i < R; i += 2) CHECK_FALSE(g.adjacent(hub, R + i));
    }
}

TEST_CASE("commuting graph") {
    SUBCASE("abelian groups give complete graphs") {
        auto g = commuting_graph(make_group({Family::Cyclic, 7}));
        CHECK(g.same_edges(complete_graph(7)));
    }
    SUBCASE("odd dihedral structure") {
        auto g = commuting_graph(make_group({Family::Dihedral, 5}));
        JoinSkeleton sk{star_skeleton_graph(3), {{1, true}, {4, true}, {5, false}}};
        CHECK(is_isomorphic(g, generalized_join(sk)));
    }
    SUBCASE("quaternion structure") {
        auto g = commuting_graph(make_group({Family::GeneralizedQuaternion, 3}));
        JoinSkeleton sk{star_skeleton_graph(5), {{2, true}, {4, true}, {2, true}, {2, true}, {2, true}}};
        CHECK(is_isomorphic(g, generalized_join(sk)));
    }
}

TEST_CASE("super graph") {
    auto grp = make_group({Family::Dihedral, 4});
    auto base = commuting_graph(grp);
    SUBCASE("singleton partition is the identity") {
        CHECK(super_graph(base, VertexPartition::singletons(8)).same_edges(base));
    }
    SUBCASE("one class turns the empty graph complete") {
        CHECK(super_graph(empty_graph(5), VertexPartition::one_class(5)).same_edges(complete_graph(5)));
    }
    SUBCASE("order super commuting graph of SD_16 is complete") {
        auto sd = make_group({Family::Semidihedral, 2});
        auto sup = super_graph(commuting_graph(sd), order_partition(sd));
        CHECK(sup.same_edges(complete_graph(16)));
    }
    SUBCASE("classes induce cliques and spanning holds") {
        auto p = conjugacy_partition(grp);
        auto sup = super_graph(base, p);
        CHECK(base.spanning_subgraph_of(sup));
        for (const auto& cls : p.classes)
            for (size_t i = 0; i < cls.size(); ++i)
                for (size_t j = i + 1; j < cls.size(); ++j) CHECK(sup.adjacent(cls[i], cls[j]));
    }
    SUBCASE("partition size mismatch is rejected") {
        CHECK_THROWS_AS(super_graph(base, VertexPartition::singletons(5)), std::invalid_argument);
    }
}

TEST_CASE("refinement monotonicity of super graphs") {
    for (auto spec : {GroupSpec{Family::Dihedral, 6}, GroupSpec{Family::GeneralizedQuaternion, 3}}) {
        auto grp = make_group(spec);
        for (auto kind : {GraphKind::Power, GraphKind::Enhanced, GraphKind::Commuting}) {
            auto base = base_graph(grp, kind);
            auto sc = super_graph(base, conjugacy_partition(grp));
            auto so = super_graph(base, order_partition(grp));
            CHECK(base.spanning_subgraph_of(sc));
            CHECK(sc.spanning_subgraph_of(so));
        }
    }
}

TEST_CASE("compressed graph") {
    auto grp = make_group({Family::Dihedral, 5});
    auto base = commuting_graph(grp);
    SUBCASE("singletons reproduce the base") {
        CHECK(compressed_graph(base, VertexPartition::singletons(10)).same_edges(base));
    }
    SUBCASE("three-part split of an odd dihedral commuting graph is a path") {
        VertexPartition p;
        p.classes = {{0}, {1, 2, 3, 4}, {5, 6, 7, 8, 9}};
        auto comp = compressed_graph(base, p);
        CHECK(comp.vertex_count() == 3);
        CHECK(comp.edge_count() == 2);
        CHECK(comp.adjacent(0, 1));
        CHECK(comp.adjacent(0, 2));
        CHECK_FALSE(comp.adjacent(1, 2));
        REQUIRE(comp.has_labels());
        CHECK(comp.labels()[0] == "{e}");
        CHECK(comp.labels()[1] == "{a,a^2,a^3,a^4}");
    }
    SUBCASE("super graph is the join of the compressed graph over complete parts") {
        for (auto rel : {Relation::Order, Relation::Conjugacy}) {
            auto p = relation_partition(grp, rel);
            auto sup = super_graph(base, p);
            JoinSkeleton sk{compressed_graph(base, p), {}};
            for (const auto& cls : p.classes) sk.parts.push_back({static_cast<int>(cls.size()), true});
            CHECK(is_isomorphic(sup, generalized_join(sk)));
        }
    }
    SUBCASE("connected base gives connected compression") {
        auto p = order_partition(grp);
        CHECK(base.connected());
        CHECK(compressed_graph(base, p).connected());
    }
}

TEST_CASE("generalized join") {
    SUBCASE("hand-counted example") {
        JoinSkeleton sk{star_skeleton_graph(3), {{1, true}, {2, true}, {3, false}}};
        auto g = generalized_join(sk);
        CHECK(g.vertex_count() == 6);
        CHECK(g.edge_count() == 6);
    }
    SUBCASE("all-singleton parts give back the star") {
        JoinSkeleton sk{star_skeleton_graph(5), {{1, true}, {1, true}, {1, true}, {1, true}, {1, true}}};
        CHECK(generalized_join(sk).same_edges(star_skeleton_graph(5)));
    }
    SUBCASE("commuting graph of Q_8 as a join") {
        JoinSkeleton sk{star_skeleton_graph(4), {{2, true}, {2, true}, {2, true}, {2, true}}};
        auto join_graph = generalized_join(sk);
        auto delta = commuting_graph(make_group({Family::GeneralizedQuaternion, 2}));
        CHECK(is_isomorphic(delta, join_graph));
    }
    SUBCASE("part and skeleton counts must agree") {
        JoinSkeleton sk{star_skeleton_graph(3), {{1, true}, {2, true}}};
        CHECK_THROWS_AS(generalized_join(sk), std::invalid_argument);
    }
}

TEST_CASE("isomorphism check") {
    SUBCASE("relabelled triangle") {
        SimpleGraph c3(3);
        c3.add_edge(1, 2);
        c3.add_edge(2, 0);
        c3.add_edge(0, 1);
        CHECK(is_isomorphic(complete_graph(3), c3));
    }
    SUBCASE("degree sequences filter") { CHECK_FALSE(is_isomorphic(complete_graph(4), star_skeleton_graph(4))); }
    SUBCASE("same degree sequence, different structure") {
        // C_6 vs two triangles: both 2-regular on 6 vertices
        SimpleGraph c6(6);
        for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
        auto two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
        CHECK_FALSE(is_isomorphic(c6, two_triangles));
    }
    SUBCASE("vertex cap") {
        CHECK_THROWS_AS(is_isomorphic(empty_graph(65), empty_graph(65)), std::invalid_argument);
    }
}

TEST_CASE("edge list format") {
    SUBCASE("deterministic export") {
        SimpleGraph g(3);
        g.add_edge(2, 0);
        g.add_edge(0, 1);
        g.set_labels({"e", "a", "b"});
        CHECK(to_edge_list(g) == "p 3\ne 0 1\ne 0 2\nl 0 e\nl 1 a\nl 2 b\n");
    }
    SUBCASE("round trip preserves structure and labels") {
        Rng rng;
        for (int trial = 0; trial < 20; ++trial) {
            auto g = random_graph(rng, 2 + rng.uniform(20), 40);
            auto back = from_edge_list(to_edge_list(g));
            CHECK(back.same_edges(g));
        }
        auto grp = make_group({Family::Semidihedral, 2});
        auto g = power_graph(grp);
        auto back = from_edge_list(to_edge_list(g));
        CHECK(back.same_edges(g));
        CHECK(back.labels() == g.labels());
    }
    SUBCASE("malformed input is rejected") {
        CHECK_THROWS_AS(from_edge_list(std::string("e 0 1\n")), std::invalid_argument);
        CHECK_THROWS_AS(from_edge_list(std::string("p 2\nx 0 1\n")), std::invalid_argument);
        CHECK_THROWS_AS(from_edge_list(std::string("p 2\ne 0 2\n")), std::out_of_range);
    }
}

TEST_CASE("spanning chain P <= P_E <= Delta") {
    for (auto spec : {GroupSpec{Family::Dihedral, 7}, GroupSpec{Family::GeneralizedQuaternion, 4},
                      GroupSpec{Family::Semidihedral, 3}, GroupSpec{Family::Cyclic, 12}}) {
        auto grp = make_group(spec);
        auto p = power_graph(grp);
        auto pe = enhanced_power_graph(grp);
        auto d = commuting_graph(grp);
        CHECK(p.spanning_subgraph_of(pe));
        CHECK(pe.spanning_subgraph_of(d));
    }
}

TEST_CASE("super and compressed graph properties on random inputs") {
    Rng rng;
    auto random_partition = [&](int n, int classes) {
        std::vector<std::vector<int>> buckets(static_cast<size_t>(classes));
        for (int v = 0; v < n; ++v) buckets[static_cast<size_t>(rng.uniform(classes))].push_back(v);
        VertexPartition p;
        for (auto& b : buckets)
            if (!b.empty()) p.classes.push_back(std::move(b));
        return p;
    };

    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + rng.uniform(12);
        auto base = random_graph(rng, n, 15 + rng.uniform(60));
        auto p = random_partition(n, 2 + rng.uniform(4));
        auto sup = super_graph(base, p);
        auto comp = compressed_graph(base, p);

        CHECK(base.spanning_subgraph_of(sup));
        for (const auto& cls : p.classes) {
            for (size_t a = 0; a < cls.size(); ++a) {
                CHECK(sup.degree(cls[a]) == sup.degree(cls[0]));
                for (size_t b = a + 1; b < cls.size(); ++b) CHECK(sup.adjacent(cls[a], cls[b]));
            }
        }

        JoinSkeleton sk{comp, {}};
        for (const auto& cls : p.classes) sk.parts.push_back({static_cast<int>(cls.size()), true});
        CHECK(is_isomorphic(sup, generalized_join(sk)));

        if (base.connected()) CHECK(comp.connected());

        // splitting one class off can only remove super edges
        if (p.classes[0].size() >= 2) {
            VertexPartition finer = p;
            std::vector<int> head{finer.classes[0].back()};
            finer.classes[0].pop_back();
            finer.classes.push_back(head);
            CHECK(super_graph(base, finer).spanning_subgraph_of(sup));
        }
    }
}

TEST_CASE("build_group_graph dispatch") {
    auto grp = make_group({Family::Dihedral, 3});
    CHECK(build_group_graph(grp, GraphKind::Power, Relation::Equality).same_edges(power_graph(grp)));
    auto sup = build_group_graph(grp, GraphKind::Commuting, Relation::Order);
    CHECK(sup.same_edges(super_graph(commuting_graph(grp), order_partition(grp))));
}

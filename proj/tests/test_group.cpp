#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "somspec/group.hpp"

using namespace somspec;

namespace {

GroupElement rot(int i) { return {i, false}; }
GroupElement refl(int i) { return {i, true}; }

void check_group_axioms(const FiniteGroup& g) {
    const int m = g.order();
    REQUIRE(m <= 64);
    // one materialized table for the exhaustive audit
    std::vector<int> table(static_cast<size_t>(m) * static_cast<size_t>(m));
    bool closed = true;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int ij = g.multiply_index(i, j);
            closed = closed && ij >= 0 && ij < m;
            table[static_cast<size_t>(i) * m + j] = ij;
        }
    REQUIRE(closed);
    bool associative = true;
    for (int i = 0; i < m && associative; ++i)
        for (int j = 0; j < m && associative; ++j)
            for (int k = 0; k < m; ++k) {
                int left = table[static_cast<size_t>(table[static_cast<size_t>(i) * m + j]) * m + k];
                int right = table[static_cast<size_t>(i) * m + table[static_cast<size_t>(j) * m + k]];
                if (left != right) {
                    associative = false;
                    break;
                }
            }
    CHECK(associative);
    bool neutral = true, invertible = true;
    for (int i = 0; i < m; ++i) {
        neutral = neutral && table[static_cast<size_t>(g.identity_index()) * m + i] == i &&
                  table[static_cast<size_t>(i) * m + g.identity_index()] == i;
        invertible = invertible && g.multiply(g.element(i), g.inverse(g.element(i))) == GroupElement{0, false};
    }
    CHECK(neutral);
    CHECK(invertible);
}

}  // namespace

TEST_CASE("family parameters and orders") {
    CHECK(make_group({Family::Dihedral, 3}).order() == 6);
    CHECK(make_group({Family::GeneralizedQuaternion, 2}).order() == 8);
    CHECK(make_group({Family::Semidihedral, 2}).order() == 16);
    CHECK(make_group({Family::Cyclic, 1}).order() == 1);

    CHECK_THROWS_AS(make_group({Family::Dihedral, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({Family::GeneralizedQuaternion, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({Family::Semidihedral, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({Family::Cyclic, 0}), std::invalid_argument);
}

TEST_CASE("canonical ordering") {
    auto g = make_group({Family::Dihedral, 4});
    CHECK(g.identity_index() == 0);
    CHECK(g.element(0) == rot(0));
    CHECK(g.element(3) == rot(3));
    CHECK(g.element(4) == refl(0));
    CHECK(g.element(7) == refl(3));
    CHECK(g.name(rot(0)) == "e");
    CHECK(g.name(rot(2)) == "a^2");
    CHECK(g.name(refl(0)) == "b");
    CHECK(g.name(refl(1)) == "ab");
}

TEST_CASE("normal-form multiplication") {
    SUBCASE("dihedral: b a = a^{n-1} b") {
        auto g = make_group({Family::Dihedral, 3});
        CHECK(g.multiply(refl(0), rot(1)) == refl(2));       // ba = a^2 b in D_6
        CHECK(g.multiply(rot(1), refl(0)) == refl(1));       // ab
        CHECK(g.multiply(refl(1), refl(1)) == rot(0));       // reflections are involutions
    }
    SUBCASE("quaternion: b^2 = a^n") {
        auto g = make_group({Family::GeneralizedQuaternion, 2});
        CHECK(g.multiply(refl(0), refl(0)) == rot(2));       // b^2 = a^2
        CHECK(g.multiply(refl(1), refl(1)) == rot(2));       // (ab)^2 = a^2 as well
    }
    SUBCASE("semidihedral: b a = a^{2n-1} b") {
        auto g = make_group({Family::Semidihedral, 2});
        CHECK(g.multiply(refl(0), rot(1)) == refl(3));       // ba = a^3 b at n = 2
        CHECK(g.multiply(refl(0), rot(2)) == refl(6));       // even exponents use 4n - i
    }
    SUBCASE("identity is neutral in every family") {
        for (auto spec : {GroupSpec{Family::Dihedral, 5}, GroupSpec{Family::GeneralizedQuaternion, 3},
                          GroupSpec{Family::Semidihedral, 3}, GroupSpec{Family::Cyclic, 7}}) {
            auto g = make_group(spec);
            for (int i = 0; i < g.order(); ++i) CHECK(g.multiply_index(0, i) == i);
        }
    }
}

TEST_CASE("group axioms hold exhaustively up to order 64 in every family") {
    for (int n = 3; 2 * n <= 64; ++n) check_group_axioms(make_group({Family::Dihedral, n}));
    for (int n = 2; 4 * n <= 64; ++n) check_group_axioms(make_group({Family::GeneralizedQuaternion, n}));
    for (int n = 2; 8 * n <= 64; ++n) check_group_axioms(make_group({Family::Semidihedral, n}));
    for (int n : {1, 2, 12, 64}) check_group_axioms(make_group({Family::Cyclic, n}));
}

TEST_CASE("element orders") {
    auto q = make_group({Family::GeneralizedQuaternion, 3});
    for (int i = 0; i < 2 * 3; ++i) CHECK(q.element_order(refl(i)) == 4);

    auto sd = make_group({Family::Semidihedral, 3});
    for (int i = 0; i < 2 * 3; ++i) {
        CHECK(sd.element_order(refl(2 * i)) == 2);
        CHECK(sd.element_order(refl(2 * i + 1)) == 4);
    }
    CHECK(sd.element_order(rot(0)) == 1);
}

TEST_CASE("cyclic subgroups") {
    auto d = make_group({Family::Dihedral, 5});
    for (int i = 0; i < 5; ++i) {
        auto sub = d.cyclic_subgroup(refl(i));
        CHECK(sub == std::vector<int>{0, 5 + i});
    }

    auto sd = make_group({Family::Semidihedral, 3});
    const int R = 12;
    for (int j = 0; j < 2 * 3; ++j) {
        auto sub = sd.cyclic_subgroup(refl(2 * j + 1));
        std::vector<int> expect{0, 6, R + (2 * j + 1), R + ((2 * 3 + 2 * j + 1) % R)};
        std::sort(expect.begin(), expect.end());
        CHECK(sub == expect);
    }

    auto z = make_group({Family::Cyclic, 9});
    CHECK(z.cyclic_subgroup(rot(0)) == std::vector<int>{0});
    for (int i = 0; i < z.order(); ++i)
        CHECK(static_cast<int>(z.cyclic_subgroup(rot(i)).size()) == z.element_order(rot(i)));
}

TEST_CASE("conjugacy partition matches hand listings") {
    SUBCASE("D_6") {
        auto g = make_group({Family::Dihedral, 3});
        auto p = conjugacy_partition(g);
        std::set<std::vector<int>> got(p.classes.begin(), p.classes.end());
        std::set<std::vector<int>> expect{{0}, {1, 2}, {3, 4, 5}};
        CHECK(got == expect);
    }
    SUBCASE("Q_8") {
        auto g = make_group({Family::GeneralizedQuaternion, 2});
        auto p = conjugacy_partition(g);
        std::set<std::vector<int>> got(p.classes.begin(), p.classes.end());
        std::set<std::vector<int>> expect{{0}, {2}, {1, 3}, {4, 6}, {5, 7}};
        CHECK(got == expect);
    }
    SUBCASE("cyclic groups are all singletons") {
        auto g = make_group({Family::Cyclic, 8});
        CHECK(conjugacy_partition(g).classes.size() == 8);
    }
}

TEST_CASE("conjugacy class counting for odd dihedral") {
    for (int n : {3, 5, 7, 9}) {
        auto g = make_group({Family::Dihedral, n});
        auto p = conjugacy_partition(g);
        int pairs = 0, big = 0, single = 0;
        for (const auto& cls : p.classes) {
            if (cls.size() == 1) ++single;
            if (cls.size() == 2) ++pairs;
            if (static_cast<int>(cls.size()) == n) ++big;
        }
        CHECK(single == 1);
        CHECK(pairs == (n - 1) / 2);
        CHECK(big == 1);
    }
}

TEST_CASE("partition invariants") {
    for (auto spec : {GroupSpec{Family::Dihedral, 6}, GroupSpec{Family::GeneralizedQuaternion, 3},
                      GroupSpec{Family::Semidihedral, 2}}) {
        auto g = make_group(spec);
        auto p = conjugacy_partition(g);
        int total = 0;
        std::vector<int> singles;
        for (const auto& cls : p.classes) {
            total += static_cast<int>(cls.size());
            CHECK(g.order() % static_cast<int>(cls.size()) == 0);
            if (cls.size() == 1) singles.push_back(cls[0]);
        }
        CHECK(total == g.order());
        std::sort(singles.begin(), singles.end());
        CHECK(singles == center(g));

        // conjugacy refines order
        for (const auto& cls : p.classes)
            for (int v : cls) CHECK(g.element_order(g.element(v)) == g.element_order(g.element(cls[0])));
    }
}

TEST_CASE("order partition") {
    SUBCASE("D_6 fibers") {
        auto g = make_group({Family::Dihedral, 3});
        auto p = order_partition(g);
        std::set<std::vector<int>> got(p.classes.begin(), p.classes.end());
        std::set<std::vector<int>> expect{{0}, {3, 4, 5}, {1, 2}};
        CHECK(got == expect);
    }
    SUBCASE("Z_2") {
        auto g = make_group({Family::Cyclic, 2});
        CHECK(order_partition(g).classes.size() == 2);
    }
    SUBCASE("SD_16 order-2 class is a^4 plus the even reflections") {
        auto g = make_group({Family::Semidihedral, 2});
        auto p = order_partition(g);
        std::vector<int> expect{4, 8, 10, 12, 14};
        bool found = false;
        for (const auto& cls : p.classes) found = found || cls == expect;
        CHECK(found);
    }
}

TEST_CASE("centers") {
    CHECK(center(make_group({Family::Semidihedral, 2})) == std::vector<int>{0, 4});
    CHECK(center(make_group({Family::Semidihedral, 4})) == std::vector<int>{0, 8});
    CHECK(center(make_group({Family::Semidihedral, 3})) == std::vector<int>{0, 3, 6, 9});
    CHECK(center(make_group({Family::Cyclic, 6})).size() == 6);
    CHECK(center(make_group({Family::GeneralizedQuaternion, 3})) == std::vector<int>{0, 3});
}

TEST_CASE("vertex partition validation") {
    VertexPartition p;
    p.classes = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(p.validate(3), std::invalid_argument);
    p.classes = {{0}, {2}};
    CHECK_THROWS_AS(p.validate(3), std::invalid_argument);
    p.classes = {{0, 1, 2}, {}};
    CHECK_THROWS_AS(p.validate(3), std::invalid_argument);
    p.classes = {{2, 0}, {1}};
    CHECK_NOTHROW(p.validate(3));
    CHECK(VertexPartition::singletons(4).classes.size() == 4);
    CHECK(VertexPartition::one_class(4).classes.size() == 1);
}

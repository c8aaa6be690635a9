#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "somspec/graph.hpp"
#include "somspec/group.hpp"
#include "somspec/spectral.hpp"

using namespace somspec;

namespace {

const double R2 = std::sqrt(2.0);

struct Rng {
    uint64_t s = 0x2545f4914f6cdd1dull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double sym() { return static_cast<double>(next() % 2000) / 100.0 - 10.0; }
    int uniform(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

RealSymMatrix random_sym(Rng& rng, int dim) {
    RealSymMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) m.set(i, j, rng.sym());
    return m;
}

double reconstruction_error(const RealSymMatrix& a, const EigenDecomposition& ed) {
    const int n = a.dim();
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += ed.vectors[static_cast<size_t>(k) * n + i] * ed.values[static_cast<size_t>(k)] *
                     ed.vectors[static_cast<size_t>(k) * n + j];
            double d = s - a.at(i, j);
            err += d * d;
        }
    }
    return std::sqrt(err);
}

}  // namespace

TEST_CASE("sombor matrix assembly") {
    SUBCASE("K_2") {
        auto m = sombor_matrix(complete_graph(2));
        CHECK(m.at(0, 1) == doctest::Approx(R2).epsilon(1e-15));
        CHECK(m.at(0, 0) == 0.0);
    }
    SUBCASE("K_m is (m-1)sqrt(2) off the diagonal") {
        auto m = sombor_matrix(complete_graph(5));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK(m.at(i, j) == doctest::Approx(i == j ? 0.0 : 4 * R2).epsilon(1e-15));
    }
    SUBCASE("commuting graph of D_6 mixes degrees 5 and 2") {
        auto g = commuting_graph(make_group({Family::Dihedral, 3}));
        auto m = sombor_matrix(g);
        CHECK(m.at(0, 1) == doctest::Approx(std::sqrt(29.0)).epsilon(1e-15));   // e ~ a
        CHECK(m.at(0, 3) == doctest::Approx(std::sqrt(26.0)).epsilon(1e-15));   // e ~ b
        CHECK(m.at(1, 2) == doctest::Approx(2 * R2).epsilon(1e-15));            // a ~ a^2
        CHECK(m.at(3, 4) == 0.0);
    }
}

TEST_CASE("jacobi eigensolver") {
    SUBCASE("diagonal input comes back sorted") {
        RealSymMatrix m(4);
        m.set(0, 0, 3.0);
        m.set(1, 1, -1.0);
        m.set(2, 2, 7.0);
        m.set(3, 3, 0.5);
        auto eigs = eigen_sym(m);
        CHECK(eigs == std::vector<double>{-1.0, 0.5, 3.0, 7.0});
    }
    SUBCASE("complete-graph spectrum") {
        auto eigs = eigen_sym(sombor_matrix(complete_graph(3)));
        CHECK(eigs[0] == doctest::Approx(-2 * R2).epsilon(1e-12));
        CHECK(eigs[1] == doctest::Approx(-2 * R2).epsilon(1e-12));
        CHECK(eigs[2] == doctest::Approx(4 * R2).epsilon(1e-12));
    }
    SUBCASE("trace and Frobenius identities on Delta(D_6)") {
        auto g = commuting_graph(make_group({Family::Dihedral, 3}));
        auto eigs = eigen_sym(sombor_matrix(g));
        double sum = 0.0, sq = 0.0;
        for (double e : eigs) {
            sum += e;
            sq += e * e;
        }
        CHECK(std::abs(sum) < 1e-10);
        CHECK(sq == doctest::Approx(288.0).epsilon(1e-12));
    }
    SUBCASE("reconstruction from accumulated rotations") {
        Rng rng;
        for (int trial = 0; trial < 25; ++trial) {
            int dim = 2 + rng.uniform(31);
            auto a = random_sym(rng, dim);
            auto ed = eigen_sym_full(a);
            double scale = std::max(1.0, a.frobenius_norm());
            CHECK(reconstruction_error(a, ed) <= 1e-8 * scale);
        }
    }
    SUBCASE("unreachable tolerance raises a diagnostics error") {
        Rng rng;
        auto a = random_sym(rng, 8);
        try {
            eigen_sym(a, 1e-300);
            FAIL("expected ConvergenceError");
        } catch (const ConvergenceError& e) {
            CHECK(e.off_diagonal_residual >= 0.0);
        }
    }
    CHECK_THROWS_AS(eigen_sym(RealSymMatrix(2), 0.0), std::invalid_argument);
}

TEST_CASE("spectrum clustering") {
    SUBCASE("nearby values merge") {
        auto s = cluster_spectrum({1.0, 1.0 + 1e-12, 5.0}, 1e-9);
        REQUIRE(s.pairs.size() == 2);
        CHECK(s.pairs[0].value == doctest::Approx(1.0));
        CHECK(s.pairs[0].multiplicity == 2);
        CHECK(s.pairs[1].multiplicity == 1);
        CHECK(s.dim == 3);
    }
    SUBCASE("K_8 clusters into two levels") {
        auto eigs = eigen_sym(sombor_matrix(complete_graph(8)));
        auto s = cluster_spectrum(eigs, 1e-6);
        REQUIRE(s.pairs.size() == 2);
        CHECK(s.pairs[0].value == doctest::Approx(-7 * R2).epsilon(1e-12));
        CHECK(s.pairs[0].multiplicity == 7);
        CHECK(s.pairs[1].value == doctest::Approx(49 * R2).epsilon(1e-12));
        CHECK(s.pairs[1].multiplicity == 1);
    }
    SUBCASE("empty input") { CHECK(cluster_spectrum({}, 1e-9).pairs.empty()); }
    SUBCASE("descending input is rejected") {
        CHECK_THROWS_AS(cluster_spectrum({2.0, 1.0}, 1e-9), std::invalid_argument);
    }
}

TEST_CASE("equitable quotient") {
    SUBCASE("K_4 under a two-block split") {
        VertexPartition p;
        p.classes = {{0, 1}, {2, 3}};
        auto q = equitable_quotient(sombor_matrix(complete_graph(4)), p, 1e-12);
        CHECK(q.equitable);
        CHECK(q.at(0, 0) == doctest::Approx(3 * R2).epsilon(1e-14));
        CHECK(q.at(0, 1) == doctest::Approx(6 * R2).epsilon(1e-14));
        CHECK(q.at(1, 0) == doctest::Approx(6 * R2).epsilon(1e-14));
        CHECK(q.at(1, 1) == doctest::Approx(3 * R2).epsilon(1e-14));
    }
    SUBCASE("singleton partition reproduces the matrix") {
        auto g = commuting_graph(make_group({Family::Dihedral, 3}));
        auto m = sombor_matrix(g);
        auto q = equitable_quotient(m, VertexPartition::singletons(6), 1e-12);
        CHECK(q.equitable);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) CHECK(q.at(i, j) == doctest::Approx(m.at(i, j)));
    }
    SUBCASE("non-equitable partitions are reported, not rejected") {
        SimpleGraph path(4);
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        path.add_edge(2, 3);
        VertexPartition p;
        p.classes = {{0, 1}, {2, 3}};
        auto q = equitable_quotient(sombor_matrix(path), p, 1e-12);
        CHECK_FALSE(q.equitable);
        CHECK(q.max_row_sum_deviation > 0.1);
    }
    SUBCASE("quotient eigenvalues of the odd-dihedral three-block split embed in the spectrum") {
        auto g = commuting_graph(make_group({Family::Dihedral, 5}));
        auto m = sombor_matrix(g);
        VertexPartition p;
        p.classes = {{0}, {1, 2, 3, 4}, {5, 6, 7, 8, 9}};
        auto q = equitable_quotient(m, p, 1e-9);
        REQUIRE(q.equitable);
        auto qeigs = quotient_eigenvalues(q);
        auto full = eigen_sym(m);
        for (double qe : qeigs) {
            double best = 1e300;
            for (double fe : full) best = std::min(best, std::abs(fe - qe));
            CHECK(best < 1e-7 * 60.0);
        }
    }
    SUBCASE("balanced form of an n_j-weighted quotient is symmetric") {
        QuotientMatrix q;
        q.dim = 2;
        q.class_sizes = {1, 4};
        q.entries = {0.0, 4.0 * 5.0, 1.0 * 5.0, 3.0};
        auto b = balanced_quotient(q);
        REQUIRE(b.has_value());
        CHECK(b->at(0, 1) == doctest::Approx(10.0));  // 5 * sqrt(4)
        auto eigs = quotient_eigenvalues(q);
        // analytic eigenvalues of [[0, 20], [5, 3]]
        double disc = std::sqrt(9.0 + 400.0);
        CHECK(eigs[0] == doctest::Approx((3.0 - disc) / 2).epsilon(1e-12));
        CHECK(eigs[1] == doctest::Approx((3.0 + disc) / 2).epsilon(1e-12));
    }
    CHECK_THROWS_AS(equitable_quotient(RealSymMatrix(3), VertexPartition::singletons(2), 1e-9),
                    std::invalid_argument);
}

TEST_CASE("characteristic polynomial") {
    SUBCASE("S(K_2) gives x^2 - 2") {
        auto c = char_poly(sombor_matrix(complete_graph(2)));
        REQUIRE(c.size() == 3);
        CHECK(c[0] == doctest::Approx(1.0));
        CHECK(c[1] == doctest::Approx(0.0));
        CHECK(c[2] == doctest::Approx(-2.0).epsilon(1e-14));
    }
    SUBCASE("S(K_3) gives x^3 - 24x - 32sqrt(2)") {
        auto c = char_poly(sombor_matrix(complete_graph(3)));
        REQUIRE(c.size() == 4);
        CHECK(c[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(c[2] == doctest::Approx(-24.0).epsilon(1e-12));
        CHECK(c[3] == doctest::Approx(-32 * R2).epsilon(1e-12));
    }
    SUBCASE("three-block quotient of Delta(D_6) matches the known cubic") {
        auto m = sombor_matrix(commuting_graph(make_group({Family::Dihedral, 3})));
        VertexPartition p;
        p.classes = {{0}, {1, 2}, {3, 4, 5}};
        auto q = equitable_quotient(m, p, 1e-9);
        REQUIRE(q.equitable);
        auto b = balanced_quotient(q);
        REQUIRE(b.has_value());
        auto c = char_poly(*b);
        REQUIRE(c.size() == 4);
        CHECK(c[1] == doctest::Approx(-2 * R2).epsilon(1e-10));
        CHECK(c[2] == doctest::Approx(-136.0).epsilon(1e-10));
        CHECK(c[3] == doctest::Approx(156 * R2).epsilon(1e-10));
    }
    SUBCASE("roots annihilate the polynomial for random matrices") {
        Rng rng;
        for (int trial = 0; trial < 10; ++trial) {
            int dim = 2 + rng.uniform(11);
            auto a = random_sym(rng, dim);
            auto coeffs = char_poly(a);
            double scale = 1.0;
            for (double c : coeffs) scale = std::max(scale, std::abs(c));
            for (double e : eigen_sym(a)) {
                double value = eval_poly(coeffs, e);
                double at_scale = scale * std::max(1.0, std::pow(std::abs(e), dim));
                CHECK(std::abs(value) <= 1e-6 * at_scale);
            }
        }
    }
    SUBCASE("dimension cap") { CHECK_THROWS_AS(char_poly(RealSymMatrix(33)), std::invalid_argument); }
}

TEST_CASE("polynomial evaluation") {
    std::vector<double> quad{1.0, 0.0, -2.0};
    CHECK(eval_poly(quad, R2) == doctest::Approx(0.0).epsilon(1e-14));
    std::vector<double> identity{1.0, 0.0};
    CHECK(eval_poly(identity, 5.0) == 5.0);
    std::vector<double> cubic{2.0, -3.0, 0.0, 1.0};  // 2x^3 - 3x^2 + 1
    CHECK(eval_poly(cubic, 2.0) == doctest::Approx(5.0));
}

TEST_CASE("shared-neighbourhood eigenvalue prediction") {
    SUBCASE("independent reflections of a dihedral power graph") {
        auto grp = make_group({Family::Dihedral, 5});
        auto g = power_graph(grp);
        std::vector<int> reflections{5, 6, 7, 8, 9};
        auto pred = lemma21_predict(g, reflections);
        REQUIRE(pred.has_value());
        CHECK(pred->eigenvalue == 0.0);
        CHECK(pred->min_multiplicity == 4);
    }
    SUBCASE("two-clique in K_2") {
        auto pred = lemma21_predict(complete_graph(2), {0, 1});
        REQUIRE(pred.has_value());
        CHECK(pred->eigenvalue == doctest::Approx(-R2));
        CHECK(pred->min_multiplicity == 1);
    }
    SUBCASE("reflection pairs of a quaternion power graph") {
        auto grp = make_group({Family::GeneralizedQuaternion, 3});
        auto g = power_graph(grp);
        const int R = 6;
        for (int i = 0; i < 3; ++i) {
            auto pred = lemma21_predict(g, {R + i, R + i + 3});
            REQUIRE(pred.has_value());
            CHECK(pred->eigenvalue == doctest::Approx(-3 * R2));
            CHECK(pred->min_multiplicity == 1);
        }
    }
    SUBCASE("mixed sets predict nothing") {
        SimpleGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(3, 0);
        g.add_edge(3, 1);
        g.add_edge(3, 2);
        CHECK_FALSE(lemma21_predict(g, {0, 1, 2}).has_value());
    }
    SUBCASE("differing external neighbourhoods are a reported error") {
        SimpleGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        CHECK_THROWS_AS(lemma21_predict(g, {1, 3}), std::invalid_argument);
    }
}

TEST_CASE("matrix csv export") {
    RealSymMatrix m(2);
    m.set(0, 1, R2);
    auto text = to_csv(m);
    CHECK(text.substr(0, 2) == "2\n");
    CHECK(text.find("1.4142135623730951") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

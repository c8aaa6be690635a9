#include "somspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "json.hpp"

namespace somspec {

namespace {

constexpr double kQuotientSubsetRel = 1e-7;  // quotient eigenvalues vs oracle

double round12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

struct Leftovers {
    std::vector<double> values;
    std::vector<int> remaining;

    int total() const {
        int t = 0;
        for (int r : remaining) t += r;
        return t;
    }
};

// Consume up to `want` eigenvalues near `value`, nearest cluster first.
int consume(Leftovers& left, double value, int want, double tol) {
    int got = 0;
    while (got < want) {
        int best = -1;
        double best_dist = tol;
        for (size_t i = 0; i < left.values.size(); ++i) {
            if (left.remaining[i] <= 0) continue;
            double dist = std::abs(left.values[i] - value);
            if (dist <= best_dist) {
                best = static_cast<int>(i);
                best_dist = dist;
            }
        }
        if (best < 0) break;
        int take = std::min(want - got, left.remaining[static_cast<size_t>(best)]);
        left.remaining[static_cast<size_t>(best)] -= take;
        got += take;
    }
    return got;
}

int observed_multiplicity(const SpectrumSummary& oracle, double value, double tol) {
    int total = 0;
    for (const auto& c : oracle.pairs)
        if (std::abs(c.value - value) <= tol) total += c.multiplicity;
    return total;
}

double poly_eval_scale(const std::vector<double>& coeffs, double x) {
    double scale = 1.0, px = 1.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        scale += std::abs(*it) * px;
        px *= std::abs(x);
    }
    return scale;
}

}  // namespace

std::string status_code(ReportStatus s) {
    switch (s) {
        case ReportStatus::Pass: return "Pass";
        case ReportStatus::Flagged: return "Flagged";
        case ReportStatus::NotCovered: return "NotCovered";
    }
    return "?";
}

std::string format_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

VerificationReport run_task_with(const VerificationTask& t, const ClosedFormPrediction& prediction) {
    VerificationReport r;
    r.task = t;
    r.covered = true;
    r.source_id = prediction.source_id;
    r.alternate = prediction.alternate;
    r.suspect = prediction.suspect;

    auto group = make_group({t.family, t.n});
    auto graph = build_group_graph(group, t.kind, t.relation);
    r.graph_order = graph.vertex_count();
    r.graph_size = graph.edge_count();
    r.degree_sequence = graph.sorted_degree_sequence();

    auto S = sombor_matrix(graph);
    auto eigs = eigen_sym(S, t.tol.eigen_tol);
    double radius_estimate = std::max(1.0, S.max_abs_row_sum());
    r.oracle = cluster_spectrum(eigs, t.tol.cluster_tol_rel * radius_estimate);
    for (double e : eigs) r.spectral_radius = std::max(r.spectral_radius, std::abs(e));

    // trace and Frobenius identities against the graph
    double eig_sum = 0.0, eig_sq = 0.0;
    for (double e : eigs) {
        eig_sum += e;
        eig_sq += e * e;
    }
    double max_entry = 0.0;
    double frob_expected = 0.0;
    const auto deg = graph.degrees();
    for (int i = 0; i < graph.vertex_count(); ++i)
        for (int j = i + 1; j < graph.vertex_count(); ++j)
            if (graph.adjacent(i, j)) {
                double w2 = static_cast<double>(deg[static_cast<size_t>(i)]) * deg[static_cast<size_t>(i)] +
                            static_cast<double>(deg[static_cast<size_t>(j)]) * deg[static_cast<size_t>(j)];
                frob_expected += 2.0 * w2;
                max_entry = std::max(max_entry, std::sqrt(w2));
            }
    r.trace_residual = graph.vertex_count() == 0 || max_entry == 0.0
                           ? 0.0
                           : std::abs(eig_sum) / (graph.vertex_count() * max_entry);
    r.frobenius_residual = frob_expected == 0.0 ? 0.0 : std::abs(eig_sq - frob_expected) / frob_expected;

    const double scale = std::max(1.0, r.spectral_radius);
    const double match_tol = t.tol.match_tol_rel * scale;

    for (size_t i = 1; i < r.oracle.pairs.size(); ++i)
        if (r.oracle.pairs[i].value - r.oracle.pairs[i - 1].value <= 2.0 * match_tol)
            r.gap_assertion = false;

    Leftovers left;
    for (const auto& c : r.oracle.pairs) {
        left.values.push_back(c.value);
        left.remaining.push_back(c.multiplicity);
    }

    bool claims_ok = true;
    bool has_exact = false;
    for (const auto& claim : prediction.claims) {
        ClaimVerdict v;
        v.claim = claim;
        if (claim.at_least) {
            v.observed = observed_multiplicity(r.oracle, claim.value, match_tol);
            v.status = v.observed >= claim.multiplicity ? ClaimStatus::BoundMet : ClaimStatus::BoundShort;
        } else {
            has_exact = true;
            v.observed = consume(left, claim.value, claim.multiplicity, match_tol);
            if (v.observed == 0 && claim.multiplicity > 0)
                v.status = ClaimStatus::ValueMissing;
            else if (v.observed < claim.multiplicity)
                v.status = ClaimStatus::MultiplicityShort;
            else
                v.status = ClaimStatus::Matched;
        }
        // nearest oracle value, for the report
        double best = 0.0, best_dist = -1.0;
        for (const auto& c : r.oracle.pairs) {
            double dist = std::abs(c.value - claim.value);
            if (best_dist < 0.0 || dist < best_dist) {
                best_dist = dist;
                best = c.value;
            }
        }
        v.matched_value = best;
        claims_ok = claims_ok && v.ok();
        r.claims.push_back(v);
    }

    r.residual.kind = prediction.residual.kind;
    r.residual.leftover_count = left.total();
    switch (prediction.residual.kind) {
        case ResidualKind::None:
            if (has_exact) {
                r.residual.expected_leftovers = 0;
                r.residual.ok = left.total() == 0;
                if (!r.residual.ok) r.residual.note = "unclaimed eigenvalues remain";
            } else {
                r.residual.note = "lower-bound claims only; no residual accounting";
            }
            break;
        case ResidualKind::Polynomial: {
            const auto& poly = prediction.residual.poly;
            r.residual.expected_leftovers = static_cast<int>(poly.size()) - 1;
            bool count_ok = left.total() == r.residual.expected_leftovers;
            bool roots_ok = true;
            for (size_t i = 0; i < left.values.size(); ++i) {
                if (left.remaining[i] <= 0) continue;
                double val = std::abs(eval_poly(poly, left.values[i])) / poly_eval_scale(poly, left.values[i]);
                r.residual.max_poly_residual = std::max(r.residual.max_poly_residual, val);
                if (val > 1e-6) roots_ok = false;
                left.remaining[i] = 0;
            }
            r.residual.ok = count_ok && roots_ok;
            if (!count_ok)
                r.residual.note = "leftover count differs from residual degree";
            else if (!roots_ok)
                r.residual.note = "a leftover eigenvalue does not annihilate the residual polynomial";
            break;
        }
        case ResidualKind::Quotient: {
            auto qeigs = quotient_eigenvalues(prediction.residual.quotient.as_quotient(), t.tol.eigen_tol);
            r.residual.expected_leftovers = static_cast<int>(qeigs.size());
            bool count_ok = left.total() == r.residual.expected_leftovers;
            bool all_matched = true;
            const double qtol = kQuotientSubsetRel * scale;
            for (double q : qeigs) {
                int best = -1;
                double best_dist = -1.0;
                for (size_t i = 0; i < left.values.size(); ++i) {
                    if (left.remaining[i] <= 0) continue;
                    double dist = std::abs(left.values[i] - q);
                    if (best < 0 || dist < best_dist) {
                        best = static_cast<int>(i);
                        best_dist = dist;
                    }
                }
                if (best < 0 || best_dist > qtol) {
                    all_matched = false;
                    if (best >= 0) r.residual.max_quotient_mismatch =
                        std::max(r.residual.max_quotient_mismatch, best_dist);
                    continue;
                }
                left.remaining[static_cast<size_t>(best)] -= 1;
                r.residual.max_quotient_mismatch = std::max(r.residual.max_quotient_mismatch, best_dist);
            }
            r.residual.ok = count_ok && all_matched;
            if (!count_ok)
                r.residual.note = "leftover count differs from quotient dimension";
            else if (!all_matched)
                r.residual.note = "a quotient eigenvalue has no oracle eigenvalue within tolerance";
            break;
        }
    }

    r.accounting_ok = !has_exact || left.total() == 0;
    r.status = (claims_ok && r.residual.ok && r.accounting_ok) ? ReportStatus::Pass : ReportStatus::Flagged;

    // round for byte-stable serialization
    for (auto& c : r.oracle.pairs) c.value = round12(c.value);
    r.spectral_radius = round12(r.spectral_radius);
    r.trace_residual = round12(r.trace_residual);
    r.frobenius_residual = round12(r.frobenius_residual);
    r.residual.max_poly_residual = round12(r.residual.max_poly_residual);
    r.residual.max_quotient_mismatch = round12(r.residual.max_quotient_mismatch);
    for (auto& v : r.claims) {
        v.claim.value = round12(v.claim.value);
        v.matched_value = round12(v.matched_value);
    }
    return r;
}

VerificationReport run_task(const VerificationTask& t) {
    auto predictions = predictions_for(t.family, t.kind, t.relation, t.n);
    if (predictions.empty()) {
        VerificationReport r;
        r.task = t;
        r.covered = false;
        r.status = ReportStatus::NotCovered;
        auto group = make_group({t.family, t.n});
        auto graph = build_group_graph(group, t.kind, t.relation);
        r.graph_order = graph.vertex_count();
        r.graph_size = graph.edge_count();
        r.degree_sequence = graph.sorted_degree_sequence();
        return r;
    }
    return run_task_with(t, predictions.front());
}

SuiteResult run_suite(const std::vector<Family>& families, int n_min, int n_max,
                      const std::vector<GraphKind>& kinds, const std::vector<Relation>& relations,
                      const Tolerances& tol) {
    SuiteResult out;
    for (Family f : families) {
        for (int n = std::max(n_min, family_min_n(f)); n <= n_max; ++n) {
            for (GraphKind k : kinds) {
                for (Relation r : relations) {
                    VerificationTask task{f, k, r, n, tol};
                    auto predictions = predictions_for(f, k, r, n);
                    if (predictions.empty()) {
                        out.reports.push_back(run_task(task));
                        ++out.not_covered;
                        continue;
                    }
                    for (const auto& p : predictions) {
                        auto report = run_task_with(task, p);
                        if (report.status == ReportStatus::Pass)
                            ++out.pass;
                        else
                            ++out.flagged;
                        out.reports.push_back(std::move(report));
                    }
                }
            }
        }
    }
    return out;
}

std::vector<std::string> flagged_keys(const SuiteResult& suite) {
    std::vector<std::string> keys;
    for (const auto& r : suite.reports) {
        if (r.status != ReportStatus::Flagged) continue;
        keys.push_back(family_code(r.task.family) + ":" + kind_code(r.task.kind) + ":" +
                       relation_code(r.task.relation) + ":" + std::to_string(r.task.n) + ":" + r.source_id);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

// ---------------------------------------------------------------------------
// structural suite
// ---------------------------------------------------------------------------

namespace {

SimpleGraph star_join(const std::vector<JoinPart>& parts) {
    JoinSkeleton sk{star_skeleton_graph(static_cast<int>(parts.size())), parts};
    return generalized_join(sk);
}

std::vector<int> sorted_closed_neighborhood(const SimpleGraph& g, int v) {
    auto nb = g.neighbors(v);
    nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    return nb;
}

std::set<std::vector<int>> partition_as_set(const VertexPartition& p) {
    std::set<std::vector<int>> out;
    for (auto cls : p.classes) {
        std::sort(cls.begin(), cls.end());
        out.insert(cls);
    }
    return out;
}

struct Checker {
    StructuralReport* report;
    std::string prefix;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        report->checks.push_back({prefix + name, ok, detail});
        if (!ok) ++report->failures;
    }
};

// Hand-enumerated conjugacy classes of each family, as index sets.
VertexPartition expected_conjugacy(const FiniteGroup& g) {
    const Family f = g.spec().family;
    const int n = g.spec().n;
    const int R = g.rotation_order();
    VertexPartition p;
    auto rot = [&](int i) { return ((i % R) + R) % R; };
    auto refl = [&](int i) { return R + rot(i); };
    if (f == Family::Dihedral) {
        p.classes.push_back({0});
        if (n % 2 == 1) {
            for (int i = 1; i <= (n - 1) / 2; ++i) p.classes.push_back({rot(i), rot(n - i)});
            std::vector<int> refls;
            for (int i = 0; i < n; ++i) refls.push_back(refl(i));
            p.classes.push_back(refls);
        } else {
            p.classes.push_back({rot(n / 2)});
            for (int i = 1; i <= (n - 2) / 2; ++i) p.classes.push_back({rot(i), rot(n - i)});
            std::vector<int> evens, odds;
            for (int i = 0; i < n; i += 2) evens.push_back(refl(i));
            for (int i = 1; i < n; i += 2) odds.push_back(refl(i));
            p.classes.push_back(evens);
            p.classes.push_back(odds);
        }
    } else if (f == Family::GeneralizedQuaternion) {
        p.classes.push_back({0});
        p.classes.push_back({rot(n)});
        for (int i = 1; i < n; ++i) p.classes.push_back({rot(i), rot(2 * n - i)});
        std::vector<int> evens, odds;
        for (int i = 0; i < 2 * n; i += 2) evens.push_back(refl(i));
        for (int i = 1; i < 2 * n; i += 2) odds.push_back(refl(i));
        p.classes.push_back(evens);
        p.classes.push_back(odds);
    } else if (f == Family::Semidihedral) {
        p.classes.push_back({0});
        p.classes.push_back({rot(2 * n)});
        std::set<int> done{0, rot(2 * n)};
        if (n % 2 == 1) {
            p.classes.push_back({rot(n)});
            p.classes.push_back({rot(3 * n)});
            done.insert(rot(n));
            done.insert(rot(3 * n));
        }
        for (int i = 1; i < 4 * n; ++i) {
            if (done.count(rot(i))) continue;
            int partner = (i % 2 == 0) ? rot(4 * n - i) : rot(2 * n - i);
            std::vector<int> cls{rot(i), partner};
            std::sort(cls.begin(), cls.end());
            p.classes.push_back(cls);
            done.insert(rot(i));
            done.insert(partner);
        }
        const int step = (n % 2 == 1) ? 4 : 2;
        for (int r0 = 0; r0 < step; ++r0) {
            std::vector<int> cls;
            for (int i = r0; i < 4 * n; i += step) cls.push_back(refl(i));
            p.classes.push_back(cls);
        }
    } else {
        return VertexPartition::singletons(g.order());
    }
    return p;
}

void check_family_at_n(Checker& c, Family f, int n) {
    auto g = make_group({f, n});
    auto P = power_graph(g);
    auto PE = enhanced_power_graph(g);
    auto D = commuting_graph(g);

    c.check("spanning-chain", P.spanning_subgraph_of(PE) && PE.spanning_subgraph_of(D));

    const auto order_p = order_partition(g);
    const auto conj_p = conjugacy_partition(g);

    // conjugacy refines order, so the conjugacy super graph sits between
    for (const auto& [kind, base] : {std::pair<std::string, const SimpleGraph*>{"power", &P},
                                     {"enhanced", &PE},
                                     {"commuting", &D}}) {
        auto sc = super_graph(*base, conj_p);
        auto so = super_graph(*base, order_p);
        c.check(kind + "-super-monotone", base->spanning_subgraph_of(sc) && sc.spanning_subgraph_of(so));
        c.check(kind + "-singleton-super-identity",
                super_graph(*base, VertexPartition::singletons(base->vertex_count())).same_edges(*base));

        for (const auto& [rel, part] : {std::pair<std::string, const VertexPartition*>{"order", &order_p},
                                        {"conjugacy", &conj_p}}) {
            auto sg = super_graph(*base, *part);
            // every class induces a clique with equal degrees
            bool cliques = true, equal_deg = true;
            for (const auto& cls : part->classes) {
                for (size_t a = 0; a < cls.size(); ++a) {
                    equal_deg = equal_deg && sg.degree(cls[a]) == sg.degree(cls[0]);
                    for (size_t b = a + 1; b < cls.size(); ++b)
                        cliques = cliques && sg.adjacent(cls[a], cls[b]);
                }
            }
            c.check(kind + "-" + rel + "-class-cliques", cliques);
            c.check(kind + "-" + rel + "-equal-degrees", equal_deg);

            auto comp = compressed_graph(*base, *part);
            if (base->connected()) c.check(kind + "-" + rel + "-compressed-connected", comp.connected());

            // super graph is the generalized join of the compressed graph over complete parts
            if (sg.vertex_count() <= 64) {
                JoinSkeleton sk;
                sk.skeleton = comp;
                for (const auto& cls : part->classes) sk.parts.push_back({static_cast<int>(cls.size()), true});
                c.check(kind + "-" + rel + "-super-join-isomorphic", is_isomorphic(sg, generalized_join(sk)));
            }
        }
    }

    if (f == Family::Cyclic) return;

    // brute-force conjugacy classes against the hand enumerations
    c.check("conjugacy-listing", partition_as_set(conj_p) == partition_as_set(expected_conjugacy(g)));

    // singleton conjugacy classes are exactly the centre
    std::vector<int> singles;
    for (const auto& cls : conj_p.classes)
        if (cls.size() == 1) singles.push_back(cls[0]);
    std::sort(singles.begin(), singles.end());
    c.check("centre-vs-singleton-classes", singles == center(g));

    const bool odd = n % 2 == 1;
    if (f == Family::Dihedral) {
        auto delta_expect = odd ? star_join({{1, true}, {n - 1, true}, {n, false}})
                                : [&] {
                                      std::vector<JoinPart> parts{{2, true}, {n - 2, true}};
                                      for (int i = 0; i < n / 2; ++i) parts.push_back({2, true});
                                      return star_join(parts);
                                  }();
        c.check("commuting-structure", is_isomorphic(D, delta_expect));

        auto pe_expect = join(complete_graph(1), disjoint_union(complete_graph(n - 1), empty_graph(n)));
        c.check("enhanced-structure", is_isomorphic(PE, pe_expect));

        auto p_o = super_graph(P, order_p);
        auto p_c = super_graph(P, conj_p);
        if (odd) c.check("power-order-equals-conjugacy-super", p_o.same_edges(p_c));

        auto d_o = super_graph(D, order_p);
        c.check("commuting-order-structure",
                odd ? is_isomorphic(d_o, star_join({{1, true}, {n - 1, true}, {n, true}}))
                    : d_o.same_edges(complete_graph(2 * n)));

        auto d_c = super_graph(D, conj_p);
        SimpleGraph d_c_expect = odd ? star_join({{1, true}, {n - 1, true}, {n, true}})
                                 : (n % 4 == 2)
                                     ? star_join({{2, true}, {n - 2, true}, {n, true}})
                                     : star_join({{2, true}, {n - 2, true}, {n / 2, true}, {n / 2, true}});
        c.check("commuting-conjugacy-structure", is_isomorphic(d_c, d_c_expect));

        auto pe_c = super_graph(PE, conj_p);
        SimpleGraph pe_c_expect =
            odd ? star_join({{1, true}, {n - 1, true}, {n, true}})
                : star_join({{1, true}, {n - 1, true}, {n / 2, true}, {n / 2, true}});
        c.check("enhanced-conjugacy-structure", is_isomorphic(pe_c, pe_c_expect));

        // Lemma 6.1 decomposition of the power graph over the divisor skeleton
        auto ds = divisor_structure(n);
        SimpleGraph rotations_block;
        if (ds.divisors.empty()) {
            rotations_block = complete_graph(euler_phi(n));
        } else {
            JoinSkeleton sk{ds.skeleton, {}};
            for (int phi : ds.phi) sk.parts.push_back({phi, true});
            rotations_block = join(complete_graph(euler_phi(n)), generalized_join(sk));
        }
        auto p_expect = join(complete_graph(1), disjoint_union(rotations_block, empty_graph(n)));
        c.check("power-divisor-structure", is_isomorphic(P, p_expect));
    }

    if (f == Family::GeneralizedQuaternion) {
        std::vector<JoinPart> parts{{2, true}, {2 * n - 2, true}};
        for (int i = 0; i < n; ++i) parts.push_back({2, true});
        c.check("commuting-structure", is_isomorphic(D, star_join(parts)));
        c.check("enhanced-equals-commuting", PE.same_edges(D));

        auto d_o = super_graph(D, order_p);
        c.check("commuting-order-structure",
                odd ? is_isomorphic(d_o, star_join({{2, true}, {2 * n - 2, true}, {2 * n, true}}))
                    : d_o.same_edges(complete_graph(4 * n)));

        auto d_c = super_graph(D, conj_p);
        SimpleGraph d_c_expect =
            odd ? star_join({{2, true}, {2 * n - 2, true}, {2 * n, true}})
                : star_join({{2, true}, {2 * n - 2, true}, {n, true}, {n, true}});
        c.check("commuting-conjugacy-structure", is_isomorphic(d_c, d_c_expect));

        auto pe_c = super_graph(PE, conj_p);
        c.check("enhanced-conjugacy-structure", is_isomorphic(pe_c, d_c_expect));
    }

    if (f == Family::Semidihedral) {
        std::vector<JoinPart> parts;
        if (odd) {
            parts = {{4, true}, {4 * n - 4, true}};
            for (int i = 0; i < n; ++i) parts.push_back({4, true});
        } else {
            parts = {{2, true}, {4 * n - 2, true}};
            for (int i = 0; i < 2 * n; ++i) parts.push_back({2, true});
        }
        c.check("commuting-structure", is_isomorphic(D, star_join(parts)));

        auto d_o = super_graph(D, order_p);
        c.check("commuting-order-complete", d_o.same_edges(complete_graph(8 * n)));

        auto d_c = super_graph(D, conj_p);
        SimpleGraph d_c_expect =
            odd ? star_join({{4, true}, {4 * n - 4, true}, {4 * n, true}})
                : star_join({{2, true}, {4 * n - 2, true}, {2 * n, true}, {2 * n, true}});
        c.check("commuting-conjugacy-structure", is_isomorphic(d_c, d_c_expect));

        // enhanced power graph and its conjugacy super against their join forms
        auto inner = join(complete_graph(1),
                          disjoint_union(complete_graph(4 * n - 2), [&] {
                              SimpleGraph pairs(0);
                              for (int i = 0; i < n; ++i) pairs = disjoint_union(pairs, complete_graph(2));
                              return pairs;
                          }()));
        auto pe_expect = join(complete_graph(1), disjoint_union(inner, empty_graph(2 * n)));
        c.check("enhanced-structure", is_isomorphic(PE, pe_expect));

        auto pe_c = super_graph(PE, conj_p);
        auto core = join(complete_graph(1), disjoint_union(complete_graph(4 * n - 2), complete_graph(2 * n)));
        SimpleGraph pe_c_expect =
            odd ? join(complete_graph(1),
                       disjoint_union(disjoint_union(core, complete_graph(n)), complete_graph(n)))
                : join(complete_graph(1), disjoint_union(core, complete_graph(2 * n)));
        c.check("enhanced-conjugacy-structure", is_isomorphic(pe_c, pe_c_expect));

        // Lemma 5.3 closed neighbourhoods in the enhanced power graph
        const int R = 4 * n;
        bool nbhd_ok = true;
        std::vector<int> all(static_cast<size_t>(8 * n));
        for (int i = 0; i < 8 * n; ++i) all[static_cast<size_t>(i)] = i;
        nbhd_ok = nbhd_ok && sorted_closed_neighborhood(PE, 0) == all;
        std::vector<int> rotations_and_odds;
        for (int i = 0; i < R; ++i) rotations_and_odds.push_back(i);
        for (int i = 1; i < R; i += 2) rotations_and_odds.push_back(R + i);
        std::sort(rotations_and_odds.begin(), rotations_and_odds.end());
        nbhd_ok = nbhd_ok && sorted_closed_neighborhood(PE, 2 * n) == rotations_and_odds;
        std::vector<int> rotations(static_cast<size_t>(R));
        for (int i = 0; i < R; ++i) rotations[static_cast<size_t>(i)] = i;
        for (int i = 1; i < R && nbhd_ok; ++i) {
            if (i == 2 * n) continue;
            nbhd_ok = sorted_closed_neighborhood(PE, i) == rotations;
        }
        for (int i = 0; i < 2 * n && nbhd_ok; ++i) {
            int odd_exp = 2 * i + 1;
            std::vector<int> expect{0, 2 * n, R + odd_exp, R + ((2 * n + odd_exp) % R)};
            std::sort(expect.begin(), expect.end());
            nbhd_ok = sorted_closed_neighborhood(PE, R + odd_exp) == expect;
        }
        for (int i = 1; i <= 2 * n && nbhd_ok; ++i) {
            int even_exp = (2 * i) % R;
            std::vector<int> expect{0, R + even_exp};
            nbhd_ok = sorted_closed_neighborhood(PE, R + even_exp) == expect;
        }
        c.check("enhanced-neighborhoods", nbhd_ok);
    }

    // the order super enhanced power graph coincides with the order super commuting graph
    c.check("enhanced-order-equals-commuting-order",
            super_graph(PE, order_p).same_edges(super_graph(D, order_p)));
}

}  // namespace

StructuralReport structural_suite(const std::vector<Family>& families, int n_min, int n_max) {
    StructuralReport report;
    for (Family f : families) {
        for (int n = std::max(n_min, family_min_n(f)); n <= n_max; ++n) {
            Checker c{&report, family_code(f) + std::to_string(n) + ":"};
            check_family_at_n(c, f, n);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json task_json(const VerificationTask& t) {
    return json{{"family", family_code(t.family)},
                {"kind", kind_code(t.kind)},
                {"relation", relation_code(t.relation)},
                {"n", t.n},
                {"tolerances",
                 {{"eigen", t.tol.eigen_tol},
                  {"clusterRel", t.tol.cluster_tol_rel},
                  {"matchRel", t.tol.match_tol_rel}}}};
}

json report_json(const VerificationReport& r) {
    json j;
    j["task"] = task_json(r.task);
    j["status"] = status_code(r.status);
    j["graph"] = {{"order", r.graph_order}, {"size", r.graph_size}, {"degreeSequence", r.degree_sequence}};
    if (!r.covered) return j;

    j["sourceId"] = r.source_id;
    if (r.alternate) j["alternate"] = true;
    if (!r.suspect.empty()) j["suspect"] = r.suspect;
    json pairs = json::array();
    for (const auto& c : r.oracle.pairs) pairs.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
    j["oracle"] = {{"pairs", pairs},
                   {"clusterTol", round12(r.oracle.cluster_tol)},
                   {"dim", r.oracle.dim},
                   {"spectralRadius", r.spectral_radius}};
    j["identities"] = {{"traceResidual", r.trace_residual}, {"frobeniusResidual", r.frobenius_residual}};
    j["gapAssertion"] = r.gap_assertion;

    json claims = json::array();
    for (const auto& v : r.claims) {
        json c;
        c["value"] = v.claim.value;
        c["multiplicity"] = v.claim.multiplicity;
        c["kind"] = v.claim.at_least ? "AtLeast" : "Exact";
        switch (v.status) {
            case ClaimStatus::Matched: c["verdict"] = "Matched"; break;
            case ClaimStatus::MultiplicityShort: c["verdict"] = "MultiplicityShort"; break;
            case ClaimStatus::ValueMissing: c["verdict"] = "ValueMissing"; break;
            case ClaimStatus::BoundMet: c["verdict"] = "BoundMet"; break;
            case ClaimStatus::BoundShort: c["verdict"] = "BoundShort"; break;
        }
        c["observed"] = v.observed;
        c["nearestOracleValue"] = v.matched_value;
        claims.push_back(c);
    }
    j["claims"] = claims;

    json res;
    switch (r.residual.kind) {
        case ResidualKind::None: res["type"] = "none"; break;
        case ResidualKind::Polynomial:
            res["type"] = "polynomial";
            res["maxScaledResidual"] = r.residual.max_poly_residual;
            break;
        case ResidualKind::Quotient:
            res["type"] = "quotient";
            res["maxMatchError"] = r.residual.max_quotient_mismatch;
            break;
    }
    res["ok"] = r.residual.ok;
    res["leftoverCount"] = r.residual.leftover_count;
    res["expectedLeftovers"] = r.residual.expected_leftovers;
    if (!r.residual.note.empty()) res["note"] = r.residual.note;
    j["residual"] = res;
    j["accountingOk"] = r.accounting_ok;
    return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) { return report_json(r).dump(2); }

std::string suite_to_json(const SuiteResult& s) {
    json arr = json::array();
    for (const auto& r : s.reports) arr.push_back(report_json(r));
    json out;
    out["reports"] = arr;
    out["summary"] = {{"pass", s.pass}, {"flagged", s.flagged}, {"notCovered", s.not_covered}};
    return out.dump(2);
}

std::string structural_to_json(const StructuralReport& r) {
    json arr = json::array();
    for (const auto& c : r.checks) {
        json e = {{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(e);
    }
    json out;
    out["checks"] = arr;
    out["failures"] = r.failures;
    return out.dump(2);
}

}  // namespace somspec

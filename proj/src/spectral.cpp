#include "somspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace somspec {

RealSymMatrix::RealSymMatrix(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0.0);
}

size_t RealSymMatrix::idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("matrix index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j);
}

void RealSymMatrix::set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
}

double RealSymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double RealSymMatrix::max_abs_row_sum() const {
    double best = 0.0;
    for (int i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (int j = 0; j < dim_; ++j) row += std::abs(at(i, j));
        best = std::max(best, row);
    }
    return best;
}

double RealSymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

RealSymMatrix sombor_matrix(const SimpleGraph& g) {
    const int n = g.vertex_count();
    const auto deg = g.degrees();
    RealSymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) {
                double di = deg[static_cast<size_t>(i)], dj = deg[static_cast<size_t>(j)];
                m.set(i, j, std::sqrt(di * di + dj * dj));
            }
    return m;
}

namespace {

constexpr int kJacobiSweepCap = 64;

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
    return std::sqrt(s);
}

// One cyclic sweep of Jacobi rotations. V (if non-null) accumulates the
// transposed rotations so that rows of V end up as eigenvectors.
void jacobi_sweep(std::vector<double>& a, std::vector<double>* v, int n) {
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            double apq = a[static_cast<size_t>(p) * n + q];
            if (apq == 0.0) continue;
            double app = a[static_cast<size_t>(p) * n + p];
            double aqq = a[static_cast<size_t>(q) * n + q];
            double theta = (aqq - app) / (2.0 * apq);
            double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            double c = 1.0 / std::sqrt(t * t + 1.0);
            double s = t * c;

            for (int k = 0; k < n; ++k) {
                double akp = a[static_cast<size_t>(k) * n + p];
                double akq = a[static_cast<size_t>(k) * n + q];
                a[static_cast<size_t>(k) * n + p] = c * akp - s * akq;
                a[static_cast<size_t>(k) * n + q] = s * akp + c * akq;
            }
            for (int k = 0; k < n; ++k) {
                double apk = a[static_cast<size_t>(p) * n + k];
                double aqk = a[static_cast<size_t>(q) * n + k];
                a[static_cast<size_t>(p) * n + k] = c * apk - s * aqk;
                a[static_cast<size_t>(q) * n + k] = s * apk + c * aqk;
            }
            if (v) {
                for (int k = 0; k < n; ++k) {
                    double vpk = (*v)[static_cast<size_t>(p) * n + k];
                    double vqk = (*v)[static_cast<size_t>(q) * n + k];
                    (*v)[static_cast<size_t>(p) * n + k] = c * vpk - s * vqk;
                    (*v)[static_cast<size_t>(q) * n + k] = s * vpk + c * vqk;
                }
            }
        }
    }
}

EigenDecomposition jacobi(const RealSymMatrix& m, double tol, bool want_vectors) {
    if (tol <= 0.0) throw std::invalid_argument("eigen_sym needs tol > 0");
    const int n = m.dim();
    std::vector<double> a(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);

    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    }

    const double norm = m.frobenius_norm();
    const double target = tol * (norm > 0.0 ? norm : 1.0);
    int sweep = 0;
    while (off_diagonal_norm(a, n) > target) {
        if (sweep++ >= kJacobiSweepCap) {
            throw ConvergenceError("Jacobi failed to converge after " + std::to_string(kJacobiSweepCap) +
                                       " sweeps; off-diagonal residual " +
                                       std::to_string(off_diagonal_norm(a, n)),
                                   off_diagonal_norm(a, n));
        }
        jacobi_sweep(a, want_vectors ? &v : nullptr, n);
    }

    EigenDecomposition out;
    out.values.resize(static_cast<size_t>(n));
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.values[static_cast<size_t>(i)] = a[static_cast<size_t>(i) * n + i];
        perm[static_cast<size_t>(i)] = i;
    }
    std::sort(perm.begin(), perm.end(),
              [&](int x, int y) { return out.values[static_cast<size_t>(x)] < out.values[static_cast<size_t>(y)]; });
    std::vector<double> sorted(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sorted[static_cast<size_t>(i)] = out.values[static_cast<size_t>(perm[static_cast<size_t>(i)])];
    out.values = std::move(sorted);
    if (want_vectors) {
        out.vectors.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                out.vectors[static_cast<size_t>(i) * n + k] = v[static_cast<size_t>(perm[static_cast<size_t>(i)]) * n + k];
    }
    return out;
}

}  // namespace

std::vector<double> eigen_sym(const RealSymMatrix& m, double tol) {
    return jacobi(m, tol, false).values;
}

EigenDecomposition eigen_sym_full(const RealSymMatrix& m, double tol) { return jacobi(m, tol, true); }

SpectrumSummary cluster_spectrum(const std::vector<double>& eigs, double cluster_tol) {
    SpectrumSummary out;
    out.cluster_tol = cluster_tol;
    out.dim = static_cast<int>(eigs.size());
    double sum = 0.0;
    int count = 0;
    for (size_t i = 0; i < eigs.size(); ++i) {
        if (i > 0 && eigs[i] < eigs[i - 1]) throw std::invalid_argument("cluster_spectrum needs ascending input");
        if (count > 0 && std::abs(eigs[i] - sum / count) <= cluster_tol) {
            sum += eigs[i];
            ++count;
        } else {
            if (count > 0) out.pairs.push_back({sum / count, count});
            sum = eigs[i];
            count = 1;
        }
    }
    if (count > 0) out.pairs.push_back({sum / count, count});
    return out;
}

QuotientMatrix equitable_quotient(const RealSymMatrix& m, const VertexPartition& p, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("equitable_quotient needs tol > 0");
    p.validate(m.dim());
    const int k = static_cast<int>(p.classes.size());
    QuotientMatrix q;
    q.dim = k;
    q.entries.assign(static_cast<size_t>(k) * static_cast<size_t>(k), 0.0);
    q.class_sizes.reserve(static_cast<size_t>(k));
    for (const auto& cls : p.classes) q.class_sizes.push_back(static_cast<int>(cls.size()));

    q.equitable = true;
    q.max_row_sum_deviation = 0.0;
    for (int bi = 0; bi < k; ++bi) {
        for (int bj = 0; bj < k; ++bj) {
            double total = 0.0;
            for (int v : p.classes[static_cast<size_t>(bi)])
                for (int u : p.classes[static_cast<size_t>(bj)]) total += m.at(v, u);
            double mean = total / static_cast<double>(p.classes[static_cast<size_t>(bi)].size());
            q.entries[static_cast<size_t>(bi) * k + bj] = mean;
            for (int v : p.classes[static_cast<size_t>(bi)]) {
                double row = 0.0;
                for (int u : p.classes[static_cast<size_t>(bj)]) row += m.at(v, u);
                q.max_row_sum_deviation = std::max(q.max_row_sum_deviation, std::abs(row - mean));
            }
        }
    }
    q.equitable = q.max_row_sum_deviation <= tol;
    return q;
}

std::optional<RealSymMatrix> balanced_quotient(const QuotientMatrix& q, double tol) {
    if (static_cast<int>(q.class_sizes.size()) != q.dim)
        throw std::invalid_argument("quotient class sizes missing");
    RealSymMatrix b(q.dim);
    double max_abs = 0.0;
    for (int i = 0; i < q.dim; ++i)
        for (int j = 0; j < q.dim; ++j) max_abs = std::max(max_abs, std::abs(q.at(i, j)));
    for (int i = 0; i < q.dim; ++i) {
        for (int j = i; j < q.dim; ++j) {
            double ratio = std::sqrt(static_cast<double>(q.class_sizes[static_cast<size_t>(i)]) /
                                     static_cast<double>(q.class_sizes[static_cast<size_t>(j)]));
            double bij = q.at(i, j) * ratio;
            double bji = q.at(j, i) / ratio;
            if (std::abs(bij - bji) > tol * std::max(1.0, max_abs)) return std::nullopt;
            b.set(i, j, 0.5 * (bij + bji));
        }
    }
    return b;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, double eigen_tol) {
    auto balanced = balanced_quotient(q);
    if (!balanced)
        throw std::invalid_argument("quotient matrix is not balanceable to a symmetric form");
    return eigen_sym(*balanced, eigen_tol);
}

std::vector<double> char_poly(const RealSymMatrix& m) {
    constexpr int kCharPolyCap = 32;
    const int n = m.dim();
    if (n > kCharPolyCap) throw std::invalid_argument("char_poly is capped at dimension 32");
    if (n == 0) return {1.0};

    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
    std::vector<double> coeffs(static_cast<size_t>(n) + 1, 0.0);
    coeffs[0] = 1.0;
    std::vector<double> mk(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) mk[static_cast<size_t>(i) * n + i] = 1.0;
    std::vector<double> am(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int t = 0; t < n; ++t) s += m.at(i, t) * mk[static_cast<size_t>(t) * n + j];
                am[static_cast<size_t>(i) * n + j] = s;
            }
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += am[static_cast<size_t>(i) * n + i];
        double ck = -tr / static_cast<double>(k);
        coeffs[static_cast<size_t>(k)] = ck;
        mk = am;
        for (int i = 0; i < n; ++i) mk[static_cast<size_t>(i) * n + i] += ck;
    }
    return coeffs;
}

double eval_poly(std::span<const double> coeffs, double x) {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

std::optional<Lemma21Prediction> lemma21_predict(const SimpleGraph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("lemma21_predict needs a non-empty vertex set");
    std::vector<uint8_t> in_s(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
        in_s[static_cast<size_t>(v)] = 1;
    }
    auto external = [&](int v) {
        std::vector<int> out;
        for (int u : g.neighbors(v))
            if (!in_s[static_cast<size_t>(u)]) out.push_back(u);
        return out;
    };
    const auto ref = external(s.front());
    for (size_t i = 1; i < s.size(); ++i) {
        if (external(s[i]) != ref)
            throw std::invalid_argument("vertices do not share an external neighbourhood");
    }

    bool independent = true, clique = true;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (g.adjacent(s[i], s[j]))
                independent = false;
            else
                clique = false;
        }
    const int bound = static_cast<int>(s.size()) - 1;
    if (independent) return Lemma21Prediction{0.0, bound};
    if (clique) return Lemma21Prediction{-static_cast<double>(g.degree(s.front())) * std::sqrt(2.0), bound};
    return std::nullopt;
}

std::string to_csv(const RealSymMatrix& m) {
    std::ostringstream out;
    out << m.dim() << "\n";
    char buf[64];
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m.at(i, j));
            out << (j ? "," : "") << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace somspec

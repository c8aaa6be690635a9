#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "somspec/graph.hpp"
#include "somspec/group.hpp"

namespace somspec {

// Dense symmetric real matrix, assembled exactly symmetric.
class RealSymMatrix {
public:
    RealSymMatrix() = default;
    explicit RealSymMatrix(int dim);

    int dim() const { return dim_; }
    double at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, double v);  // writes both (i,j) and (j,i)

    double frobenius_norm() const;
    double max_abs_row_sum() const;  // Gershgorin bound on the spectral radius
    double trace() const;

private:
    size_t idx(int i, int j) const;
    int dim_ = 0;
    std::vector<double> a_;
};

// Entry (i,j) = sqrt(deg(i)^2 + deg(j)^2) when i ~ j, else 0.
RealSymMatrix sombor_matrix(const SimpleGraph& g);

struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), off_diagonal_residual(residual) {}
    double off_diagonal_residual;
};

// All eigenvalues, sorted ascending. Cyclic Jacobi; converged when the
// off-diagonal Frobenius norm drops below tol * ||m||_F. Throws
// ConvergenceError after the sweep cap.
std::vector<double> eigen_sym(const RealSymMatrix& m, double tol = 1e-12);

struct EigenDecomposition {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // row-major dim x dim; row k is the eigenvector of values[k]
};
EigenDecomposition eigen_sym_full(const RealSymMatrix& m, double tol = 1e-12);

struct SpectrumSummary {
    struct Cluster {
        double value;
        int multiplicity;
    };
    std::vector<Cluster> pairs;  // ascending by value
    double cluster_tol = 0.0;
    int dim = 0;
};

// Greedy left-to-right clustering against the running cluster mean.
SpectrumSummary cluster_spectrum(const std::vector<double>& eigs_ascending, double cluster_tol);

struct QuotientMatrix {
    int dim = 0;
    std::vector<double> entries;  // row-major, generally non-symmetric
    std::vector<int> class_sizes;
    bool equitable = false;
    double max_row_sum_deviation = 0.0;

    double at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
};

// Block-average row sums of m under p; equitable iff every block's row sums
// deviate from their mean by at most tol.
QuotientMatrix equitable_quotient(const RealSymMatrix& m, const VertexPartition& p, double tol);

// D^{1/2} Q D^{-1/2} with D = diag(class sizes). For quotients of symmetric
// matrices over constant blocks this is symmetric; returns nullopt when the
// result is not symmetric within tol (relative to the largest entry).
std::optional<RealSymMatrix> balanced_quotient(const QuotientMatrix& q, double tol = 1e-9);

// Eigenvalues of a quotient via its balanced symmetric form.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, double eigen_tol = 1e-12);

// Monic coefficients of det(xI - m), descending powers. Faddeev-LeVerrier;
// dim capped at 32 for conditioning.
std::vector<double> char_poly(const RealSymMatrix& m);

double eval_poly(std::span<const double> coeffs_descending, double x);

struct Lemma21Prediction {
    double eigenvalue;
    int min_multiplicity;
};

// For a vertex set with pairwise equal external neighbourhoods: independent
// set -> (0, |s|-1); clique -> (-d*sqrt(2), |s|-1). Mixed sets yield nothing.
// Throws std::invalid_argument when the neighbourhood condition fails.
std::optional<Lemma21Prediction> lemma21_predict(const SimpleGraph& g, const std::vector<int>& s);

// dim on line 1, then rows of comma-separated values at 17 significant digits.
std::string to_csv(const RealSymMatrix& m);

}  // namespace somspec

#pragma once

#include <string>
#include <vector>

#include "somspec/catalog.hpp"
#include "somspec/graph.hpp"
#include "somspec/group.hpp"
#include "somspec/spectral.hpp"

namespace somspec {

struct Tolerances {
    double eigen_tol = 1e-12;       // Jacobi off-diagonal target, relative to ||S||_F
    double cluster_tol_rel = 1e-6;  // times max(1, spectral radius estimate)
    double match_tol_rel = 1e-6;    // times max(1, spectral radius)
};

struct VerificationTask {
    Family family;
    GraphKind kind;
    Relation relation;
    int n;
    Tolerances tol;
};

enum class ClaimStatus { Matched, MultiplicityShort, ValueMissing, BoundMet, BoundShort };

struct ClaimVerdict {
    SpectralClaim claim;
    ClaimStatus status;
    int observed = 0;        // multiplicity found at the claimed value
    double matched_value = 0.0;
    bool ok() const {
        return status == ClaimStatus::Matched || status == ClaimStatus::BoundMet;
    }
};

struct ResidualVerdict {
    ResidualKind kind = ResidualKind::None;
    bool ok = true;
    double max_poly_residual = 0.0;      // scaled residual of the worst leftover root
    double max_quotient_mismatch = 0.0;  // worst |quotient eig - nearest leftover|
    int leftover_count = 0;              // oracle eigenvalues left for the residual
    int expected_leftovers = 0;          // polynomial degree or quotient dimension
    std::string note;
};

enum class ReportStatus { Pass, Flagged, NotCovered };

struct VerificationReport {
    VerificationTask task;
    std::string source_id;
    bool covered = false;
    bool alternate = false;
    std::string suspect;

    int graph_order = 0;
    long graph_size = 0;
    std::vector<int> degree_sequence;

    SpectrumSummary oracle;
    double spectral_radius = 0.0;
    double trace_residual = 0.0;      // |sum eig| / (dim * maxAbsEntry)
    double frobenius_residual = 0.0;  // relative Frobenius identity defect
    bool gap_assertion = true;        // inter-cluster gaps exceed 2 * match tol

    std::vector<ClaimVerdict> claims;
    ResidualVerdict residual;
    bool accounting_ok = true;  // every oracle eigenvalue consumed exactly once
    ReportStatus status = ReportStatus::NotCovered;
};

std::string status_code(ReportStatus s);

VerificationReport run_task(const VerificationTask& t);
VerificationReport run_task_with(const VerificationTask& t, const ClosedFormPrediction& prediction);

struct SuiteResult {
    std::vector<VerificationReport> reports;
    int pass = 0;
    int flagged = 0;
    int not_covered = 0;
};

SuiteResult run_suite(const std::vector<Family>& families, int n_min, int n_max,
                      const std::vector<GraphKind>& kinds, const std::vector<Relation>& relations,
                      const Tolerances& tol = {});

// "family:kind:relation:n:sourceId" per Flagged report, sorted
std::vector<std::string> flagged_keys(const SuiteResult& suite);

struct StructuralCheck {
    std::string name;
    bool ok;
    std::string detail;
};

struct StructuralReport {
    std::vector<StructuralCheck> checks;
    int failures = 0;
};

StructuralReport structural_suite(const std::vector<Family>& families, int n_min, int n_max);

std::string report_to_json(const VerificationReport& r);
std::string suite_to_json(const SuiteResult& s);
std::string structural_to_json(const StructuralReport& r);

// Floating-point text form used in all reports (12 significant digits).
std::string format_real(double v);

}  // namespace somspec

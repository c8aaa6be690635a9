#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "somspec/graph.hpp"
#include "somspec/group.hpp"
#include "somspec/spectral.hpp"

namespace somspec {

// One claimed eigenvalue: an exact multiplicity or a lower bound.
struct SpectralClaim {
    double value;
    int multiplicity;
    bool at_least = false;
};

// Residual quotient matrix built entry-by-entry from a catalog formula.
struct QuotientSpec {
    int dim = 0;
    std::vector<double> entries;  // row-major, generally non-symmetric
    std::vector<int> class_sizes;

    double at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
    QuotientMatrix as_quotient() const;
};

enum class ResidualKind { None, Polynomial, Quotient };

struct ResidualClaim {
    ResidualKind kind = ResidualKind::None;
    std::vector<double> poly;  // monic, descending powers
    QuotientSpec quotient;
};

struct ClosedFormPrediction {
    std::string source_id;
    Family family;
    GraphKind kind;
    Relation relation;
    int n = 0;
    std::vector<SpectralClaim> claims;
    ResidualClaim residual;
    std::string applicability;
    std::string suspect;     // non-empty marks a paper-suspect entry
    bool alternate = false;  // alternative reading of the same source
    bool load_consistent = true;
    std::string load_note;
};

struct CatalogMiss : std::runtime_error {
    explicit CatalogMiss(const std::string& what) : std::runtime_error(what) {}
};

int euler_phi(int n);

struct DivisorStructure {
    std::vector<int> divisors;  // proper nontrivial divisors of n, ascending
    std::vector<int> phi;       // phi of each divisor
    SimpleGraph skeleton;       // adjacent iff one divides the other
};
DivisorStructure divisor_structure(int n);

bool catalog_covers(Family f, GraphKind k, Relation r, int n);

// Primary prediction for a covered cell; throws CatalogMiss (listing the
// covered combinations) otherwise.
ClosedFormPrediction predict(Family f, GraphKind k, Relation r, int n);

// Primary plus any alternate readings; empty when not covered.
std::vector<ClosedFormPrediction> predictions_for(Family f, GraphKind k, Relation r, int n);

// Residual quotient matrix of a theorem that displays one, instantiated at n.
QuotientSpec quotient_spec(const std::string& source_id, int n);

// Roots y1 >= y2 of the 2x2 residual block of K_{1,k-1}[K_l, K_m, ..., K_m].
std::pair<double, double> star_join_residual_roots(int l, int m, int k);

// Whole catalog instantiated near n, one JSON entry per theorem case.
std::string export_catalog(int n);

}  // namespace somspec

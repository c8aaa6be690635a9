#pragma once

#include <string>
#include <vector>

namespace somspec {

enum class Family { Dihedral, GeneralizedQuaternion, Semidihedral, Cyclic };

std::string family_code(Family f);            // "D", "Q", "SD", "Z"
Family family_from_code(const std::string&);  // throws std::invalid_argument

// Family parameter. Group order is 2n / 4n / 8n / n.
struct GroupSpec {
    Family family;
    int n;
};

int family_min_n(Family f);
int group_order(const GroupSpec& s);

// Normal form a^rot * b^refl with rot reduced modulo the rotation order
// (n for D_2n, 2n for Q_4n, 4n for SD_8n, n for Z_n).
struct GroupElement {
    int rot = 0;
    bool refl = false;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Element list in canonical order: rotations by ascending exponent, then
// reflections by ascending exponent. Index 0 is the identity.
class FiniteGroup {
public:
    explicit FiniteGroup(GroupSpec spec);  // throws std::invalid_argument below family minimum

    const GroupSpec& spec() const { return spec_; }
    int order() const { return static_cast<int>(elements_.size()); }
    int rotation_order() const { return rot_order_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    int identity_index() const { return 0; }

    GroupElement element(int index) const { return elements_.at(static_cast<size_t>(index)); }
    int index_of(GroupElement x) const;

    GroupElement multiply(GroupElement x, GroupElement y) const;
    int multiply_index(int i, int j) const;
    GroupElement inverse(GroupElement x) const;

    int element_order(GroupElement x) const;
    std::vector<int> cyclic_subgroup(GroupElement x) const;  // sorted indices of <x>

    std::string name(GroupElement x) const;  // "e", "a^3", "ab", "a^2b", ...

private:
    GroupSpec spec_;
    int rot_order_;
    std::vector<GroupElement> elements_;
};

FiniteGroup make_group(GroupSpec spec);

// Disjoint, non-empty index classes covering {0, ..., n-1}.
struct VertexPartition {
    std::vector<std::vector<int>> classes;

    int total_size() const;
    std::vector<int> class_of_vertex(int n) const;  // vertex -> class index, throws on bad cover
    void validate(int n) const;                     // throws std::invalid_argument
    static VertexPartition singletons(int n);
    static VertexPartition one_class(int n);
};

VertexPartition conjugacy_partition(const FiniteGroup& g);
VertexPartition order_partition(const FiniteGroup& g);
std::vector<int> center(const FiniteGroup& g);  // sorted indices

}  // namespace somspec

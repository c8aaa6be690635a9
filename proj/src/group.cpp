#include "somspec/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace somspec {

std::string family_code(Family f) {
    switch (f) {
        case Family::Dihedral: return "D";
        case Family::GeneralizedQuaternion: return "Q";
        case Family::Semidihedral: return "SD";
        case Family::Cyclic: return "Z";
    }
    throw std::logic_error("unknown family");
}

Family family_from_code(const std::string& code) {
    if (code == "D") return Family::Dihedral;
    if (code == "Q") return Family::GeneralizedQuaternion;
    if (code == "SD") return Family::Semidihedral;
    if (code == "Z") return Family::Cyclic;
    throw std::invalid_argument("unknown family code '" + code + "' (expected D, Q, SD or Z)");
}

int family_min_n(Family f) {
    switch (f) {
        case Family::Dihedral: return 3;
        case Family::GeneralizedQuaternion: return 2;
        case Family::Semidihedral: return 2;
        case Family::Cyclic: return 1;
    }
    throw std::logic_error("unknown family");
}

int group_order(const GroupSpec& s) {
    switch (s.family) {
        case Family::Dihedral: return 2 * s.n;
        case Family::GeneralizedQuaternion: return 4 * s.n;
        case Family::Semidihedral: return 8 * s.n;
        case Family::Cyclic: return s.n;
    }
    throw std::logic_error("unknown family");
}

namespace {

int rotation_order_of(const GroupSpec& s) {
    switch (s.family) {
        case Family::Dihedral: return s.n;
        case Family::GeneralizedQuaternion: return 2 * s.n;
        case Family::Semidihedral: return 4 * s.n;
        case Family::Cyclic: return s.n;
    }
    throw std::logic_error("unknown family");
}

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

FiniteGroup::FiniteGroup(GroupSpec spec) : spec_(spec) {
    if (spec.n < family_min_n(spec.family)) {
        throw std::invalid_argument("family " + family_code(spec.family) + " requires n >= " +
                                    std::to_string(family_min_n(spec.family)) + ", got n = " +
                                    std::to_string(spec.n));
    }
    rot_order_ = rotation_order_of(spec);
    elements_.reserve(static_cast<size_t>(group_order(spec)));
    for (int i = 0; i < rot_order_; ++i) elements_.push_back({i, false});
    if (spec.family != Family::Cyclic) {
        for (int i = 0; i < rot_order_; ++i) elements_.push_back({i, true});
    }
}

FiniteGroup make_group(GroupSpec spec) { return FiniteGroup(spec); }

int FiniteGroup::index_of(GroupElement x) const {
    int r = mod(x.rot, rot_order_);
    if (!x.refl) return r;
    if (spec_.family == Family::Cyclic) throw std::invalid_argument("cyclic group has no reflections");
    return rot_order_ + r;
}

GroupElement FiniteGroup::multiply(GroupElement x, GroupElement y) const {
    const int R = rot_order_;
    if (spec_.family == Family::Cyclic) return {mod(x.rot + y.rot, R), false};

    // x = a^i b^eps, y = a^j b^delta. When eps = 0 the exponents add; when
    // eps = 1 we rewrite b a^j as a^{sigma(j)} b first.
    if (!x.refl) {
        if (!y.refl) return {mod(x.rot + y.rot, R), false};
        return {mod(x.rot + y.rot, R), true};
    }
    int sigma;
    switch (spec_.family) {
        case Family::Dihedral:
        case Family::GeneralizedQuaternion:
            sigma = mod(-y.rot, R);  // ba = a^{-1}b
            break;
        case Family::Semidihedral:
            // ba^j = a^{4n-j}b for even j, a^{2n-j}b for odd j
            sigma = (y.rot % 2 == 0) ? mod(4 * spec_.n - y.rot, R) : mod(2 * spec_.n - y.rot, R);
            break;
        default:
            throw std::logic_error("unreachable");
    }
    int rot = mod(x.rot + sigma, R);
    if (!y.refl) return {rot, true};
    // b^2 = e for D and SD, b^2 = a^n for Q.
    if (spec_.family == Family::GeneralizedQuaternion) rot = mod(rot + spec_.n, R);
    return {rot, false};
}

int FiniteGroup::multiply_index(int i, int j) const {
    return index_of(multiply(element(i), element(j)));
}

GroupElement FiniteGroup::inverse(GroupElement x) const {
    for (const GroupElement& y : elements_) {
        if (multiply(x, y) == GroupElement{0, false}) return y;
    }
    throw std::logic_error("no inverse found; group table is broken");
}

int FiniteGroup::element_order(GroupElement x) const {
    GroupElement acc = x;
    int k = 1;
    while (!(acc == GroupElement{0, false})) {
        acc = multiply(acc, x);
        ++k;
        if (k > order()) throw std::logic_error("element order exceeds group order");
    }
    return k;
}

std::vector<int> FiniteGroup::cyclic_subgroup(GroupElement x) const {
    std::vector<int> out;
    GroupElement acc{0, false};
    do {
        out.push_back(index_of(acc));
        acc = multiply(acc, x);
    } while (!(acc == GroupElement{0, false}));
    std::sort(out.begin(), out.end());
    return out;
}

std::string FiniteGroup::name(GroupElement x) const {
    int r = mod(x.rot, rot_order_);
    std::string s;
    if (r == 1)
        s = "a";
    else if (r > 1)
        s = "a^" + std::to_string(r);
    if (x.refl) s += "b";
    if (s.empty()) s = "e";
    return s;
}

int VertexPartition::total_size() const {
    int t = 0;
    for (const auto& c : classes) t += static_cast<int>(c.size());
    return t;
}

std::vector<int> VertexPartition::class_of_vertex(int n) const {
    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (size_t k = 0; k < classes.size(); ++k) {
        for (int v : classes[k]) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition index out of range");
            if (owner[static_cast<size_t>(v)] != -1) throw std::invalid_argument("partition classes overlap");
            owner[static_cast<size_t>(v)] = static_cast<int>(k);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (owner[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("partition does not cover vertex " + std::to_string(v));
    }
    return owner;
}

void VertexPartition::validate(int n) const {
    for (const auto& c : classes) {
        if (c.empty()) throw std::invalid_argument("partition has an empty class");
    }
    (void)class_of_vertex(n);
}

VertexPartition VertexPartition::singletons(int n) {
    VertexPartition p;
    p.classes.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) p.classes.push_back({v});
    return p;
}

VertexPartition VertexPartition::one_class(int n) {
    VertexPartition p;
    p.classes.emplace_back(static_cast<size_t>(n));
    std::iota(p.classes.back().begin(), p.classes.back().end(), 0);
    return p;
}

VertexPartition conjugacy_partition(const FiniteGroup& g) {
    const int m = g.order();
    std::vector<bool> seen(static_cast<size_t>(m), false);
    VertexPartition p;
    for (int i = 0; i < m; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> cls;
        for (int a = 0; a < m; ++a) {
            GroupElement conj =
                g.multiply(g.multiply(g.element(a), g.element(i)), g.inverse(g.element(a)));
            int j = g.index_of(conj);
            if (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = true;
                cls.push_back(j);
            }
        }
        std::sort(cls.begin(), cls.end());
        p.classes.push_back(std::move(cls));
    }
    return p;
}

VertexPartition order_partition(const FiniteGroup& g) {
    std::map<int, std::vector<int>> fibers;
    for (int i = 0; i < g.order(); ++i) fibers[g.element_order(g.element(i))].push_back(i);
    VertexPartition p;
    for (auto& [o, cls] : fibers) p.classes.push_back(std::move(cls));
    return p;
}

std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i) {
        bool central = true;
        for (int j = 0; j < g.order() && central; ++j) {
            central = g.multiply_index(i, j) == g.multiply_index(j, i);
        }
        if (central) out.push_back(i);
    }
    return out;
}

}  // namespace somspec

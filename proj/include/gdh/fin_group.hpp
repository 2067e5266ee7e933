#ifndef GDH_FIN_GROUP_HPP
#define GDH_FIN_GROUP_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace gdh {

/// Finite group given by its full multiplication table.
/// Elements are indices 0..order-1, identity is 0.
struct FinGroup {
    int order = 1;
    std::vector<std::vector<int>> mul; // mul[g][h] = g*h
    std::vector<int> inv;

    FinGroup() : mul{{0}}, inv{0} {}

    static FinGroup trivial() { return cyclic(1); }
    static FinGroup cyclic(int n);
    /// symmetric group on n letters, n <= 5 (desk scale)
    static FinGroup symmetric(int n);

    int m(int g, int h) const { return mul[g][h]; }
    int conj(int g, int h) const { return mul[mul[g][h]][inv[g]]; } // g h g^-1

    bool operator==(const FinGroup& o) const { return mul == o.mul; }

    /// nullopt when the table satisfies all group axioms, else a message
    std::optional<std::string> validate() const;
};

/// Build a group from permutation generators (closure under composition).
/// Permutations act on {0..n-1}; element 0 of the result is the identity.
/// Optionally returns the permutation realizing each element via `perms`.
FinGroup group_from_permutation_generators(int n, const std::vector<std::vector<int>>& gens,
                                           std::vector<std::vector<int>>* perms = nullptr);

struct Subgroup {
    FinGroup parent;
    std::vector<int> elements; // sorted, contains 0

    int order() const { return (int)elements.size(); }
    bool contains(int g) const {
        return std::binary_search(elements.begin(), elements.end(), g);
    }
    bool operator==(const Subgroup& o) const { return elements == o.elements; }

    static Subgroup trivial(const FinGroup& g) { return Subgroup{g, {0}}; }
    static Subgroup full(const FinGroup& g) {
        Subgroup s{g, {}};
        for (int i = 0; i < g.order; ++i) s.elements.push_back(i);
        return s;
    }

    std::optional<std::string> validate() const;
    Subgroup conjugate(int g) const; // g H g^-1
};

/// Complete duplicate-free list of subgroups, sorted by (order, elements).
std::vector<Subgroup> subgroups(const FinGroup& g);

/// Finite left G-set as an action table act[g][s].
struct GSet {
    FinGroup group;
    int size = 0;
    std::vector<std::vector<int>> act;

    int a(int g, int s) const { return act[g][s]; }

    static GSet trivial(const FinGroup& g, int n);
    /// left multiplication action on cosets of h
    static GSet cosets(const FinGroup& g, const Subgroup& h);
    static GSet left_regular(const FinGroup& g) {
        return cosets(g, Subgroup::trivial(g));
    }
    /// disjoint union, this first
    GSet disjoint_union(const GSet& o) const;
    /// this with an added fixed base point (last index)
    GSet with_basepoint() const { return disjoint_union(GSet::trivial(group, 1)); }

    std::optional<std::string> validate() const;

    Subgroup stabilizer(int s) const;
    std::vector<std::vector<int>> orbits() const; // each sorted, sorted by min
    /// minimal-element representative of the orbit of s
    int orbit_rep(int s) const;
    bool is_free() const;
    std::vector<int> fixed_points(const Subgroup& h) const;
};

/// The subgroup h as its own FinGroup; h.elements maps its indices into the parent.
FinGroup subgroup_as_group(const Subgroup& h);

/// Same underlying set with the action restricted to h (group = subgroup_as_group(h)).
GSet restrict_gset(const GSet& x, const Subgroup& h);

/// Minimal-element section reps[z] of the coset space G/H; reps[z] is the smallest
/// group element of the z-th coset, cosets ordered by smallest element.
std::vector<int> coset_section(const FinGroup& g, const Subgroup& h);

} // namespace gdh

#endif

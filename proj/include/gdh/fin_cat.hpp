#ifndef GDH_FIN_CAT_HPP
#define GDH_FIN_CAT_HPP

#include "gdh/fin_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdh {

/// Finite category: complete morphism list and composition table.
struct FinCat {
    struct Mor {
        int src = 0, tgt = 0;
    };

    int n_obj = 0;
    std::vector<Mor> mor;
    std::vector<int> id;                 // id[o] = identity morphism of o
    std::vector<std::vector<int>> comp;  // comp[f][g] = f.g (g first), -1 if not composable

    int n_mor() const { return (int)mor.size(); }
    int src(int f) const { return mor[f].src; }
    int tgt(int f) const { return mor[f].tgt; }
    bool is_id(int f) const { return id[mor[f].src] == f && mor[f].src == mor[f].tgt; }

    /// f after g; asserts composability
    int compose(int f, int g) const;

    std::vector<int> hom(int i, int j) const;

    std::optional<std::string> validate() const;

    /// no non-identity endomorphisms and reachability is antisymmetric
    bool loop_free() const;

    /// max length of a composable chain of non-identity morphisms (loop-free only)
    int path_length_bound() const;

    FinCat opposite() const;

    static FinCat point();
    static FinCat discrete(int n);
    /// objects 0..n, one morphism i->j iff i<=j (the poset [n])
    static FinCat linear(int n);
    /// free category on a commuting square 00 -> 01,10 -> 11 is poset product
    static FinCat poset(const std::vector<std::vector<bool>>& leq);

    /// rebuild composition table from a composition oracle (used by constructions)
    template <class F>
    void build_comp(F&& oracle) {
        comp.assign(mor.size(), std::vector<int>(mor.size(), -1));
        for (int f = 0; f < n_mor(); ++f)
            for (int g = 0; g < n_mor(); ++g)
                if (mor[g].tgt == mor[f].src) comp[f][g] = oracle(f, g);
    }
};

/// Functor data between explicitly given categories.
struct Functor {
    std::vector<int> obj;
    std::vector<int> mor;

    static Functor identity(const FinCat& c);
    static Functor constant(const FinCat& src, const FinCat& tgt, int object);
    /// g after f, f: a->b first, g: b->c
    static Functor compose(const FinCat& a, const Functor& g, const Functor& f);
};

std::optional<std::string> validate_functor(const FinCat& src, const FinCat& tgt,
                                            const Functor& f);

/// Group acting on a category by functors.
struct GCatAction {
    FinCat cat;
    FinGroup group;
    std::vector<Functor> a; // a[g] endofunctor

    int obj(int g, int o) const { return a[g].obj[o]; }
    int morph(int g, int m) const { return a[g].mor[m]; }

    static GCatAction trivial(const FinCat& c, const FinGroup& g);

    std::optional<std::string> validate() const;

    Subgroup stabilizer(int object) const;
    /// restrict the action to a subgroup (group becomes subgroup_as_group(h))
    GCatAction restrict(const Subgroup& h) const;
    GCatAction opposite() const;

    /// full subcategory of objects/morphisms fixed by every element of h;
    /// also returns the object/morphism embeddings into the ambient category
    FinCat fixed_subcategory(const Subgroup& h, std::vector<int>* obj_embed = nullptr,
                             std::vector<int>* mor_embed = nullptr) const;
};

struct NotAPartialOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ActionNotMonotone : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Poset category from an order relation with a compatible group action on elements.
GCatAction poset_category(int n_elements, const std::vector<std::pair<int, int>>& strict_pairs,
                          const GSet& action);

/// Poset of subsets of a finite G-set ordered by inclusion; objects are bitmasks
/// (object index == bitmask). Optionally remove the empty set and/or the full set.
GCatAction subset_poset(const GSet& j, bool remove_empty, bool remove_full,
                        std::vector<unsigned>* object_mask = nullptr);

/// Pseudo-functor data for a Grothendieck construction over a base category.
struct CatDiagram {
    std::vector<FinCat> fiber;      // per base object
    std::vector<Functor> transport; // per base morphism
};

/// Total category of a strict functor base -> Cat. Object labels (b, x) and
/// morphism labels (f, xi) are reported through the optional out-parameters.
FinCat grothendieck_total(const FinCat& base, const CatDiagram& psi,
                          std::vector<std::pair<int, int>>* obj_label = nullptr,
                          std::vector<std::pair<int, int>>* mor_label = nullptr);

/// The translation category G x_a I of a group action (one fiber, base = group).
/// Morphisms i -> j are pairs (g, alpha: gi -> j); composition
/// (h, beta).(g, alpha) = (hg, beta . h(alpha)).
FinCat grothendieck(const GCatAction& action,
                    std::vector<std::pair<int, int>>* mor_label = nullptr);

/// Comma category F/j for F: C -> D given by functor data, along with the
/// projection to C. Objects are pairs (c, alpha: Fc -> j).
struct CommaCat {
    FinCat cat;
    std::vector<std::pair<int, int>> obj_label; // (object of C, morphism Fc -> j)
    std::vector<int> mor_to_src;                // morphism of C realizing each comma morphism
    Functor projection;                         // to C
};

CommaCat comma_over(const FinCat& c, const FinCat& d, const Functor& f, int j);
CommaCat comma_under(const FinCat& c, const FinCat& d, const Functor& f, int j);

/// Action of the stabilizer G_j on F/j for an equivariant functor F.
/// Returns the comma category with the induced action of stab (as its own group).
GCatAction comma_over_action(const GCatAction& src, const GCatAction& tgt, const Functor& f,
                             int j, const Subgroup& stab, CommaCat* comma = nullptr);
GCatAction comma_under_action(const GCatAction& src, const GCatAction& tgt, const Functor& f,
                              int j, const Subgroup& stab, CommaCat* comma = nullptr);

/// Over-category I/i with its G_i-action (the comma of the identity functor).
GCatAction over_category_action(const GCatAction& act, int i, const Subgroup& stab,
                                CommaCat* comma = nullptr);

/// Orbit category of G: one object per subgroup, morphisms G/K -> G/H are the
/// equivariant maps, enumerated via cosets gH with K gH = gH.
struct OrbitCat {
    FinCat cat;
    std::vector<Subgroup> objects;
    // morphism label: coset rep g (minimal element) of the defining coset gH
    std::vector<int> coset_rep;
};

OrbitCat orbit_category(const FinGroup& g);

/// objects with an initial / terminal object test
std::optional<int> initial_object(const FinCat& c);
std::optional<int> terminal_object(const FinCat& c);

} // namespace gdh

#endif

#ifndef GDH_SSET_HPP
#define GDH_SSET_HPP

#include "gdh/fin_cat.hpp"
#include "gdh/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gdh {

/// monotone map [m] -> [n] as its list of m+1 values
using Monotone = std::vector<int>;

Monotone mono_identity(int n);
Monotone coface(int n, int i);     // [n-1] -> [n] skipping i
Monotone codegeneracy(int n, int i); // [n+1] -> [n] hitting i twice
Monotone mono_compose(const Monotone& outer, const Monotone& inner);
bool is_monotone(const Monotone& f, int target_dim);

/// surjection [m] ->> [m-|S|] determined by the collapse set S subset {0..m-1}
Monotone surjection_from_set(const std::vector<int>& s, int m);

/// A simplex of a simplicial set in Eilenberg-Zilber normal form:
/// the degeneracy word `degen` (sorted collapse set) applied to nondegenerate
/// simplex `id` of dimension `ndim`. Total dimension = ndim + degen.size().
struct Sx {
    int ndim = 0;
    int id = 0;
    std::vector<int> degen;

    int dim() const { return ndim + (int)degen.size(); }
    bool nondegenerate() const { return degen.empty(); }
    bool operator==(const Sx& o) const {
        return ndim == o.ndim && id == o.id && degen == o.degen;
    }
    bool operator<(const Sx& o) const {
        if (ndim != o.ndim) return ndim < o.ndim;
        if (id != o.id) return id < o.id;
        return degen < o.degen;
    }
};

/// Finite simplicial set: nondegenerate simplices per dimension with faces
/// recorded in normal form.
class SimplicialSet {
  public:
    SimplicialSet() : count_{0} {}

    int dim() const { return (int)count_.size() - 1; }
    int count(int n) const { return n >= 0 && n <= dim() ? count_[n] : 0; }
    int total_nondegenerate() const;

    /// stored face of a nondegenerate simplex
    const Sx& stored_face(int n, int id, int i) const { return faces_[n][id][i]; }

    Sx face(const Sx& x, int i) const;
    Sx degeneracy(const Sx& x, int i) const;
    /// x . phi for a monotone phi: [m] -> [dim x]
    Sx apply(const Sx& x, const Monotone& phi) const;

    std::optional<std::string> validate() const;

    /// unreduced boundary matrices of the normalized chain complex
    std::vector<IntMat> boundary_matrices() const;
    std::vector<HomologyGroup> homology_groups() const;
    /// reduced homology; index n holds H~_n, with H~_{-1} reported separately
    struct Reduced {
        std::vector<HomologyGroup> h;
        HomologyGroup h_minus_one;
    };
    Reduced reduced_homology() const;

    bool empty() const { return total_nondegenerate() == 0; }

    std::vector<Sx> all_simplices(int n) const; // degenerate included

    // --- construction ---
    /// append a fresh nondegenerate simplex with the given faces; returns id
    int add_simplex(int n, std::vector<Sx> faces);
    void set_dim(int d);

    static SimplicialSet point();
    static SimplicialSet standard_simplex(int n);
    static SimplicialSet boundary_simplex(int n);
    /// one vertex and one nondegenerate n-cell (minimal n-sphere), n >= 1
    static SimplicialSet sphere(int n);
    static SimplicialSet empty_set();
    static SimplicialSet discrete(int n_points);

  private:
    std::vector<int> count_;
    std::vector<std::vector<std::vector<Sx>>> faces_; // faces_[n][id][i], n >= 1
};

/// map of simplicial sets: image of each nondegenerate simplex
struct SimplicialMap {
    std::vector<std::vector<Sx>> img; // img[n][id]

    Sx apply(const SimplicialSet& tgt, const Sx& x) const;
    static SimplicialMap identity(const SimplicialSet& x);
    static SimplicialMap compose(const SimplicialSet& /*mid*/, const SimplicialSet& tgt,
                                 const SimplicialMap& g, const SimplicialMap& f);
    static SimplicialMap constant(const SimplicialSet& src, const SimplicialSet& tgt,
                                  const Sx& vertex);
    bool operator==(const SimplicialMap& o) const { return img == o.img; }
};

std::optional<std::string> validate_map(const SimplicialSet& src, const SimplicialSet& tgt,
                                        const SimplicialMap& f);
bool is_isomorphism(const SimplicialSet& src, const SimplicialSet& tgt, const SimplicialMap& f);

/// enumerate all simplicial maps src -> tgt (small inputs only)
std::vector<SimplicialMap> all_simplicial_maps(const SimplicialSet& src,
                                               const SimplicialSet& tgt);

/// Explicit simplicial set: every simplex listed per dimension with full
/// face/degeneracy tables. Used as an intermediate for colimits and quotients.
struct RawSS {
    std::vector<int> count;
    // face[n][i][s] for n in 1..D, i in 0..n
    std::vector<std::vector<std::vector<int>>> face;
    // degen[n][i][s] for n in 0..D-1, i in 0..n
    std::vector<std::vector<std::vector<int>>> degen;

    int dim() const { return (int)count.size() - 1; }
    std::optional<std::string> validate() const;
};

/// Flatten a normalized simplicial set (all simplices up to dimension bound).
/// index_of maps Sx -> raw index and sx_of inverts it.
struct Rawified {
    RawSS raw;
    std::vector<std::map<Sx, int>> index_of;
    std::vector<std::vector<Sx>> sx_of;
};
Rawified rawify(const SimplicialSet& x, int bound);

/// Identify degenerate simplices and produce the normal form of a raw set.
struct Normalized {
    SimplicialSet ss;
    std::vector<std::vector<Sx>> class_of; // raw index -> simplex of ss
};
Normalized normalize(const RawSS& raw);

/// Colimit of a finite diagram of simplicial sets (values indexed by the
/// objects of `shape`, one map per morphism).
struct SsetColimit {
    SimplicialSet ss;
    std::vector<SimplicialMap> inclusion; // per shape object
};
SsetColimit sset_colimit(const FinCat& shape, const std::vector<SimplicialSet>& value,
                         const std::vector<SimplicialMap>& arrow);

SsetColimit sset_disjoint_union(const std::vector<SimplicialSet>& parts);

/// Quotient X/A; `in_a[n][id]` flags nondegenerate simplices of the subcomplex.
/// The class of A becomes the image of `collapse_to` (a vertex of the result).
struct SsetQuotient {
    SimplicialSet ss;
    SimplicialMap projection;
    Sx basepoint; // vertex the subcomplex collapsed to
};
SsetQuotient sset_quotient(const SimplicialSet& x, const std::vector<std::vector<bool>>& in_a);

/// Product with projections (Eilenberg-Zilber pairs).
struct SsetProduct {
    SimplicialSet ss;
    std::vector<std::map<std::pair<Sx, Sx>, int>> pair_index; // per dim, nondeg pairs
    std::vector<std::vector<std::pair<Sx, Sx>>> pair_of;
    SimplicialMap proj1, proj2;

    /// normal form of an arbitrary same-dimension pair as a simplex of ss
    Sx normalize_pair(const SimplicialSet& x, const SimplicialSet& y, Sx a, Sx b) const;
};
SsetProduct sset_product(const SimplicialSet& x, const SimplicialSet& y);

/// Nerve of a finite category; nondegenerate p-simplices are strings of
/// composable non-identity morphisms.
struct UnboundedNerve : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Nerve {
    SimplicialSet ss;
    std::vector<std::vector<std::vector<int>>> strings; // strings[n][id] = morphisms
    std::vector<std::map<std::vector<int>, int>> index;  // string -> id per dim

    /// simplex of an arbitrary composable string (identities allowed)
    Sx simplex_of_string(const FinCat& c, const std::vector<int>& string) const;
    /// first object of the string of a nondegenerate simplex (its 0-vertex)
    int vertex_object(const FinCat& c, int n, int id) const;
    int last_object(const FinCat& c, int n, int id) const;
};

Nerve nerve(const FinCat& c, std::optional<int> dim_bound = std::nullopt);

/// simplicial map N(F): N(C) -> N(D) induced by a functor
SimplicialMap nerve_map(const FinCat& c, const FinCat& d, const Functor& f, const Nerve& nc,
                        const Nerve& nd);

/// Simplicial set with a group action by automorphisms.
struct GSimplicialSet {
    SimplicialSet ss;
    FinGroup group;
    std::vector<SimplicialMap> action;

    std::optional<std::string> validate() const;
    /// subcomplex of simplices fixed by every element of h, with its inclusion
    struct Fixed {
        SimplicialSet ss;
        SimplicialMap include;
        std::vector<std::vector<int>> id_embed; // fixed id -> ambient id
    };
    Fixed fixed_points(const Subgroup& h) const;

    GSimplicialSet restrict(const Subgroup& h) const;

    static GSimplicialSet trivial(const SimplicialSet& x, const FinGroup& g);
};

/// nerve of the category of a G-action, with the induced action
GSimplicialSet equivariant_nerve(const GCatAction& act, const Nerve& nv);

} // namespace gdh

#endif

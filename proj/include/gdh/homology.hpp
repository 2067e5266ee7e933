#ifndef GDH_HOMOLOGY_HPP
#define GDH_HOMOLOGY_HPP

#include "gdh/smith.hpp"

#include <stdexcept>

namespace gdh {

struct CompositionNotZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finitely generated abelian group: ZZ^betti + sum ZZ/d_i, d_1 | d_2 | ..., d_i >= 2.
struct HomologyGroup {
    int betti = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
    bool operator!=(const HomologyGroup& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (betti == 1)
            s = "Z";
        else if (betti > 1)
            s = "Z^" + std::to_string(betti);
        for (const Int& t : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.str();
        }
        return s;
    }
};

/// Homology of a bounded complex ... -> C_1 -> C_0 -> 0.
/// ds[n] is d_n : C_n -> C_{n-1}; ds[0] must have zero rows.
/// Requires ds[n] * ds[n+1] = 0, else throws CompositionNotZero.
/// Returns H_0 .. H_N where N = ds.size()-1.
std::vector<HomologyGroup> homology(const std::vector<IntMat>& ds);

/// H = ker(d_out) / im(d_in) for a single spot d_in: A -> B, d_out: B -> C.
HomologyGroup homology_at(const IntMat& d_out, const IntMat& d_in);

} // namespace gdh

#endif

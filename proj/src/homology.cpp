#include "gdh/homology.hpp"

namespace gdh {

HomologyGroup homology_at(const IntMat& d_out, const IntMat& d_in) {
    assert(d_out.cols() == d_in.rows());
    IntMat k = kernel_basis(d_out);
    auto m = solve_matrix(k, d_in);
    if (!m) throw CompositionNotZero("image not contained in kernel");
    CokernelData c = cokernel(*m);
    HomologyGroup h;
    h.betti = c.free_rank;
    h.torsion = c.torsion;
    return h;
}

std::vector<HomologyGroup> homology(const std::vector<IntMat>& ds) {
    assert(!ds.empty() && ds[0].rows() == 0);
    for (size_t n = 0; n + 1 < ds.size(); ++n) {
        assert(ds[n].cols() == ds[n + 1].rows());
        if (!(ds[n] * ds[n + 1]).is_zero())
            throw CompositionNotZero("d_" + std::to_string(n) + " o d_" + std::to_string(n + 1) +
                                     " != 0");
    }
    std::vector<HomologyGroup> h(ds.size());
    for (size_t n = 0; n < ds.size(); ++n) {
        const IntMat& dn = ds[n];
        IntMat din = n + 1 < ds.size() ? ds[n + 1] : IntMat(dn.cols(), 0);
        h[n] = homology_at(dn, din);
    }
    return h;
}

} // namespace gdh

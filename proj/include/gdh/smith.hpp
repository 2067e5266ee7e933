#ifndef GDH_SMITH_HPP
#define GDH_SMITH_HPP

#include "gdh/int_matrix.hpp"

#include <optional>

namespace gdh {

/// u * m * v = d with u, v unimodular and d diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
    IntMat u, d, v;
    int rank = 0; // number of nonzero diagonal entries

    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        for (int i = 0; i < rank; ++i) f.push_back(d(i, i));
        return f;
    }
};

SmithResult smith_normal_form(const IntMat& m);

int rank(const IntMat& m);

/// Basis of the integer kernel {x : m x = 0}, one column per basis vector.
IntMat kernel_basis(const IntMat& m);

/// Solve m x = b over the integers; nullopt if no integer solution.
std::optional<std::vector<Int>> solve(const IntMat& m, const std::vector<Int>& b);

/// Solve m X = B columnwise; nullopt if any column has no solution.
std::optional<IntMat> solve_matrix(const IntMat& m, const IntMat& b);

/// True if every column of b lies in the column span of m over ZZ.
bool in_column_span(const IntMat& m, const IntMat& b);

/// Structure of the cokernel ZZ^rows / im(m).
struct CokernelData {
    int free_rank = 0;
    std::vector<Int> torsion; // invariant factors >= 2, divisibility chain
    // projection to free coordinates: pi (free_rank x rows), valid when torsion empty
    IntMat pi;
    // section of pi, rows x free_rank, pi * sec = id (valid when torsion empty)
    IntMat sec;
};

CokernelData cokernel(const IntMat& m);

Int det(const IntMat& m);

bool is_unimodular(const IntMat& m);

/// Inverse of a unimodular matrix (asserts unimodularity).
IntMat inverse_unimodular(const IntMat& m);

} // namespace gdh

#endif

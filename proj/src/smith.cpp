#include "gdh/smith.hpp"

namespace gdh {

namespace {

// smallest nonzero |entry| with i,j >= t; row-major tie-break
bool find_pivot(const IntMat& a, int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void swap_rows(IntMat& a, int i1, int i2) {
    if (i1 == i2) return;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(i1, j), a(i2, j));
}
void swap_cols(IntMat& a, int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < a.rows(); ++i) std::swap(a(i, j1), a(i, j2));
}
// row i1 += c * row i2
void add_row(IntMat& a, int i1, int i2, const Int& c) {
    if (c == 0) return;
    for (int j = 0; j < a.cols(); ++j) a(i1, j) += c * a(i2, j);
}
void add_col(IntMat& a, int j1, int j2, const Int& c) {
    if (c == 0) return;
    for (int i = 0; i < a.rows(); ++i) a(i, j1) += c * a(i, j2);
}
void negate_row(IntMat& a, int i) {
    for (int j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
}

// floor division quotient used for remainder reduction
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

} // namespace

SmithResult smith_normal_form(const IntMat& m) {
    SmithResult res;
    res.d = m;
    res.u = IntMat::identity(m.rows());
    res.v = IntMat::identity(m.cols());
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    int n = std::min(m.rows(), m.cols());
    int t = 0;
    while (t < n) {
        int pi, pj;
        if (!find_pivot(d, t, pi, pj)) break;
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);

        // clear row and column t; pivot shrinks every pass, so this terminates
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Int q = fdiv(d(i, t), d(t, t));
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
                if (d(i, t) != 0) {
                    // remainder strictly smaller: promote it to pivot
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Int q = fdiv(d(t, j), d(t, t));
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                if (d(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: pivot must divide every remaining entry
            for (int i = t + 1; i < d.rows() && clean; ++i)
                for (int j = t + 1; j < d.cols() && clean; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row(d, t, i, 1);
                        add_row(u, t, i, 1);
                        clean = false;
                    }
        }
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
        ++t;
    }
    res.rank = 0;
    for (int i = 0; i < n; ++i)
        if (d(i, i) != 0) ++res.rank;
    return res;
}

int rank(const IntMat& m) { return smith_normal_form(m).rank; }

IntMat kernel_basis(const IntMat& m) {
    if (m.cols() == 0) return IntMat(0, 0);
    if (m.rows() == 0) return IntMat::identity(m.cols());
    SmithResult s = smith_normal_form(m);
    int k = m.cols() - s.rank;
    IntMat basis(m.cols(), k);
    for (int j = 0; j < k; ++j)
        basis.set_col(j, s.v.col(s.rank + j));
    return basis;
}

std::optional<std::vector<Int>> solve(const IntMat& m, const std::vector<Int>& b) {
    auto x = solve_matrix(m, [&] {
        IntMat bb((int)b.size(), 1);
        for (int i = 0; i < (int)b.size(); ++i) bb(i, 0) = b[i];
        return bb;
    }());
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<IntMat> solve_matrix(const IntMat& m, const IntMat& b) {
    assert(m.rows() == b.rows());
    SmithResult s = smith_normal_form(m);
    IntMat ub = s.u * b;
    IntMat y(m.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        for (int i = 0; i < m.rows(); ++i) {
            if (i < s.rank) {
                if (ub(i, c) % s.d(i, i) != 0) return std::nullopt;
                if (i < m.cols()) y(i, c) = ub(i, c) / s.d(i, i);
            } else if (ub(i, c) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.v * y;
}

bool in_column_span(const IntMat& m, const IntMat& b) {
    return solve_matrix(m, b).has_value();
}

CokernelData cokernel(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    CokernelData c;
    c.free_rank = m.rows() - s.rank;
    for (int i = 0; i < s.rank; ++i)
        if (s.d(i, i) >= 2) c.torsion.push_back(s.d(i, i));
    if (c.torsion.empty()) {
        c.pi = IntMat(c.free_rank, m.rows());
        for (int i = 0; i < c.free_rank; ++i)
            for (int j = 0; j < m.rows(); ++j) c.pi(i, j) = s.u(s.rank + i, j);
        IntMat uinv = inverse_unimodular(s.u);
        c.sec = IntMat(m.rows(), c.free_rank);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < c.free_rank; ++j) c.sec(i, j) = uinv(i, s.rank + j);
    }
    return c;
}

Int det(const IntMat& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            swap_rows(a, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        for (int i = k + 1; i < n; ++i) a(i, k) = 0;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

bool is_unimodular(const IntMat& m) {
    if (m.rows() != m.cols()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

IntMat inverse_unimodular(const IntMat& m) {
    auto r = solve_matrix(m, IntMat::identity(m.rows()));
    assert(r.has_value());
    return *r;
}

} // namespace gdh

#include "gdh/sset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gdh {

Monotone mono_identity(int n) {
    Monotone f(n + 1);
    std::iota(f.begin(), f.end(), 0);
    return f;
}

Monotone coface(int n, int i) {
    Monotone f;
    for (int v = 0; v <= n; ++v)
        if (v != i) f.push_back(v);
    return f;
}

Monotone codegeneracy(int n, int i) {
    // [n+1] -> [n], hits i twice
    Monotone f;
    for (int v = 0; v <= n + 1; ++v) f.push_back(v <= i ? v : v - 1);
    return f;
}

Monotone mono_compose(const Monotone& outer, const Monotone& inner) {
    Monotone f(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) {
        assert(inner[i] >= 0 && inner[i] < (int)outer.size());
        f[i] = outer[inner[i]];
    }
    return f;
}

bool is_monotone(const Monotone& f, int target_dim) {
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] > target_dim) return false;
        if (i > 0 && f[i] < f[i - 1]) return false;
    }
    return true;
}

Monotone surjection_from_set(const std::vector<int>& s, int m) {
    Monotone f(m + 1);
    f[0] = 0;
    for (int i = 0; i < m; ++i)
        f[i + 1] = f[i] + (std::binary_search(s.begin(), s.end(), i) ? 0 : 1);
    return f;
}

namespace {
std::vector<int> collapse_set(const Monotone& f) {
    std::vector<int> s;
    for (size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] == f[i + 1]) s.push_back((int)i);
    return s;
}
} // namespace

int SimplicialSet::total_nondegenerate() const {
    int t = 0;
    for (int c : count_) t += c;
    return t;
}

void SimplicialSet::set_dim(int d) {
    count_.resize(d + 1, 0);
    faces_.resize(d + 1);
}

int SimplicialSet::add_simplex(int n, std::vector<Sx> faces) {
    if (n > dim()) set_dim(n);
    assert(n == 0 ? faces.empty() : (int)faces.size() == n + 1);
    for (const Sx& f : faces) assert(f.dim() == n - 1);
    if ((int)faces_.size() <= n) faces_.resize(n + 1);
    if (n >= 1) faces_[n].push_back(std::move(faces));
    return count_[n]++;
}

Sx SimplicialSet::face(const Sx& x, int i) const {
    if (x.nondegenerate()) {
        assert(x.ndim >= 1);
        return faces_[x.ndim][x.id][i];
    }
    return apply(x, coface(x.dim(), i));
}

Sx SimplicialSet::degeneracy(const Sx& x, int i) const {
    return apply(x, codegeneracy(x.dim(), i));
}

Sx SimplicialSet::apply(const Sx& x, const Monotone& phi) const {
    assert(is_monotone(phi, x.dim()));
    Monotone eta = surjection_from_set(x.degen, x.dim());
    Monotone psi = mono_compose(eta, phi); // [m] -> [x.ndim]
    // factor psi = delta . sigma
    std::vector<int> image;
    for (int v : psi)
        if (image.empty() || image.back() != v) image.push_back(v);
    Monotone sigma(psi.size());
    for (size_t i = 0; i < psi.size(); ++i)
        sigma[i] = (int)(std::lower_bound(image.begin(), image.end(), psi[i]) - image.begin());
    // z = delta^*(nondegenerate part), by dropping missing vertices topmost first
    Sx z{x.ndim, x.id, {}};
    {
        std::vector<int> missing;
        for (int v = 0; v <= x.ndim; ++v)
            if (!std::binary_search(image.begin(), image.end(), v)) missing.push_back(v);
        for (auto it = missing.rbegin(); it != missing.rend(); ++it)
            z = face(z, *it); // recursion strictly decreases dimension
    }
    Monotone eta_z = surjection_from_set(z.degen, z.dim());
    Monotone tau = mono_compose(eta_z, sigma);
    return Sx{z.ndim, z.id, collapse_set(tau)};
}

std::optional<std::string> SimplicialSet::validate() const {
    if (count_.empty()) return "no dimension data";
    if (faces_.size() != count_.size() && !(faces_.empty() && count_.size() == 1))
        return "faces table size mismatch";
    for (int n = 1; n <= dim(); ++n) {
        if ((int)faces_[n].size() != count_[n]) return "faces table size mismatch";
        for (int s = 0; s < count_[n]; ++s) {
            if ((int)faces_[n][s].size() != n + 1) return "face count wrong";
            for (const Sx& f : faces_[n][s]) {
                if (f.dim() != n - 1) return "face dimension wrong";
                if (f.ndim < 0 || f.ndim > dim() || f.id < 0 || f.id >= count_[f.ndim])
                    return "face reference out of range";
                if (!std::is_sorted(f.degen.begin(), f.degen.end())) return "degen not sorted";
                for (int v : f.degen)
                    if (v < 0 || v >= f.dim()) return "degen index out of range";
            }
        }
    }
    // simplicial identities d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= dim(); ++n)
        for (int s = 0; s < count_[n]; ++s) {
            Sx x{n, s, {}};
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    Sx a = face(face(x, j), i);
                    Sx b = face(face(x, i), j - 1);
                    if (!(a == b))
                        return "simplicial identity fails at dim " + std::to_string(n) +
                               " simplex " + std::to_string(s) + " (i=" + std::to_string(i) +
                               ",j=" + std::to_string(j) + ")";
                }
        }
    return std::nullopt;
}

std::vector<IntMat> SimplicialSet::boundary_matrices() const {
    std::vector<IntMat> ds;
    ds.push_back(IntMat(0, count(0)));
    for (int n = 1; n <= dim(); ++n) {
        IntMat d(count(n - 1), count(n));
        for (int s = 0; s < count(n); ++s)
            for (int i = 0; i <= n; ++i) {
                const Sx& f = faces_[n][s][i];
                if (f.nondegenerate()) d(f.id, s) += (i % 2 == 0) ? 1 : -1;
            }
        ds.push_back(d);
    }
    return ds;
}

std::vector<HomologyGroup> SimplicialSet::homology_groups() const {
    return homology(boundary_matrices());
}

SimplicialSet::Reduced SimplicialSet::reduced_homology() const {
    // augmented complex Z <- C_0 <- C_1 <- ...
    std::vector<IntMat> ds = boundary_matrices();
    std::vector<IntMat> aug;
    aug.push_back(IntMat(0, 1));
    IntMat e(1, count(0));
    for (int s = 0; s < count(0); ++s) e(0, s) = 1;
    aug.push_back(e);
    for (size_t n = 1; n < ds.size(); ++n) aug.push_back(ds[n]);
    auto h = homology(aug);
    Reduced r;
    r.h_minus_one = h[0];
    r.h.assign(h.begin() + 1, h.end());
    return r;
}

std::vector<Sx> SimplicialSet::all_simplices(int n) const {
    std::vector<Sx> out;
    for (int k = std::min(n, dim()); k >= 0; --k) {
        int extra = n - k;
        if (count(k) == 0) continue;
        // all sorted subsets of {0..n-1} of size extra
        std::vector<int> pick(extra);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            for (int id = 0; id < count(k); ++id) out.push_back(Sx{k, id, pick});
            if (extra == 0) break;
            int i = extra - 1;
            while (i >= 0 && pick[i] == n - extra + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialSet SimplicialSet::point() { return standard_simplex(0); }

SimplicialSet SimplicialSet::empty_set() { return SimplicialSet(); }

SimplicialSet SimplicialSet::discrete(int n_points) {
    SimplicialSet x;
    for (int i = 0; i < n_points; ++i) x.add_simplex(0, {});
    return x;
}

namespace {
// subsets of {0..n} of size k+1, ranked lexicographically
std::vector<std::vector<int>> subsets_of(int n, int k1) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k1);
    std::iota(pick.begin(), pick.end(), 0);
    if (k1 == 0 || k1 > n + 1) return out;
    while (true) {
        out.push_back(pick);
        int i = k1 - 1;
        while (i >= 0 && pick[i] == n - k1 + 1 + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

SimplicialSet simplex_like(int n, bool full) {
    SimplicialSet x;
    std::vector<std::map<std::vector<int>, int>> rank(n + 1);
    int top = full ? n : n - 1;
    for (int k = 0; k <= top; ++k) {
        for (const auto& vs : subsets_of(n, k + 1)) {
            std::vector<Sx> faces;
            if (k > 0)
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> f = vs;
                    f.erase(f.begin() + i);
                    faces.push_back(Sx{k - 1, rank[k - 1].at(f), {}});
                }
            rank[k][vs] = x.add_simplex(k, faces);
        }
    }
    return x;
}
} // namespace

SimplicialSet SimplicialSet::standard_simplex(int n) { return simplex_like(n, true); }
SimplicialSet SimplicialSet::boundary_simplex(int n) { return simplex_like(n, false); }

SimplicialSet SimplicialSet::sphere(int n) {
    assert(n >= 1);
    SimplicialSet x;
    x.add_simplex(0, {});
    std::vector<int> degen(n - 1);
    std::iota(degen.begin(), degen.end(), 0);
    Sx collapsed{0, 0, degen}; // (n-1)-fold degenerate base point
    x.add_simplex(n, std::vector<Sx>(n + 1, collapsed));
    return x;
}

Sx SimplicialMap::apply(const SimplicialSet& tgt, const Sx& x) const {
    const Sx& y = img[x.ndim][x.id];
    if (x.nondegenerate()) return y;
    return tgt.apply(y, surjection_from_set(x.degen, x.dim()));
}

SimplicialMap SimplicialMap::identity(const SimplicialSet& x) {
    SimplicialMap f;
    f.img.resize(x.dim() + 1);
    for (int n = 0; n <= x.dim(); ++n)
        for (int s = 0; s < x.count(n); ++s) f.img[n].push_back(Sx{n, s, {}});
    return f;
}

SimplicialMap SimplicialMap::compose(const SimplicialSet&, const SimplicialSet& tgt,
                                     const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap r;
    r.img.resize(f.img.size());
    for (size_t n = 0; n < f.img.size(); ++n)
        for (const Sx& y : f.img[n]) r.img[n].push_back(g.apply(tgt, y));
    return r;
}

SimplicialMap SimplicialMap::constant(const SimplicialSet& src, const SimplicialSet&,
                                      const Sx& vertex) {
    assert(vertex.dim() == 0);
    SimplicialMap f;
    f.img.resize(src.dim() + 1);
    for (int n = 0; n <= src.dim(); ++n) {
        std::vector<int> degen(n);
        std::iota(degen.begin(), degen.end(), 0);
        Sx c{vertex.ndim, vertex.id, degen};
        f.img[n].assign(src.count(n), c);
    }
    return f;
}

std::optional<std::string> validate_map(const SimplicialSet& src, const SimplicialSet& tgt,
                                        const SimplicialMap& f) {
    if ((int)f.img.size() < src.dim() + 1) return "image table too small";
    for (int n = 0; n <= src.dim(); ++n) {
        if ((int)f.img[n].size() != src.count(n)) return "image table size mismatch";
        for (int s = 0; s < src.count(n); ++s) {
            const Sx& y = f.img[n][s];
            if (y.dim() != n) return "image dimension wrong";
            if (y.ndim < 0 || y.ndim > tgt.dim() || y.id < 0 || y.id >= tgt.count(y.ndim))
                return "image out of range";
        }
    }
    for (int n = 1; n <= src.dim(); ++n)
        for (int s = 0; s < src.count(n); ++s)
            for (int i = 0; i <= n; ++i) {
                Sx lhs = f.apply(tgt, src.face(Sx{n, s, {}}, i));
                Sx rhs = tgt.face(f.img[n][s], i);
                if (!(lhs == rhs))
                    return "does not commute with face " + std::to_string(i) + " at dim " +
                           std::to_string(n) + " simplex " + std::to_string(s);
            }
    return std::nullopt;
}

bool is_isomorphism(const SimplicialSet& src, const SimplicialSet& tgt,
                    const SimplicialMap& f) {
    if (validate_map(src, tgt, f)) return false;
    if (src.dim() != tgt.dim()) {
        // allow trailing empty dimensions
        for (int n = std::min(src.dim(), tgt.dim()) + 1;
             n <= std::max(src.dim(), tgt.dim()); ++n)
            if (src.count(n) != 0 || tgt.count(n) != 0) return false;
    }
    for (int n = 0; n <= src.dim(); ++n) {
        if (src.count(n) != tgt.count(n)) return false;
        std::vector<bool> hit(tgt.count(n), false);
        for (int s = 0; s < src.count(n); ++s) {
            const Sx& y = f.img[n][s];
            if (!y.nondegenerate()) return false;
            if (hit[y.id]) return false;
            hit[y.id] = true;
        }
    }
    return true;
}

std::vector<SimplicialMap> all_simplicial_maps(const SimplicialSet& src,
                                               const SimplicialSet& tgt) {
    std::vector<SimplicialMap> out;
    SimplicialMap cur;
    cur.img.resize(src.dim() + 1);
    // candidates per dimension
    std::vector<std::vector<Sx>> cand(src.dim() + 1);
    for (int n = 0; n <= src.dim(); ++n) cand[n] = tgt.all_simplices(n);

    auto rec = [&](auto&& self, int n, int s) -> void {
        if (n > src.dim()) {
            out.push_back(cur);
            return;
        }
        if (s == src.count(n)) {
            self(self, n + 1, 0);
            return;
        }
        for (const Sx& y : cand[n]) {
            bool ok = true;
            for (int i = 0; i <= n && ok; ++i) {
                if (n == 0) break;
                Sx want = cur.apply(tgt, src.face(Sx{n, s, {}}, i));
                if (!(tgt.face(y, i) == want)) ok = false;
            }
            if (!ok) continue;
            cur.img[n].push_back(y);
            self(self, n, s + 1);
            cur.img[n].pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::optional<std::string> RawSS::validate() const {
    int d = dim();
    for (int n = 1; n <= d; ++n) {
        if ((int)face[n].size() != n + 1) return "face table shape";
        for (int i = 0; i <= n; ++i)
            if ((int)face[n][i].size() != count[n]) return "face table size";
    }
    for (int n = 0; n < d; ++n) {
        if ((int)degen[n].size() != n + 1) return "degen table shape";
        for (int i = 0; i <= n; ++i)
            if ((int)degen[n][i].size() != count[n]) return "degen table size";
    }
    return std::nullopt;
}

Rawified rawify(const SimplicialSet& x, int bound) {
    Rawified r;
    r.raw.count.assign(bound + 1, 0);
    r.raw.face.assign(bound + 1, {});
    r.raw.degen.assign(bound + 1, {});
    r.index_of.resize(bound + 1);
    r.sx_of.resize(bound + 1);
    for (int n = 0; n <= bound; ++n) {
        r.sx_of[n] = x.all_simplices(n);
        r.raw.count[n] = (int)r.sx_of[n].size();
        for (int s = 0; s < r.raw.count[n]; ++s) r.index_of[n][r.sx_of[n][s]] = s;
    }
    for (int n = 1; n <= bound; ++n) {
        r.raw.face[n].assign(n + 1, std::vector<int>(r.raw.count[n]));
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < r.raw.count[n]; ++s)
                r.raw.face[n][i][s] = r.index_of[n - 1].at(x.face(r.sx_of[n][s], i));
    }
    for (int n = 0; n < bound; ++n) {
        r.raw.degen[n].assign(n + 1, std::vector<int>(r.raw.count[n]));
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < r.raw.count[n]; ++s)
                r.raw.degen[n][i][s] = r.index_of[n + 1].at(x.degeneracy(r.sx_of[n][s], i));
    }
    return r;
}

Normalized normalize(const RawSS& raw) {
    Normalized out;
    int d = raw.dim();
    out.class_of.assign(d + 1, {});
    for (int n = 0; n <= d; ++n) out.class_of[n].assign(raw.count[n], Sx{});
    std::vector<std::vector<std::vector<Sx>>> pending_faces(d + 1);
    for (int n = 0; n <= d; ++n) {
        for (int s = 0; s < raw.count[n]; ++s) {
            int wit = -1;
            for (int i = 0; i < n && wit < 0; ++i)
                if (raw.degen[n - 1][i][raw.face[n][i][s]] == s) wit = i;
            if (wit < 0) {
                // nondegenerate: fresh simplex
                std::vector<Sx> fs;
                if (n > 0)
                    for (int i = 0; i <= n; ++i)
                        fs.push_back(out.class_of[n - 1][raw.face[n][i][s]]);
                int id = out.ss.add_simplex(n, fs);
                out.class_of[n][s] = Sx{n, id, {}};
            } else {
                const Sx& y = out.class_of[n - 1][raw.face[n][wit][s]];
                Monotone tau = mono_compose(surjection_from_set(y.degen, y.dim()),
                                            codegeneracy(n - 1, wit));
                std::vector<int> set;
                for (size_t i = 0; i + 1 < tau.size(); ++i)
                    if (tau[i] == tau[i + 1]) set.push_back((int)i);
                out.class_of[n][s] = Sx{y.ndim, y.id, set};
            }
        }
    }
    return out;
}

namespace {
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b); // keep smallest as root
    }
};
} // namespace

SsetColimit sset_colimit(const FinCat& shape, const std::vector<SimplicialSet>& value,
                         const std::vector<SimplicialMap>& arrow) {
    assert((int)value.size() == shape.n_obj && (int)arrow.size() == shape.n_mor());
    int bound = 0;
    for (const auto& v : value) bound = std::max(bound, v.dim());
    std::vector<Rawified> raws;
    for (const auto& v : value) raws.push_back(rawify(v, bound));
    std::vector<int> offset_base(shape.n_obj, 0);
    std::vector<std::vector<int>> offset(bound + 1, std::vector<int>(shape.n_obj, 0));
    std::vector<int> total(bound + 1, 0);
    for (int n = 0; n <= bound; ++n)
        for (int o = 0; o < shape.n_obj; ++o) {
            offset[n][o] = total[n];
            total[n] += raws[o].raw.count[n];
        }
    std::vector<UnionFind> uf;
    for (int n = 0; n <= bound; ++n) uf.emplace_back(total[n]);
    for (int m = 0; m < shape.n_mor(); ++m) {
        if (shape.is_id(m)) continue;
        int i = shape.src(m), j = shape.tgt(m);
        for (int n = 0; n <= bound; ++n)
            for (int s = 0; s < raws[i].raw.count[n]; ++s) {
                Sx image = arrow[m].apply(value[j], raws[i].sx_of[n][s]);
                uf[n].unite(offset[n][i] + s, offset[n][j] + raws[j].index_of[n].at(image));
            }
    }
    // contract classes
    RawSS q;
    q.count.assign(bound + 1, 0);
    q.face.assign(bound + 1, {});
    q.degen.assign(bound + 1, {});
    std::vector<std::vector<int>> cls(bound + 1); // raw total index -> class index
    std::vector<std::vector<int>> rep(bound + 1);
    for (int n = 0; n <= bound; ++n) {
        cls[n].assign(total[n], -1);
        for (int t = 0; t < total[n]; ++t) {
            int r = uf[n].find(t);
            if (cls[n][r] < 0) {
                cls[n][r] = q.count[n]++;
                rep[n].push_back(r);
            }
            cls[n][t] = cls[n][r];
        }
    }
    auto locate = [&](int n, int t) {
        // which object / local index
        int o = 0;
        while (o + 1 < shape.n_obj && offset[n][o + 1] <= t) ++o;
        return std::pair<int, int>{o, t - offset[n][o]};
    };
    for (int n = 1; n <= bound; ++n) {
        q.face[n].assign(n + 1, std::vector<int>(q.count[n]));
        for (int c = 0; c < q.count[n]; ++c) {
            auto [o, s] = locate(n, rep[n][c]);
            for (int i = 0; i <= n; ++i)
                q.face[n][i][c] = cls[n - 1][offset[n - 1][o] + raws[o].raw.face[n][i][s]];
        }
    }
    for (int n = 0; n < bound; ++n) {
        q.degen[n].assign(n + 1, std::vector<int>(q.count[n]));
        for (int c = 0; c < q.count[n]; ++c) {
            auto [o, s] = locate(n, rep[n][c]);
            for (int i = 0; i <= n; ++i)
                q.degen[n][i][c] = cls[n + 1][offset[n + 1][o] + raws[o].raw.degen[n][i][s]];
        }
    }
    Normalized nz = normalize(q);
    SsetColimit out;
    out.ss = nz.ss;
    for (int o = 0; o < shape.n_obj; ++o) {
        SimplicialMap inc;
        inc.img.resize(value[o].dim() + 1);
        for (int n = 0; n <= value[o].dim(); ++n)
            for (int s = 0; s < value[o].count(n); ++s) {
                int t = offset[n][o] + raws[o].index_of[n].at(Sx{n, s, {}});
                inc.img[n].push_back(nz.class_of[n][cls[n][t]]);
            }
        out.inclusion.push_back(inc);
    }
    return out;
}

SsetColimit sset_disjoint_union(const std::vector<SimplicialSet>& parts) {
    FinCat shape = FinCat::discrete((int)parts.size());
    std::vector<SimplicialMap> arrows;
    for (const auto& p : parts) arrows.push_back(SimplicialMap::identity(p));
    return sset_colimit(shape, parts, arrows);
}

SsetQuotient sset_quotient(const SimplicialSet& x, const std::vector<std::vector<bool>>& in_a) {
    // glue a separate point onto every subcomplex simplex
    int bound = x.dim();
    Rawified rx = rawify(x, bound);
    Rawified rp = rawify(SimplicialSet::point(), bound);
    std::vector<UnionFind> uf;
    std::vector<int> total(bound + 1);
    for (int n = 0; n <= bound; ++n) {
        total[n] = rx.raw.count[n] + rp.raw.count[n];
        uf.emplace_back(total[n]);
    }
    bool any = false;
    for (int n = 0; n <= bound; ++n)
        for (int s = 0; s < rx.raw.count[n]; ++s) {
            const Sx& sx = rx.sx_of[n][s];
            if (sx.ndim < (int)in_a.size() && sx.id < (int)in_a[sx.ndim].size() &&
                in_a[sx.ndim][sx.id]) {
                uf[n].unite(s, rx.raw.count[n]); // the unique point simplex
                any = true;
            }
        }
    (void)any;
    RawSS q;
    q.count.assign(bound + 1, 0);
    q.face.assign(bound + 1, {});
    q.degen.assign(bound + 1, {});
    std::vector<std::vector<int>> cls(bound + 1);
    std::vector<std::vector<int>> rep(bound + 1);
    for (int n = 0; n <= bound; ++n) {
        cls[n].assign(total[n], -1);
        for (int t = 0; t < total[n]; ++t) {
            int r = uf[n].find(t);
            if (cls[n][r] < 0) {
                cls[n][r] = q.count[n]++;
                rep[n].push_back(r);
            }
            cls[n][t] = cls[n][r];
        }
    }
    auto face_of = [&](int n, int t, int i) {
        if (t < rx.raw.count[n]) return cls[n - 1][rx.raw.face[n][i][t]];
        return cls[n - 1][rx.raw.count[n - 1] + rp.raw.face[n][i][t - rx.raw.count[n]]];
    };
    auto degen_of = [&](int n, int t, int i) {
        if (t < rx.raw.count[n]) return cls[n + 1][rx.raw.degen[n][i][t]];
        return cls[n + 1][rx.raw.count[n + 1] + rp.raw.degen[n][i][t - rx.raw.count[n]]];
    };
    for (int n = 1; n <= bound; ++n) {
        q.face[n].assign(n + 1, std::vector<int>(q.count[n]));
        for (int c = 0; c < q.count[n]; ++c)
            for (int i = 0; i <= n; ++i) q.face[n][i][c] = face_of(n, rep[n][c], i);
    }
    for (int n = 0; n < bound; ++n) {
        q.degen[n].assign(n + 1, std::vector<int>(q.count[n]));
        for (int c = 0; c < q.count[n]; ++c)
            for (int i = 0; i <= n; ++i) q.degen[n][i][c] = degen_of(n, rep[n][c], i);
    }
    Normalized nz = normalize(q);
    SsetQuotient out;
    out.ss = nz.ss;
    out.projection.img.resize(x.dim() + 1);
    for (int n = 0; n <= x.dim(); ++n)
        for (int s = 0; s < x.count(n); ++s) {
            int t = rx.index_of[n].at(Sx{n, s, {}});
            out.projection.img[n].push_back(nz.class_of[n][cls[n][t]]);
        }
    out.basepoint = nz.class_of[0][cls[0][rx.raw.count[0]]];
    return out;
}

SsetProduct sset_product(const SimplicialSet& x, const SimplicialSet& y) {
    SsetProduct out;
    int bound = x.dim() + y.dim();
    out.pair_index.resize(bound + 1);
    out.pair_of.resize(bound + 1);
    out.proj1.img.resize(bound + 1);
    out.proj2.img.resize(bound + 1);
    for (int n = 0; n <= bound; ++n) {
        for (const Sx& a : x.all_simplices(n))
            for (const Sx& b : y.all_simplices(n)) {
                // jointly nondegenerate: disjoint collapse sets
                std::vector<int> inter;
                std::set_intersection(a.degen.begin(), a.degen.end(), b.degen.begin(),
                                      b.degen.end(), std::back_inserter(inter));
                if (!inter.empty()) continue;
                std::vector<Sx> faces;
                if (n > 0)
                    for (int i = 0; i <= n; ++i)
                        faces.push_back(out.normalize_pair(x, y, x.face(a, i), y.face(b, i)));
                int id = out.ss.add_simplex(n, faces);
                out.pair_index[n][{a, b}] = id;
                out.pair_of[n].push_back({a, b});
                out.proj1.img[n].push_back(a);
                out.proj2.img[n].push_back(b);
            }
        if (out.ss.count(n) == 0 && n > 0) break; // no higher simplices possible
    }
    return out;
}

Sx SsetProduct::normalize_pair(const SimplicialSet& x, const SimplicialSet& y, Sx a,
                               Sx b) const {
    assert(a.dim() == b.dim());
    int m = a.dim();
    std::vector<int> t;
    std::set_intersection(a.degen.begin(), a.degen.end(), b.degen.begin(), b.degen.end(),
                          std::back_inserter(t));
    if (!t.empty()) {
        Monotone rho = surjection_from_set(t, m);
        int k = m - (int)t.size();
        Monotone iota(k + 1);
        for (int v = 0, i = 0; v <= k; ++v) {
            while (rho[i] != v) ++i;
            iota[v] = i;
        }
        a = x.apply(a, iota);
        b = y.apply(b, iota);
    }
    int k = a.dim();
    auto it = pair_index[k].find({a, b});
    assert(it != pair_index[k].end());
    return Sx{k, it->second, t};
}

Sx Nerve::simplex_of_string(const FinCat& c, const std::vector<int>& string) const {
    std::vector<int> nondeg, set;
    for (size_t k = 0; k < string.size(); ++k) {
        if (c.is_id(string[k]))
            set.push_back((int)k);
        else
            nondeg.push_back(string[k]);
    }
    int nd = (int)nondeg.size();
    if (nd == 0) {
        // all identities: vertex is the common object
        int obj = string.empty() ? -1 : c.mor[string[0]].src;
        assert(obj >= 0);
        return Sx{0, obj, set};
    }
    return Sx{nd, index[nd].at(nondeg), set};
}

int Nerve::vertex_object(const FinCat& c, int n, int id) const {
    if (n == 0) return id;
    return c.mor[strings[n][id][0]].src;
}

int Nerve::last_object(const FinCat& c, int n, int id) const {
    if (n == 0) return id;
    return c.mor[strings[n][id].back()].tgt;
}

Nerve nerve(const FinCat& c, std::optional<int> dim_bound) {
    int bound;
    if (dim_bound) {
        bound = *dim_bound;
    } else {
        if (!c.loop_free())
            throw UnboundedNerve("category has loops; supply an explicit dimension bound");
        bound = c.path_length_bound();
    }
    Nerve nv;
    nv.strings.resize(bound + 1);
    nv.index.resize(bound + 1);
    // dimension 0: objects in order
    for (int o = 0; o < c.n_obj; ++o) {
        nv.strings[0].push_back({});
        nv.ss.add_simplex(0, {});
    }
    for (int n = 1; n <= bound; ++n) {
        // extend strings in lexicographic order
        if (n == 1) {
            for (int m = 0; m < c.n_mor(); ++m) {
                if (c.is_id(m)) continue;
                nv.index[1][{m}] = (int)nv.strings[1].size();
                nv.strings[1].push_back({m});
            }
        } else {
            for (const auto& s : nv.strings[n - 1]) {
                for (int m = 0; m < c.n_mor(); ++m) {
                    if (c.is_id(m) || c.mor[m].src != c.mor[s.back()].tgt) continue;
                    std::vector<int> ext = s;
                    ext.push_back(m);
                    nv.index[n][ext] = (int)nv.strings[n].size();
                    nv.strings[n].push_back(ext);
                }
            }
        }
        for (const auto& s : nv.strings[n]) {
            std::vector<Sx> faces;
            for (int i = 0; i <= n; ++i) {
                std::vector<int> f;
                if (i == 0)
                    f.assign(s.begin() + 1, s.end());
                else if (i == n)
                    f.assign(s.begin(), s.end() - 1);
                else {
                    f.assign(s.begin(), s.end());
                    f[i - 1] = c.comp[s[i]][s[i - 1]];
                    f.erase(f.begin() + i);
                }
                if (n == 1 && f.empty()) {
                    int obj = i == 0 ? c.mor[s[0]].tgt : c.mor[s[0]].src;
                    faces.push_back(Sx{0, obj, {}});
                } else {
                    faces.push_back(nv.simplex_of_string(c, f));
                }
            }
            nv.ss.add_simplex(n, std::move(faces));
        }
        if (nv.strings[n].empty()) break;
    }
    return nv;
}

SimplicialMap nerve_map(const FinCat& c, const FinCat& d, const Functor& f, const Nerve& nc,
                        const Nerve& nd) {
    (void)d;
    SimplicialMap r;
    r.img.resize(nc.ss.dim() + 1);
    for (int n = 0; n <= nc.ss.dim(); ++n)
        for (int s = 0; s < nc.ss.count(n); ++s) {
            if (n == 0) {
                r.img[0].push_back(Sx{0, f.obj[s], {}});
            } else {
                std::vector<int> image;
                for (int m : nc.strings[n][s]) image.push_back(f.mor[m]);
                r.img[n].push_back(nd.simplex_of_string(d, image));
            }
        }
    return r;
}

std::optional<std::string> GSimplicialSet::validate() const {
    if ((int)action.size() != group.order) return "action table size mismatch";
    for (int g = 0; g < group.order; ++g)
        if (auto e = validate_map(ss, ss, action[g]))
            return "action of " + std::to_string(g) + ": " + *e;
    if (!(action[0] == SimplicialMap::identity(ss))) return "identity acts nontrivially";
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h) {
            SimplicialMap gh = SimplicialMap::compose(ss, ss, action[g], action[h]);
            if (!(gh == action[group.mul[g][h]])) return "action not a homomorphism";
        }
    // automorphisms: nondegenerate simplices map to nondegenerate ones
    for (int g = 0; g < group.order; ++g)
        for (int n = 0; n <= ss.dim(); ++n)
            for (int s = 0; s < ss.count(n); ++s)
                if (!action[g].img[n][s].nondegenerate())
                    return "action of " + std::to_string(g) + " is not an automorphism";
    return std::nullopt;
}

GSimplicialSet::Fixed GSimplicialSet::fixed_points(const Subgroup& h) const {
    Fixed out;
    std::vector<std::vector<int>> pos(ss.dim() + 1);
    out.id_embed.resize(ss.dim() + 1);
    for (int n = 0; n <= ss.dim(); ++n) {
        pos[n].assign(ss.count(n), -1);
        for (int s = 0; s < ss.count(n); ++s) {
            bool fixed = true;
            for (int x : h.elements)
                if (!(action[x].img[n][s] == Sx{n, s, {}})) fixed = false;
            if (!fixed) continue;
            std::vector<Sx> faces;
            if (n > 0)
                for (int i = 0; i <= n; ++i) {
                    Sx f = ss.face(Sx{n, s, {}}, i);
                    assert(pos[f.ndim][f.id] >= 0); // faces of fixed simplices are fixed
                    faces.push_back(Sx{f.ndim, pos[f.ndim][f.id], f.degen});
                }
            pos[n][s] = out.ss.add_simplex(n, faces);
            out.id_embed[n].push_back(s);
        }
    }
    out.include.img.resize(out.ss.dim() + 1);
    for (int n = 0; n <= out.ss.dim(); ++n)
        for (int s = 0; s < out.ss.count(n); ++s)
            out.include.img[n].push_back(Sx{n, out.id_embed[n][s], {}});
    return out;
}

GSimplicialSet GSimplicialSet::restrict(const Subgroup& h) const {
    GSimplicialSet r;
    r.ss = ss;
    r.group = subgroup_as_group(h);
    for (int x : h.elements) r.action.push_back(action[x]);
    return r;
}

GSimplicialSet GSimplicialSet::trivial(const SimplicialSet& x, const FinGroup& g) {
    GSimplicialSet r;
    r.ss = x;
    r.group = g;
    r.action.assign(g.order, SimplicialMap::identity(x));
    return r;
}

GSimplicialSet equivariant_nerve(const GCatAction& act, const Nerve& nv) {
    GSimplicialSet r;
    r.ss = nv.ss;
    r.group = act.group;
    for (int g = 0; g < act.group.order; ++g)
        r.action.push_back(nerve_map(act.cat, act.cat, act.a[g], nv, nv));
    return r;
}

} // namespace gdh

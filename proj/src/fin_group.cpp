#include "gdh/fin_group.hpp"

#include <cassert>
#include <map>
#include <set>

namespace gdh {

FinGroup FinGroup::cyclic(int n) {
    assert(n >= 1);
    FinGroup g;
    g.order = n;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
        g.inv[a] = (n - a) % n;
    }
    return g;
}

FinGroup FinGroup::symmetric(int n) {
    assert(n >= 1 && n <= 5);
    std::vector<std::vector<int>> gens;
    if (n >= 2) {
        std::vector<int> t(n);
        for (int i = 0; i < n; ++i) t[i] = i;
        std::swap(t[0], t[1]);
        gens.push_back(t);
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
        gens.push_back(c);
    }
    return group_from_permutation_generators(n, gens);
}

std::optional<std::string> FinGroup::validate() const {
    int n = order;
    if (n < 1) return "order must be positive";
    if ((int)mul.size() != n || (int)inv.size() != n) return "table size mismatch";
    for (int a = 0; a < n; ++a) {
        if ((int)mul[a].size() != n) return "table size mismatch";
        for (int b = 0; b < n; ++b)
            if (mul[a][b] < 0 || mul[a][b] >= n) return "table entry out of range";
    }
    for (int a = 0; a < n; ++a) {
        if (mul[0][a] != a || mul[a][0] != a) return "identity law fails at " + std::to_string(a);
        if (mul[a][inv[a]] != 0 || mul[inv[a]][a] != 0)
            return "inverse law fails at " + std::to_string(a);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    return "associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")";
    return std::nullopt;
}

namespace {
std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
    // (f*g)(x) = f(g(x))
    std::vector<int> r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}
} // namespace

FinGroup group_from_permutation_generators(int n, const std::vector<std::vector<int>>& gens,
                                           std::vector<std::vector<int>>* perms) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            assert((int)g.size() == n);
            auto p = compose_perm(g, elems[head]);
            if (!index.count(p)) {
                index[p] = (int)elems.size();
                elems.push_back(p);
            }
        }
    }
    int m = (int)elems.size();
    FinGroup grp;
    grp.order = m;
    grp.mul.assign(m, std::vector<int>(m));
    grp.inv.assign(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) grp.mul[a][b] = index.at(compose_perm(elems[a], elems[b]));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (grp.mul[a][b] == 0) grp.inv[a] = b;
    if (perms) *perms = elems;
    return grp;
}

std::optional<std::string> Subgroup::validate() const {
    if (elements.empty() || elements[0] != 0) return "subgroup must contain identity";
    if (!std::is_sorted(elements.begin(), elements.end())) return "elements not sorted";
    for (int a : elements) {
        if (a < 0 || a >= parent.order) return "element out of range";
        if (!contains(parent.inv[a])) return "not closed under inverse";
        for (int b : elements)
            if (!contains(parent.mul[a][b])) return "not closed under multiplication";
    }
    return std::nullopt;
}

Subgroup Subgroup::conjugate(int g) const {
    Subgroup r{parent, {}};
    for (int h : elements) r.elements.push_back(parent.conj(g, h));
    std::sort(r.elements.begin(), r.elements.end());
    return r;
}

std::vector<Subgroup> subgroups(const FinGroup& g) {
    std::set<std::vector<int>> found;
    found.insert({0});
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::vector<int>> next = found;
        for (const auto& h : found) {
            for (int x = 1; x < g.order; ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                std::set<int> cl(h.begin(), h.end());
                cl.insert(x);
                bool changed = true;
                while (changed) {
                    changed = false;
                    std::vector<int> cur(cl.begin(), cl.end());
                    for (int a : cur)
                        for (int b : cur)
                            if (cl.insert(g.mul[a][b]).second) changed = true;
                    for (int a : cur)
                        if (cl.insert(g.inv[a]).second) changed = true;
                }
                std::vector<int> v(cl.begin(), cl.end());
                if (next.insert(v).second) grew = true;
            }
        }
        found = next;
    }
    std::vector<Subgroup> r;
    for (const auto& v : found) r.push_back(Subgroup{g, v});
    std::sort(r.begin(), r.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return r;
}

GSet GSet::trivial(const FinGroup& g, int n) {
    GSet s;
    s.group = g;
    s.size = n;
    s.act.assign(g.order, std::vector<int>(n));
    for (int e = 0; e < g.order; ++e)
        for (int i = 0; i < n; ++i) s.act[e][i] = i;
    return s;
}

GSet GSet::cosets(const FinGroup& g, const Subgroup& h) {
    std::vector<int> rep_of(g.order, -1), reps;
    for (int a = 0; a < g.order; ++a) {
        if (rep_of[a] >= 0) continue;
        int idx = (int)reps.size();
        for (int x : h.elements) rep_of[g.mul[a][x]] = idx;
        reps.push_back(a);
    }
    GSet s;
    s.group = g;
    s.size = (int)reps.size();
    s.act.assign(g.order, std::vector<int>(s.size));
    for (int e = 0; e < g.order; ++e)
        for (int i = 0; i < s.size; ++i) s.act[e][i] = rep_of[g.mul[e][reps[i]]];
    return s;
}

GSet GSet::disjoint_union(const GSet& o) const {
    assert(group == o.group);
    GSet s;
    s.group = group;
    s.size = size + o.size;
    s.act.assign(group.order, std::vector<int>(s.size));
    for (int e = 0; e < group.order; ++e) {
        for (int i = 0; i < size; ++i) s.act[e][i] = act[e][i];
        for (int i = 0; i < o.size; ++i) s.act[e][size + i] = size + o.act[e][i];
    }
    return s;
}

std::optional<std::string> GSet::validate() const {
    if ((int)act.size() != group.order) return "action table size mismatch";
    for (int e = 0; e < group.order; ++e) {
        if ((int)act[e].size() != size) return "action table size mismatch";
        for (int s = 0; s < size; ++s)
            if (act[e][s] < 0 || act[e][s] >= size) return "action out of range";
    }
    for (int s = 0; s < size; ++s)
        if (act[0][s] != s) return "identity does not act trivially";
    for (int a = 0; a < group.order; ++a)
        for (int b = 0; b < group.order; ++b)
            for (int s = 0; s < size; ++s)
                if (act[group.mul[a][b]][s] != act[a][act[b][s]])
                    return "action not compatible with multiplication";
    return std::nullopt;
}

Subgroup GSet::stabilizer(int s) const {
    Subgroup h{group, {}};
    for (int e = 0; e < group.order; ++e)
        if (act[e][s] == s) h.elements.push_back(e);
    return h;
}

std::vector<std::vector<int>> GSet::orbits() const {
    std::vector<std::vector<int>> r;
    std::vector<bool> seen(size, false);
    for (int s = 0; s < size; ++s) {
        if (seen[s]) continue;
        std::set<int> orb;
        for (int e = 0; e < group.order; ++e) orb.insert(act[e][s]);
        for (int x : orb) seen[x] = true;
        r.emplace_back(orb.begin(), orb.end());
    }
    return r;
}

int GSet::orbit_rep(int s) const {
    int best = s;
    for (int e = 0; e < group.order; ++e) best = std::min(best, act[e][s]);
    return best;
}

bool GSet::is_free() const {
    for (int s = 0; s < size; ++s)
        if (stabilizer(s).order() != 1) return false;
    return true;
}

std::vector<int> GSet::fixed_points(const Subgroup& h) const {
    std::vector<int> r;
    for (int s = 0; s < size; ++s) {
        bool fixed = true;
        for (int e : h.elements)
            if (act[e][s] != s) {
                fixed = false;
                break;
            }
        if (fixed) r.push_back(s);
    }
    return r;
}

FinGroup subgroup_as_group(const Subgroup& h) {
    const FinGroup& g = h.parent;
    int m = h.order();
    std::vector<int> pos(g.order, -1);
    for (int i = 0; i < m; ++i) pos[h.elements[i]] = i;
    FinGroup r;
    r.order = m;
    r.mul.assign(m, std::vector<int>(m));
    r.inv.assign(m, 0);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) r.mul[a][b] = pos[g.mul[h.elements[a]][h.elements[b]]];
        r.inv[a] = pos[g.inv[h.elements[a]]];
    }
    return r;
}

GSet restrict_gset(const GSet& x, const Subgroup& h) {
    GSet s;
    s.group = subgroup_as_group(h);
    s.size = x.size;
    s.act.assign(h.order(), std::vector<int>(x.size));
    for (int i = 0; i < h.order(); ++i) s.act[i] = x.act[h.elements[i]];
    return s;
}

std::vector<int> coset_section(const FinGroup& g, const Subgroup& h) {
    std::vector<int> reps;
    std::vector<bool> seen(g.order, false);
    for (int a = 0; a < g.order; ++a) {
        if (seen[a]) continue;
        reps.push_back(a);
        for (int x : h.elements) seen[g.mul[a][x]] = true;
    }
    return reps;
}

} // namespace gdh

#include "gdh/fin_cat.hpp"

#include <cassert>
#include <map>
#include <set>

namespace gdh {

int FinCat::compose(int f, int g) const {
    assert(mor[g].tgt == mor[f].src);
    int r = comp[f][g];
    assert(r >= 0);
    return r;
}

std::vector<int> FinCat::hom(int i, int j) const {
    std::vector<int> r;
    for (int f = 0; f < n_mor(); ++f)
        if (mor[f].src == i && mor[f].tgt == j) r.push_back(f);
    return r;
}

std::optional<std::string> FinCat::validate() const {
    if (n_obj < 0) return "negative object count";
    if ((int)id.size() != n_obj) return "identity table size mismatch";
    for (int o = 0; o < n_obj; ++o) {
        int e = id[o];
        if (e < 0 || e >= n_mor()) return "identity index out of range";
        if (mor[e].src != o || mor[e].tgt != o) return "identity endpoints wrong";
    }
    for (const auto& m : mor)
        if (m.src < 0 || m.src >= n_obj || m.tgt < 0 || m.tgt >= n_obj)
            return "morphism endpoints out of range";
    if ((int)comp.size() != n_mor()) return "composition table size mismatch";
    for (int f = 0; f < n_mor(); ++f) {
        if ((int)comp[f].size() != n_mor()) return "composition table size mismatch";
        for (int g = 0; g < n_mor(); ++g) {
            bool composable = mor[g].tgt == mor[f].src;
            if (composable != (comp[f][g] >= 0))
                return "composition defined off composable pairs at (" + std::to_string(f) +
                       "," + std::to_string(g) + ")";
            if (!composable) continue;
            int h = comp[f][g];
            if (h < 0 || h >= n_mor()) return "composite out of range";
            if (mor[h].src != mor[g].src || mor[h].tgt != mor[f].tgt)
                return "composite endpoints wrong";
        }
    }
    for (int f = 0; f < n_mor(); ++f) {
        if (comp[f][id[mor[f].src]] != f || comp[id[mor[f].tgt]][f] != f)
            return "unit law fails at morphism " + std::to_string(f);
    }
    for (int f = 0; f < n_mor(); ++f)
        for (int g = 0; g < n_mor(); ++g) {
            if (mor[g].tgt != mor[f].src) continue;
            for (int h = 0; h < n_mor(); ++h) {
                if (mor[h].tgt != mor[g].src) continue;
                if (comp[comp[f][g]][h] != comp[f][comp[g][h]])
                    return "associativity fails at (" + std::to_string(f) + "," +
                           std::to_string(g) + "," + std::to_string(h) + ")";
            }
        }
    return std::nullopt;
}

bool FinCat::loop_free() const {
    for (int f = 0; f < n_mor(); ++f)
        if (mor[f].src == mor[f].tgt && !is_id(f)) return false;
    // reachability between distinct objects must be acyclic
    std::vector<std::vector<bool>> reach(n_obj, std::vector<bool>(n_obj, false));
    for (int f = 0; f < n_mor(); ++f)
        if (!is_id(f)) reach[mor[f].src][mor[f].tgt] = true;
    for (int k = 0; k < n_obj; ++k)
        for (int i = 0; i < n_obj; ++i)
            for (int j = 0; j < n_obj; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (int i = 0; i < n_obj; ++i)
        if (reach[i][i]) return false;
    return true;
}

int FinCat::path_length_bound() const {
    assert(loop_free());
    // longest chain of non-identity morphisms, DP on DAG
    std::vector<int> best(n_obj, 0);
    bool changed = true;
    int guard = 0;
    while (changed) {
        changed = false;
        if (++guard > n_obj + 2) break;
        for (int f = 0; f < n_mor(); ++f) {
            if (is_id(f)) continue;
            if (best[mor[f].src] + 1 > best[mor[f].tgt]) {
                best[mor[f].tgt] = best[mor[f].src] + 1;
                changed = true;
            }
        }
    }
    int r = 0;
    for (int o = 0; o < n_obj; ++o) r = std::max(r, best[o]);
    return r;
}

FinCat FinCat::opposite() const {
    FinCat c = *this;
    for (auto& m : c.mor) std::swap(m.src, m.tgt);
    c.comp.assign(n_mor(), std::vector<int>(n_mor(), -1));
    for (int f = 0; f < n_mor(); ++f)
        for (int g = 0; g < n_mor(); ++g)
            if (comp[f][g] >= 0) c.comp[g][f] = comp[f][g];
    return c;
}

FinCat FinCat::point() { return discrete(1); }

FinCat FinCat::discrete(int n) {
    FinCat c;
    c.n_obj = n;
    for (int o = 0; o < n; ++o) {
        c.id.push_back((int)c.mor.size());
        c.mor.push_back({o, o});
    }
    c.build_comp([&](int f, int) { return f; });
    return c;
}

FinCat FinCat::linear(int n) {
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) leq[i][j] = true;
    return poset(leq);
}

FinCat FinCat::poset(const std::vector<std::vector<bool>>& leq) {
    int n = (int)leq.size();
    FinCat c;
    c.n_obj = n;
    c.id.assign(n, -1);
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq[i][j]) {
                idx[i][j] = (int)c.mor.size();
                c.mor.push_back({i, j});
                if (i == j) c.id[i] = idx[i][j];
            }
    c.build_comp([&](int f, int g) { return idx[c.mor[g].src][c.mor[f].tgt]; });
    return c;
}

Functor Functor::identity(const FinCat& c) {
    Functor f;
    f.obj.resize(c.n_obj);
    f.mor.resize(c.n_mor());
    for (int o = 0; o < c.n_obj; ++o) f.obj[o] = o;
    for (int m = 0; m < c.n_mor(); ++m) f.mor[m] = m;
    return f;
}

Functor Functor::constant(const FinCat& src, const FinCat& tgt, int object) {
    Functor f;
    f.obj.assign(src.n_obj, object);
    f.mor.assign(src.n_mor(), tgt.id[object]);
    return f;
}

Functor Functor::compose(const FinCat& a, const Functor& g, const Functor& f) {
    Functor r;
    r.obj.resize(a.n_obj);
    r.mor.resize(a.n_mor());
    for (int o = 0; o < a.n_obj; ++o) r.obj[o] = g.obj[f.obj[o]];
    for (int m = 0; m < a.n_mor(); ++m) r.mor[m] = g.mor[f.mor[m]];
    return r;
}

std::optional<std::string> validate_functor(const FinCat& src, const FinCat& tgt,
                                            const Functor& f) {
    if ((int)f.obj.size() != src.n_obj || (int)f.mor.size() != src.n_mor())
        return "functor table size mismatch";
    for (int o = 0; o < src.n_obj; ++o)
        if (f.obj[o] < 0 || f.obj[o] >= tgt.n_obj) return "object image out of range";
    for (int m = 0; m < src.n_mor(); ++m) {
        int fm = f.mor[m];
        if (fm < 0 || fm >= tgt.n_mor()) return "morphism image out of range";
        if (tgt.mor[fm].src != f.obj[src.mor[m].src] || tgt.mor[fm].tgt != f.obj[src.mor[m].tgt])
            return "morphism image endpoints wrong at " + std::to_string(m);
    }
    for (int o = 0; o < src.n_obj; ++o)
        if (f.mor[src.id[o]] != tgt.id[f.obj[o]])
            return "identity not preserved at object " + std::to_string(o);
    for (int m = 0; m < src.n_mor(); ++m)
        for (int k = 0; k < src.n_mor(); ++k) {
            if (src.mor[k].tgt != src.mor[m].src) continue;
            if (f.mor[src.comp[m][k]] != tgt.comp[f.mor[m]][f.mor[k]])
                return "composition not preserved at (" + std::to_string(m) + "," +
                       std::to_string(k) + ")";
        }
    return std::nullopt;
}

GCatAction GCatAction::trivial(const FinCat& c, const FinGroup& g) {
    GCatAction r;
    r.cat = c;
    r.group = g;
    r.a.assign(g.order, Functor::identity(c));
    return r;
}

std::optional<std::string> GCatAction::validate() const {
    if (auto e = cat.validate()) return "category: " + *e;
    if (auto e = group.validate()) return "group: " + *e;
    if ((int)a.size() != group.order) return "action table size mismatch";
    for (int g = 0; g < group.order; ++g)
        if (auto e = validate_functor(cat, cat, a[g]))
            return "a(" + std::to_string(g) + ") not a functor: " + *e;
    Functor idf = Functor::identity(cat);
    if (!(a[0].obj == idf.obj && a[0].mor == idf.mor)) return "a(e) is not the identity";
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h) {
            Functor gh = Functor::compose(cat, a[g], a[h]);
            int p = group.mul[g][h];
            if (!(gh.obj == a[p].obj && gh.mor == a[p].mor))
                return "a(g).a(h) != a(gh) at (" + std::to_string(g) + "," + std::to_string(h) +
                       ")";
        }
    return std::nullopt;
}

Subgroup GCatAction::stabilizer(int object) const {
    Subgroup s{group, {}};
    for (int g = 0; g < group.order; ++g)
        if (a[g].obj[object] == object) s.elements.push_back(g);
    return s;
}

GCatAction GCatAction::restrict(const Subgroup& h) const {
    GCatAction r;
    r.cat = cat;
    r.group = subgroup_as_group(h);
    for (int x : h.elements) r.a.push_back(a[x]);
    return r;
}

GCatAction GCatAction::opposite() const {
    GCatAction r;
    r.cat = cat.opposite();
    r.group = group;
    r.a = a; // same index tables work on the opposite category
    return r;
}

FinCat GCatAction::fixed_subcategory(const Subgroup& h, std::vector<int>* obj_embed,
                                     std::vector<int>* mor_embed) const {
    std::vector<int> objs, mors;
    std::vector<int> obj_pos(cat.n_obj, -1), mor_pos(cat.n_mor(), -1);
    for (int o = 0; o < cat.n_obj; ++o) {
        bool fixed = true;
        for (int x : h.elements)
            if (a[x].obj[o] != o) fixed = false;
        if (fixed) {
            obj_pos[o] = (int)objs.size();
            objs.push_back(o);
        }
    }
    for (int m = 0; m < cat.n_mor(); ++m) {
        if (obj_pos[cat.mor[m].src] < 0 || obj_pos[cat.mor[m].tgt] < 0) continue;
        bool fixed = true;
        for (int x : h.elements)
            if (a[x].mor[m] != m) fixed = false;
        if (fixed) {
            mor_pos[m] = (int)mors.size();
            mors.push_back(m);
        }
    }
    FinCat c;
    c.n_obj = (int)objs.size();
    c.id.assign(c.n_obj, -1);
    for (int m : mors) c.mor.push_back({obj_pos[cat.mor[m].src], obj_pos[cat.mor[m].tgt]});
    for (int i = 0; i < c.n_obj; ++i) c.id[i] = mor_pos[cat.id[objs[i]]];
    c.build_comp([&](int f, int g) { return mor_pos[cat.comp[mors[f]][mors[g]]]; });
    if (obj_embed) *obj_embed = objs;
    if (mor_embed) *mor_embed = mors;
    return c;
}

GCatAction poset_category(int n, const std::vector<std::pair<int, int>>& strict_pairs,
                          const GSet& action) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (auto [i, j] : strict_pairs) leq[i][j] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq[i][j] && leq[j][i])
                throw NotAPartialOrder("cycle through elements " + std::to_string(i) + " and " +
                                       std::to_string(j));
    assert(action.size == n);
    for (int g = 0; g < action.group.order; ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (leq[i][j] && !leq[action.a(g, i)][action.a(g, j)])
                    throw ActionNotMonotone("element " + std::to_string(g) +
                                            " does not preserve the order");
    GCatAction r;
    r.cat = FinCat::poset(leq);
    r.group = action.group;
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    for (int m = 0; m < r.cat.n_mor(); ++m) idx[r.cat.mor[m].src][r.cat.mor[m].tgt] = m;
    for (int g = 0; g < action.group.order; ++g) {
        Functor f;
        f.obj.resize(n);
        for (int i = 0; i < n; ++i) f.obj[i] = action.a(g, i);
        f.mor.resize(r.cat.n_mor());
        for (int m = 0; m < r.cat.n_mor(); ++m)
            f.mor[m] = idx[action.a(g, r.cat.mor[m].src)][action.a(g, r.cat.mor[m].tgt)];
        r.a.push_back(f);
    }
    return r;
}

GCatAction subset_poset(const GSet& j, bool remove_empty, bool remove_full,
                        std::vector<unsigned>* object_mask) {
    int n = j.size;
    assert(n <= 20);
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m) {
        if (remove_empty && m == 0) continue;
        if (remove_full && m + 1 == (1u << n)) continue;
        masks.push_back(m);
    }
    auto act_mask = [&](int g, unsigned m) {
        unsigned r = 0;
        for (int s = 0; s < n; ++s)
            if (m & (1u << s)) r |= 1u << j.a(g, s);
        return r;
    };
    std::map<unsigned, int> pos;
    for (size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = (int)i;
    std::vector<std::pair<int, int>> pairs;
    for (unsigned u : masks)
        for (unsigned v : masks)
            if (u != v && (u & v) == u) pairs.push_back({pos[u], pos[v]});
    GSet act;
    act.group = j.group;
    act.size = (int)masks.size();
    act.act.assign(j.group.order, std::vector<int>(masks.size()));
    for (int g = 0; g < j.group.order; ++g)
        for (size_t i = 0; i < masks.size(); ++i) act.act[g][i] = pos.at(act_mask(g, masks[i]));
    if (object_mask) *object_mask = masks;
    return poset_category((int)masks.size(), pairs, act);
}

FinCat grothendieck_total(const FinCat& base, const CatDiagram& psi,
                          std::vector<std::pair<int, int>>* obj_label,
                          std::vector<std::pair<int, int>>* mor_label) {
    assert((int)psi.fiber.size() == base.n_obj && (int)psi.transport.size() == base.n_mor());
    FinCat c;
    std::vector<std::pair<int, int>> objs, mors;
    std::vector<std::vector<int>> obj_pos(base.n_obj);
    for (int b = 0; b < base.n_obj; ++b) {
        obj_pos[b].resize(psi.fiber[b].n_obj);
        for (int x = 0; x < psi.fiber[b].n_obj; ++x) {
            obj_pos[b][x] = (int)objs.size();
            objs.push_back({b, x});
        }
    }
    c.n_obj = (int)objs.size();
    c.id.assign(c.n_obj, -1);
    // morphisms enumerated as (base mor f, fiber object x at src f, xi: transport[f](x) -> x')
    std::map<std::tuple<int, int, int>, int> mor_pos3;
    for (int f = 0; f < base.n_mor(); ++f) {
        int b0 = base.mor[f].src, b1 = base.mor[f].tgt;
        for (int x = 0; x < psi.fiber[b0].n_obj; ++x) {
            int tx = psi.transport[f].obj[x];
            for (int xi = 0; xi < psi.fiber[b1].n_mor(); ++xi) {
                if (psi.fiber[b1].mor[xi].src != tx) continue;
                mor_pos3[{f, x, xi}] = (int)mors.size();
                mors.push_back({f, xi});
                c.mor.push_back({obj_pos[b0][x], obj_pos[b1][psi.fiber[b1].mor[xi].tgt]});
            }
        }
    }
    std::vector<std::tuple<int, int, int>> mor_key(mors.size());
    for (const auto& [k, v] : mor_pos3) mor_key[v] = k;
    for (int b = 0; b < base.n_obj; ++b)
        for (int x = 0; x < psi.fiber[b].n_obj; ++x)
            c.id[obj_pos[b][x]] = mor_pos3.at({base.id[b], x, psi.fiber[b].id[x]});
    c.build_comp([&](int m2, int m1) {
        // m1 first: (f, x, xi), then m2 = (f', y=tgt in fiber, xi')
        auto [f1, x1, xi1] = mor_key[m1];
        auto [f2, x2, xi2] = mor_key[m2];
        int fb = base.comp[f2][f1];
        int b2 = base.mor[f2].tgt;
        // composite fiber part: xi2 . transport[f2](xi1)
        int txi1 = psi.transport[f2].mor[xi1];
        int xic = psi.fiber[b2].comp[xi2][txi1];
        return mor_pos3.at({fb, x1, xic});
    });
    if (obj_label) *obj_label = objs;
    if (mor_label) *mor_label = mors;
    return c;
}

FinCat grothendieck(const GCatAction& action, std::vector<std::pair<int, int>>* mor_label) {
    // base = group as a one-object category, morphism index = group element
    FinCat base;
    base.n_obj = 1;
    base.id = {0};
    for (int g = 0; g < action.group.order; ++g) base.mor.push_back({0, 0});
    base.build_comp([&](int f, int g) { return action.group.mul[f][g]; });
    CatDiagram psi;
    psi.fiber = {action.cat};
    psi.transport = action.a;
    return grothendieck_total(base, psi, nullptr, mor_label);
}

CommaCat comma_over(const FinCat& c, const FinCat& d, const Functor& f, int j) {
    CommaCat r;
    std::map<std::pair<int, int>, int> obj_pos;
    for (int x = 0; x < c.n_obj; ++x)
        for (int alpha = 0; alpha < d.n_mor(); ++alpha) {
            if (d.mor[alpha].src != f.obj[x] || d.mor[alpha].tgt != j) continue;
            obj_pos[{x, alpha}] = (int)r.obj_label.size();
            r.obj_label.push_back({x, alpha});
        }
    r.cat.n_obj = (int)r.obj_label.size();
    r.cat.id.assign(r.cat.n_obj, -1);
    // morphisms: m: x -> x' with alpha' . f(m) = alpha
    std::map<std::tuple<int, int, int>, int> mor_pos; // (obj, obj', m)
    for (int o = 0; o < r.cat.n_obj; ++o)
        for (int o2 = 0; o2 < r.cat.n_obj; ++o2) {
            auto [x, alpha] = r.obj_label[o];
            auto [x2, alpha2] = r.obj_label[o2];
            for (int m = 0; m < c.n_mor(); ++m) {
                if (c.mor[m].src != x || c.mor[m].tgt != x2) continue;
                if (d.comp[alpha2][f.mor[m]] != alpha) continue;
                mor_pos[{o, o2, m}] = r.cat.n_mor();
                r.cat.mor.push_back({o, o2});
                r.mor_to_src.push_back(m);
            }
        }
    for (int o = 0; o < r.cat.n_obj; ++o)
        r.cat.id[o] = mor_pos.at({o, o, c.id[r.obj_label[o].first]});
    r.cat.build_comp([&](int m2, int m1) {
        int cm = c.comp[r.mor_to_src[m2]][r.mor_to_src[m1]];
        return mor_pos.at({r.cat.mor[m1].src, r.cat.mor[m2].tgt, cm});
    });
    r.projection.obj.resize(r.cat.n_obj);
    for (int o = 0; o < r.cat.n_obj; ++o) r.projection.obj[o] = r.obj_label[o].first;
    r.projection.mor = r.mor_to_src;
    return r;
}

CommaCat comma_under(const FinCat& c, const FinCat& d, const Functor& f, int j) {
    // objects (x, alpha: j -> Fx); morphisms m: x -> x' with f(m) . alpha = alpha'
    CommaCat r;
    std::map<std::pair<int, int>, int> obj_pos;
    for (int x = 0; x < c.n_obj; ++x)
        for (int alpha = 0; alpha < d.n_mor(); ++alpha) {
            if (d.mor[alpha].src != j || d.mor[alpha].tgt != f.obj[x]) continue;
            obj_pos[{x, alpha}] = (int)r.obj_label.size();
            r.obj_label.push_back({x, alpha});
        }
    r.cat.n_obj = (int)r.obj_label.size();
    r.cat.id.assign(r.cat.n_obj, -1);
    std::map<std::tuple<int, int, int>, int> mor_pos;
    for (int o = 0; o < r.cat.n_obj; ++o)
        for (int o2 = 0; o2 < r.cat.n_obj; ++o2) {
            auto [x, alpha] = r.obj_label[o];
            auto [x2, alpha2] = r.obj_label[o2];
            for (int m = 0; m < c.n_mor(); ++m) {
                if (c.mor[m].src != x || c.mor[m].tgt != x2) continue;
                if (d.comp[f.mor[m]][alpha] != alpha2) continue;
                mor_pos[{o, o2, m}] = r.cat.n_mor();
                r.cat.mor.push_back({o, o2});
                r.mor_to_src.push_back(m);
            }
        }
    for (int o = 0; o < r.cat.n_obj; ++o)
        r.cat.id[o] = mor_pos.at({o, o, c.id[r.obj_label[o].first]});
    r.cat.build_comp([&](int m2, int m1) {
        int cm = c.comp[r.mor_to_src[m2]][r.mor_to_src[m1]];
        return mor_pos.at({r.cat.mor[m1].src, r.cat.mor[m2].tgt, cm});
    });
    r.projection.obj.resize(r.cat.n_obj);
    for (int o = 0; o < r.cat.n_obj; ++o) r.projection.obj[o] = r.obj_label[o].first;
    r.projection.mor = r.mor_to_src;
    return r;
}

namespace {

GCatAction comma_action_impl(const GCatAction& src, const GCatAction& tgt, const Functor& f,
                             int j, const Subgroup& stab, bool over, CommaCat* out) {
    CommaCat cc = over ? comma_over(src.cat, tgt.cat, f, j) : comma_under(src.cat, tgt.cat, f, j);
    std::map<std::pair<int, int>, int> obj_pos;
    for (int o = 0; o < cc.cat.n_obj; ++o) obj_pos[cc.obj_label[o]] = o;
    GCatAction r;
    r.cat = cc.cat;
    r.group = subgroup_as_group(stab);
    for (int gi = 0; gi < stab.order(); ++gi) {
        int g = stab.elements[gi];
        Functor fg;
        fg.obj.resize(cc.cat.n_obj);
        for (int o = 0; o < cc.cat.n_obj; ++o) {
            auto [x, alpha] = cc.obj_label[o];
            fg.obj[o] = obj_pos.at({src.a[g].obj[x], tgt.a[g].mor[alpha]});
        }
        fg.mor.resize(cc.cat.n_mor());
        for (int m = 0; m < cc.cat.n_mor(); ++m) {
            int o = cc.cat.mor[m].src, o2 = cc.cat.mor[m].tgt;
            int cm = src.a[g].mor[cc.mor_to_src[m]];
            // locate the comma morphism (g.o -> g.o2, g.m)
            int go = fg.obj[o], go2 = fg.obj[o2];
            int found = -1;
            for (int mm = 0; mm < cc.cat.n_mor(); ++mm)
                if (cc.cat.mor[mm].src == go && cc.cat.mor[mm].tgt == go2 &&
                    cc.mor_to_src[mm] == cm)
                    found = mm;
            assert(found >= 0);
            fg.mor[m] = found;
        }
        r.a.push_back(fg);
    }
    if (out) *out = cc;
    return r;
}

} // namespace

GCatAction comma_over_action(const GCatAction& src, const GCatAction& tgt, const Functor& f,
                             int j, const Subgroup& stab, CommaCat* comma) {
    return comma_action_impl(src, tgt, f, j, stab, true, comma);
}

GCatAction comma_under_action(const GCatAction& src, const GCatAction& tgt, const Functor& f,
                              int j, const Subgroup& stab, CommaCat* comma) {
    return comma_action_impl(src, tgt, f, j, stab, false, comma);
}

GCatAction over_category_action(const GCatAction& act, int i, const Subgroup& stab,
                                CommaCat* comma) {
    return comma_over_action(act, act, Functor::identity(act.cat), i, stab, comma);
}

OrbitCat orbit_category(const FinGroup& g) {
    OrbitCat r;
    r.objects = subgroups(g);
    int n = (int)r.objects.size();
    r.cat.n_obj = n;
    r.cat.id.assign(n, -1);
    // morphism G/K -> G/H: coset gH with K g H = g H, i.e. k g in g H for all k in K
    auto coset_min = [&](int x, const Subgroup& h) {
        int best = x;
        for (int y : h.elements) best = std::min(best, g.mul[x][y]);
        return best;
    };
    std::map<std::tuple<int, int, int>, int> mor_pos; // (K-index, H-index, min rep)
    for (int ki = 0; ki < n; ++ki)
        for (int hi = 0; hi < n; ++hi) {
            const Subgroup& k = r.objects[ki];
            const Subgroup& h = r.objects[hi];
            std::set<int> reps;
            for (int x = 0; x < g.order; ++x) {
                bool ok = true;
                for (int kk : k.elements) {
                    // need k x H = x H
                    int kx = g.mul[kk][x];
                    if (coset_min(kx, h) != coset_min(x, h)) ok = false;
                }
                if (ok) reps.insert(coset_min(x, h));
            }
            for (int rep : reps) {
                mor_pos[{ki, hi, rep}] = r.cat.n_mor();
                r.cat.mor.push_back({ki, hi});
                r.coset_rep.push_back(rep);
            }
        }
    for (int oi = 0; oi < n; ++oi) r.cat.id[oi] = mor_pos.at({oi, oi, coset_min(0, r.objects[oi])});
    r.cat.build_comp([&](int m2, int m1) {
        // m1: G/L -> G/K rep a; m2: G/K -> G/H rep b; composite rep = a b
        int hi = r.cat.mor[m2].tgt;
        int ab = g.mul[r.coset_rep[m1]][r.coset_rep[m2]];
        return mor_pos.at({r.cat.mor[m1].src, hi, coset_min(ab, r.objects[hi])});
    });
    return r;
}

std::optional<int> initial_object(const FinCat& c) {
    for (int i = 0; i < c.n_obj; ++i) {
        bool ok = true;
        for (int j = 0; j < c.n_obj && ok; ++j)
            if (c.hom(i, j).size() != 1) ok = false;
        if (ok) return i;
    }
    return std::nullopt;
}

std::optional<int> terminal_object(const FinCat& c) {
    for (int i = 0; i < c.n_obj; ++i) {
        bool ok = true;
        for (int j = 0; j < c.n_obj && ok; ++j)
            if (c.hom(j, i).size() != 1) ok = false;
        if (ok) return i;
    }
    return std::nullopt;
}

} // namespace gdh

#include "gdh/fin_cat.hpp"

#include <doctest.h>
#include <set>

using namespace gdh;

namespace {
GSet swap_two(const FinGroup& c2) {
    GSet s = GSet::trivial(c2, 2);
    s.act[1] = {1, 0};
    return s;
}
} // namespace

TEST_CASE("basic categories validate") {
    CHECK_FALSE(FinCat::point().validate().has_value());
    CHECK_FALSE(FinCat::discrete(3).validate().has_value());
    CHECK_FALSE(FinCat::linear(2).validate().has_value());
    CHECK(FinCat::linear(2).loop_free());
    CHECK(FinCat::linear(3).path_length_bound() == 3);
    CHECK_FALSE(FinCat::linear(2).opposite().validate().has_value());
}

TEST_CASE("poset category of subsets of a 2-element set is the square") {
    FinGroup c2 = FinGroup::cyclic(2);
    GCatAction square = subset_poset(swap_two(c2), false, false);
    CHECK_FALSE(square.validate().has_value());
    CHECK(square.cat.n_obj == 4);
    CHECK(square.cat.n_mor() == 9);
    // swap exchanges the two middle objects {0} and {1} (masks 1 and 2)
    CHECK(square.a[1].obj[1] == 2);
    CHECK(square.a[1].obj[2] == 1);
    CHECK(square.a[1].obj[0] == 0);
    CHECK(square.a[1].obj[3] == 3);
    CHECK(square.stabilizer(0).order() == 2);
    CHECK(square.stabilizer(1).order() == 1);
}

TEST_CASE("subset poset of S3/C2 is an 8-object cube with S3 permuting singletons") {
    FinGroup s3 = FinGroup::symmetric(3);
    Subgroup c2;
    for (const auto& h : subgroups(s3))
        if (h.order() == 2) {
            c2 = h;
            break;
        }
    GSet x = GSet::cosets(s3, c2);
    GCatAction cube = subset_poset(x, false, false);
    CHECK_FALSE(cube.validate().has_value());
    CHECK(cube.cat.n_obj == 8);
    CHECK(cube.cat.n_mor() == 27);
    // the three singletons form one orbit
    std::set<int> singleton_orbit;
    for (int g = 0; g < 6; ++g) singleton_orbit.insert(cube.a[g].obj[1]);
    CHECK(singleton_orbit == std::set<int>{1, 2, 4});
}

TEST_CASE("non-partial-order and non-monotone actions are rejected") {
    FinGroup e = FinGroup::trivial();
    CHECK_THROWS_AS(poset_category(2, {{0, 1}, {1, 0}}, GSet::trivial(e, 2)), NotAPartialOrder);
    FinGroup c2 = FinGroup::cyclic(2);
    GSet s = swap_two(c2);
    CHECK_THROWS_AS(poset_category(2, {{0, 1}}, s), ActionNotMonotone);
}

TEST_CASE("grothendieck of the trivial action is isomorphic to the category") {
    FinCat lin = FinCat::linear(2);
    GCatAction triv = GCatAction::trivial(lin, FinGroup::trivial());
    std::vector<std::pair<int, int>> labels;
    FinCat tot = grothendieck(triv, &labels);
    CHECK_FALSE(tot.validate().has_value());
    CHECK(tot.n_obj == lin.n_obj);
    CHECK(tot.n_mor() == lin.n_mor());
}

TEST_CASE("grothendieck of G acting on the point is G as a category") {
    FinGroup s3 = FinGroup::symmetric(3);
    GCatAction a = GCatAction::trivial(FinCat::point(), s3);
    FinCat tot = grothendieck(a);
    CHECK_FALSE(tot.validate().has_value());
    CHECK(tot.n_obj == 1);
    CHECK(tot.n_mor() == 6);
}

TEST_CASE("grothendieck of the swap action on two points is a connected groupoid") {
    FinGroup c2 = FinGroup::cyclic(2);
    GCatAction a = GCatAction::trivial(FinCat::discrete(2), c2);
    // replace the action: swap the two objects
    a.a[1].obj = {1, 0};
    a.a[1].mor = {1, 0};
    CHECK_FALSE(a.validate().has_value());
    FinCat tot = grothendieck(a);
    CHECK_FALSE(tot.validate().has_value());
    CHECK(tot.n_obj == 2);
    CHECK(tot.n_mor() == 4);
    CHECK(tot.hom(0, 1).size() == 1);
    CHECK(tot.hom(0, 0).size() == 1);
}

TEST_CASE("comma category of the identity has terminal objects") {
    FinCat lin = FinCat::linear(2);
    for (int j = 0; j <= 2; ++j) {
        CommaCat cc = comma_over(lin, lin, Functor::identity(lin), j);
        CHECK_FALSE(cc.cat.validate().has_value());
        CHECK(cc.cat.n_obj == j + 1);
        auto t = terminal_object(cc.cat);
        REQUIRE(t.has_value());
        CHECK(cc.obj_label[*t] == std::pair<int, int>{j, lin.id[j]});
        CHECK_FALSE(validate_functor(cc.cat, lin, cc.projection).has_value());
    }
}

TEST_CASE("comma of a point inclusion counts maps") {
    FinCat lin = FinCat::linear(2);
    FinCat pt = FinCat::point();
    Functor f = Functor::constant(pt, lin, 0);
    CommaCat cc = comma_over(pt, lin, f, 2);
    CHECK(cc.cat.n_obj == (int)lin.hom(0, 2).size());
    CommaCat cu = comma_under(pt, lin, f, 2);
    CHECK(cu.cat.n_obj == (int)lin.hom(2, 0).size());
    CHECK(cu.cat.n_obj == 0);
}

TEST_CASE("fixed subcategory of the swap square is the diagonal chain") {
    FinGroup c2 = FinGroup::cyclic(2);
    GCatAction square = subset_poset(swap_two(c2), false, false);
    auto subs = subgroups(c2);
    FinCat fix = square.fixed_subcategory(subs[1]);
    CHECK_FALSE(fix.validate().has_value());
    CHECK(fix.n_obj == 2); // empty set and full set only
    CHECK(fix.n_mor() == 3);
    FinCat whole = square.fixed_subcategory(subs[0]);
    CHECK(whole.n_obj == 4);
    CHECK(whole.n_mor() == 9);
}

TEST_CASE("fixed subcategory can be empty") {
    FinGroup c2 = FinGroup::cyclic(2);
    GCatAction a = GCatAction::trivial(FinCat::discrete(2), c2);
    a.a[1].obj = {1, 0};
    a.a[1].mor = {1, 0};
    FinCat fix = a.fixed_subcategory(Subgroup::full(c2));
    CHECK(fix.n_obj == 0);
    CHECK_FALSE(fix.validate().has_value());
}

TEST_CASE("orbit category of the trivial group") {
    OrbitCat oc = orbit_category(FinGroup::trivial());
    CHECK(oc.cat.n_obj == 1);
    CHECK(oc.cat.n_mor() == 1);
}

TEST_CASE("orbit category of C2") {
    OrbitCat oc = orbit_category(FinGroup::cyclic(2));
    CHECK_FALSE(oc.cat.validate().has_value());
    REQUIRE(oc.cat.n_obj == 2);
    // object 0 = trivial subgroup (G/e), object 1 = C2 (G/C2)
    CHECK(oc.cat.hom(0, 0).size() == 2);
    CHECK(oc.cat.hom(0, 1).size() == 1);
    CHECK(oc.cat.hom(1, 0).size() == 0);
    CHECK(oc.cat.hom(1, 1).size() == 1);
}

TEST_CASE("orbit category of S3 matches fixed point counts") {
    FinGroup s3 = FinGroup::symmetric(3);
    OrbitCat oc = orbit_category(s3);
    CHECK_FALSE(oc.cat.validate().has_value());
    REQUIRE(oc.cat.n_obj == 6);
    for (int ki = 0; ki < 6; ++ki)
        for (int hi = 0; hi < 6; ++hi) {
            // |hom(G/K, G/H)| = |(G/H)^K|
            GSet gh = GSet::cosets(s3, oc.objects[hi]);
            int fixed = (int)gh.fixed_points(oc.objects[ki]).size();
            CHECK((int)oc.cat.hom(ki, hi).size() == fixed);
        }
}

TEST_CASE("over-category action: I/i carries a stabilizer action") {
    FinGroup c2 = FinGroup::cyclic(2);
    GCatAction square = subset_poset(swap_two(c2), false, false);
    Subgroup full = Subgroup::full(c2);
    CommaCat cc;
    GCatAction over = over_category_action(square, 3, full, &cc);
    CHECK_FALSE(over.validate().has_value());
    CHECK(over.cat.n_obj == 4);
    auto t = terminal_object(over.cat);
    CHECK(t.has_value());
}

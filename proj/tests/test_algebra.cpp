#include "gdh/fin_group.hpp"
#include "gdh/homology.hpp"
#include "gdh/smith.hpp"

#include <doctest.h>
#include <random>
#include <set>

using namespace gdh;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = (int)(rng() % (hi - lo + 1)) + lo;
    return m;
}

void check_snf_contract(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    for (int i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
        CHECK(s.d(i, i) >= 0);
        if (i + 1 < std::min(s.d.rows(), s.d.cols()) && s.d(i + 1, i + 1) != 0) {
            REQUIRE(s.d(i, i) != 0);
            CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        }
    }
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
}

// independent subgroup oracle: test all subsets for closure
std::set<std::vector<int>> subgroups_bruteforce(const FinGroup& g) {
    std::set<std::vector<int>> out;
    int n = g.order;
    REQUIRE(n <= 16);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1)) continue; // must contain identity
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) elems.push_back(i);
        bool closed = true;
        for (int a : elems)
            for (int b : elems)
                if (!(mask & (1u << g.mul[a][b]))) closed = false;
        for (int a : elems)
            if (!(mask & (1u << g.inv[a]))) closed = false;
        if (closed) out.insert(elems);
    }
    return out;
}

} // namespace

TEST_CASE("smith normal form: empty matrix") {
    SmithResult s = smith_normal_form(IntMat(0, 0));
    CHECK(s.rank == 0);
    CHECK(s.d.rows() == 0);
    CHECK(s.d.cols() == 0);
}

TEST_CASE("smith normal form: diag(2,3) -> diag(1,6)") {
    IntMat m = from_rows({{2, 0}, {0, 3}});
    SmithResult s = smith_normal_form(m);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 6);
    check_snf_contract(m);
}

TEST_CASE("smith normal form: random matrices satisfy the factorization contract") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 6);
        check_snf_contract(random_matrix(rng, r, c, -5, 5));
    }
    check_snf_contract(random_matrix(rng, 4, 5, -5, 5));
}

TEST_CASE("kernel and solve") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        IntMat m = random_matrix(rng, 3 + (int)(rng() % 3), 3 + (int)(rng() % 4), -4, 4);
        IntMat k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols()); // independent columns
        // solve m x = m y for random y
        IntMat y = random_matrix(rng, m.cols(), 1, -3, 3);
        auto x = solve_matrix(m, m * y);
        REQUIRE(x.has_value());
        CHECK(m * *x == m * y);
    }
}

TEST_CASE("cokernel of x2 on Z") {
    IntMat m = from_rows({{2}});
    CokernelData c = cokernel(m);
    CHECK(c.free_rank == 0);
    REQUIRE(c.torsion.size() == 1);
    CHECK(c.torsion[0] == 2);
}

TEST_CASE("groups: cyclic and symmetric validate") {
    for (int n : {1, 2, 3, 4, 6}) CHECK_FALSE(FinGroup::cyclic(n).validate().has_value());
    FinGroup s3 = FinGroup::symmetric(3);
    CHECK(s3.order == 6);
    CHECK_FALSE(s3.validate().has_value());
    FinGroup s4 = FinGroup::symmetric(4);
    CHECK(s4.order == 24);
    CHECK_FALSE(s4.validate().has_value());
}

TEST_CASE("subgroups: C2, C4, S3 against brute force") {
    FinGroup c2 = FinGroup::cyclic(2);
    auto sub2 = subgroups(c2);
    REQUIRE(sub2.size() == 2);
    CHECK(sub2[0].elements == std::vector<int>{0});
    CHECK(sub2[1].elements == std::vector<int>{0, 1});

    FinGroup c4 = FinGroup::cyclic(4);
    auto sub4 = subgroups(c4);
    REQUIRE(sub4.size() == 3);
    CHECK(sub4[1].elements == std::vector<int>{0, 2});

    FinGroup s3 = FinGroup::symmetric(3);
    auto sub6 = subgroups(s3);
    CHECK(sub6.size() == 6);
    std::set<std::vector<int>> got;
    for (const auto& h : sub6) {
        CHECK_FALSE(h.validate().has_value());
        got.insert(h.elements);
    }
    CHECK(got == subgroups_bruteforce(s3));
    int order2 = 0, order3 = 0;
    for (const auto& h : sub6) {
        if (h.order() == 2) ++order2;
        if (h.order() == 3) ++order3;
    }
    CHECK(order2 == 3);
    CHECK(order3 == 1);
}

TEST_CASE("subgroup list is closed under conjugation") {
    for (const FinGroup& g : {FinGroup::symmetric(3), FinGroup::cyclic(4)}) {
        auto subs = subgroups(g);
        for (const auto& h : subs)
            for (int x = 0; x < g.order; ++x) {
                Subgroup c = h.conjugate(x);
                bool listed = false;
                for (const auto& k : subs)
                    if (k.elements == c.elements) listed = true;
                CHECK(listed);
            }
    }
}

TEST_CASE("gsets: cosets, orbits, stabilizers") {
    FinGroup s3 = FinGroup::symmetric(3);
    auto subs = subgroups(s3);
    Subgroup c2;
    for (const auto& h : subs)
        if (h.order() == 2) {
            c2 = h;
            break;
        }
    GSet x = GSet::cosets(s3, c2);
    CHECK(x.size == 3);
    CHECK_FALSE(x.validate().has_value());
    CHECK(x.orbits().size() == 1);
    CHECK(x.stabilizer(0).order() == 2);
    GSet xp = x.with_basepoint();
    CHECK(xp.size == 4);
    CHECK(xp.stabilizer(3).order() == 6);
    CHECK_FALSE(xp.validate().has_value());
    CHECK(GSet::left_regular(s3).is_free());
}

TEST_CASE("homology: zero complex") {
    std::vector<IntMat> ds{IntMat(0, 0)};
    auto h = homology(ds);
    CHECK(h[0].is_zero());
}

TEST_CASE("homology: multiplication by 2") {
    // 0 -> Z -x2-> Z -> 0
    std::vector<IntMat> ds{IntMat(0, 1), from_rows({{2}})};
    auto h = homology(ds);
    CHECK(h[0].betti == 0);
    REQUIRE(h[0].torsion.size() == 1);
    CHECK(h[0].torsion[0] == 2);
    CHECK(h[1].is_zero());
}

TEST_CASE("homology: boundary of the 3-simplex is a 2-sphere") {
    // vertices 0..3; edges (i<j) in lex order; faces (i<j<k) in lex order
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) faces.push_back({i, j, k});
    IntMat d1(4, (int)edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        d1(edges[e].second, (int)e) += 1;
        d1(edges[e].first, (int)e) -= 1;
    }
    auto edge_index = [&](int a, int b) {
        for (size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first == a && edges[e].second == b) return (int)e;
        REQUIRE(false);
        return -1;
    };
    IntMat d2((int)edges.size(), (int)faces.size());
    for (size_t f = 0; f < faces.size(); ++f) {
        auto [i, j, k] = faces[f];
        d2(edge_index(j, k), (int)f) += 1;
        d2(edge_index(i, k), (int)f) -= 1;
        d2(edge_index(i, j), (int)f) += 1;
    }
    auto h = homology({IntMat(0, 4), d1, d2});
    CHECK(h[0] == HomologyGroup{1, {}});
    CHECK(h[1].is_zero());
    CHECK(h[2] == HomologyGroup{1, {}});
}

TEST_CASE("homology: composition-not-zero is reported") {
    std::vector<IntMat> ds{IntMat(0, 1), from_rows({{1}}), from_rows({{1}})};
    CHECK_THROWS_AS(homology(ds), CompositionNotZero);
}

TEST_CASE("homology: betti agrees with rank-nullity on random complexes") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        // build a random 2-step complex: C2 -A-> C1 -B-> C0 with B A = 0
        // take A random and B a basis of the left-kernel of A
        int c2 = 1 + (int)(rng() % 3), c1 = 2 + (int)(rng() % 4);
        IntMat a = random_matrix(rng, c1, c2, -3, 3);
        IntMat b = kernel_basis(a.transposed()).transposed();
        REQUIRE((b * a).is_zero());
        auto h = homology({IntMat(0, b.rows()), b, a});
        CHECK(h[1].betti == (b.cols() - rank(b)) - rank(a));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracle_utils.hpp"
#include "rankfilt/cbc.hpp"
#include "rankfilt/errors.hpp"

using namespace rankfilt;

TEST_CASE("rank two gives the complete graph on the lines") {
    for (int q : {2, 3, 4}) {
        const FqField& F = FqField::get_order(q);
        CbcReport rep = common_basis_complex(F, 2);
        int lines = q + 1;
        CHECK(rep.complex.num_vertices == lines);
        CHECK(static_cast<int>(rep.complex.facets.size()) == lines * (lines - 1) / 2);
        for (int a = 0; a < lines; ++a)
            for (int b = a + 1; b < lines; ++b) CHECK(rep.complex.is_simplex({a, b}));
    }
}

TEST_CASE("facets for rank three have exactly six vertices") {
    const FqField& F = FqField::get_order(2);
    CbcReport rep = common_basis_complex(F, 3);
    CHECK(rep.complex.num_vertices == 14);
    CHECK(rep.complex.facets.size() == 28);
    for (const auto& f : rep.complex.facets) CHECK(f.size() == 6);
}

TEST_CASE("common basis decision procedure") {
    const FqField& F = FqField::get(2, 1);
    Subspace e1 = span_of(F, 3, {{1, 0, 0}});
    Subspace e2 = span_of(F, 3, {{0, 1, 0}});
    Subspace e12 = span_of(F, 3, {{1, 1, 0}});
    Subspace plane = span_of(F, 3, {{1, 0, 0}, {0, 1, 0}});

    CHECK(has_common_basis({}, F, 3));
    CHECK(has_common_basis({e1}, F, 3));
    CHECK(has_common_basis({e1, e2, plane}, F, 3));
    // three distinct lines of one plane cannot sit inside a single basis
    CHECK(!has_common_basis({e1, e2, e12}, F, 3));
    CHECK(!has_common_basis({e1, e2, e12, plane}, F, 3));

    CHECK_THROWS_AS(has_common_basis({Subspace::zero(F, 3)}, F, 3), ValidationError);
    CHECK_THROWS_AS(has_common_basis({Subspace::full(F, 3)}, F, 3), ValidationError);
    CHECK_THROWS_AS(has_common_basis({span_of(F, 2, {{1, 0}})}, F, 3), ValidationError);
}

TEST_CASE("any pair of proper nontrivial subspaces has a common basis") {
    for (auto [q, r] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        const FqField& F = FqField::get_order(q);
        auto reg = proper_nontrivial_subspaces(F, r);
        for (size_t i = 0; i < reg.size(); ++i)
            for (size_t j = i; j < reg.size(); ++j) CHECK(has_common_basis({reg[i], reg[j]}, F, r));
    }
}

TEST_CASE("facet membership equals the sweep decision, exhaustively") {
    for (auto [q, r] : {std::pair{2, 2}, {3, 2}}) {
        const FqField& F = FqField::get_order(q);
        CbcReport rep = common_basis_complex(F, r);
        int n = rep.complex.num_vertices;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> ids;
            std::vector<Subspace> members;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) {
                    ids.push_back(v);
                    members.push_back(rep.registry[v]);
                }
            CHECK(rep.complex.is_simplex(ids) == has_common_basis(members, F, r));
        }
    }
}

TEST_CASE("delta examples") {
    const FqField& F2 = FqField::get_order(2);
    CbcReport d1 = delta(F2, 1);
    CHECK(d1.delta_rank == 1);  // empty complex, group in degree -1
    CHECK(d1.concentrated);

    CbcReport d22 = delta(F2, 2);
    CHECK(d22.delta_rank == 1);  // H_1 of the triangle
    CHECK(d22.delta_torsion.empty());
    CHECK(d22.concentrated);

    CbcReport d32 = delta(FqField::get_order(3), 2);
    CHECK(d32.delta_rank == 3);  // H_1 of K_4 = 6 - 4 + 1
    CHECK(d32.concentrated);
}

TEST_CASE("connectivity reports") {
    const FqField& F2 = FqField::get_order(2);
    ConnectivityReport c22 = verify_connectivity(F2, 2);
    CHECK(c22.concentrated);
    CHECK(c22.degrees_with_homology == std::vector<int>{1});

    ConnectivityReport c23 = verify_connectivity(F2, 3);
    CHECK(c23.concentrated);
    CHECK(c23.degrees_with_homology == std::vector<int>{3});
    // weak lower vanishing bound: nothing below r-2
    for (const auto& [k, g] : c23.homology.groups)
        if (k < 1) CHECK(g.is_zero());
}

TEST_CASE("facet multiset is GL-invariant") {
    const FqField& F = FqField::get_order(3);
    CbcReport rep = common_basis_complex(F, 2);
    std::vector<Matrix> gls;
    enumerate_gl(F, 2, [&](const Matrix& g) { gls.push_back(g); });
    oracle::Lcg rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix& g = gls[rng.range(0, static_cast<long long>(gls.size()) - 1)];
        std::vector<int> perm(rep.registry.size());
        for (size_t i = 0; i < rep.registry.size(); ++i) {
            Subspace img = act(g, rep.registry[i]);
            auto pos = std::lower_bound(rep.registry.begin(), rep.registry.end(), img, subspace_less);
            REQUIRE(pos != rep.registry.end());
            perm[i] = static_cast<int>(pos - rep.registry.begin());
        }
        CHECK(rep.complex.relabel(perm) == rep.complex);
    }
}

TEST_CASE("one-skeleton is complete") {
    for (auto [q, r] : {std::pair{2, 3}, {3, 3}}) {
        const FqField& F = FqField::get_order(q);
        CbcReport rep = common_basis_complex(F, r);
        int n = rep.complex.num_vertices;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) CHECK(rep.complex.is_simplex({a, b}));
    }
}

TEST_CASE("budgets and validation") {
    const FqField& F = FqField::get_order(2);
    CHECK_THROWS_AS(common_basis_complex(F, 1), ValidationError);
    CbcOptions tiny;
    tiny.facet_budget = 10;
    CHECK_THROWS_AS(common_basis_complex(F, 3, tiny), BudgetError);
    CbcOptions small_degree;
    small_degree.degree_budget = 5;
    CHECK_THROWS_AS(delta(F, 3, small_degree), BudgetError);
    small_degree.big = true;  // --big lifts the per-degree cap
    CHECK(delta(F, 3, small_degree).concentrated);
}

#include "rankfilt/building.hpp"

#include <string>

#include "rankfilt/errors.hpp"

namespace rankfilt {

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// Complete flags in F_q^r: prod_{i=2}^{r} (q^i - 1)/(q - 1).
BigInt flag_count(int q, int r) {
    BigInt total = 1;
    for (int i = 2; i <= r; ++i) total *= gaussian_binomial(i, 1, q);
    return total;
}

}  // namespace

std::vector<Subspace> building_vertex_registry(const FqField& f, int r) {
    return proper_nontrivial_subspaces(f, r);
}

SimplicialComplex tits_building(const FqField& f, int r, long long degree_budget) {
    if (r < 1) throw ValidationError("building", "rank must be >= 1");
    if (r == 1) return SimplicialComplex{};

    // Facets are complete flags, all of size r-1; bound each degree before
    // enumerating anything.
    BigInt vertices = 0;
    for (int d = 1; d < r; ++d) vertices += gaussian_binomial(r, d, f.q);
    BigInt facets = flag_count(f.q, r);
    for (int k = 0; k <= r - 2; ++k) {
        BigInt bound = k == 0 ? vertices : facets * binomial(r - 1, k + 1);
        if (bound > degree_budget)
            throw BudgetError("building-budget",
                              "building for q=" + std::to_string(f.q) + " r=" + std::to_string(r) +
                                  " exceeds the per-degree simplex budget",
                              "degree " + std::to_string(k) + " bound " + bound.str() + " > " +
                                  std::to_string(degree_budget));
    }

    auto registry = building_vertex_registry(f, r);
    int n = static_cast<int>(registry.size());
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || registry[i].dim >= registry[j].dim) continue;
            if (registry[j].contains(registry[i])) less.emplace_back(i, j);
        }
    return order_complex(n, less);
}

BuildingReport solomon_tits_report(const FqField& f, int r, long long degree_budget) {
    BuildingReport rep;
    rep.q = f.q;
    rep.r = r;
    rep.registry = r >= 2 ? building_vertex_registry(f, r) : std::vector<Subspace>{};
    rep.complex = tits_building(f, r, degree_budget);
    rep.homology = homology(rep.complex, /*reduced=*/true);

    int top = r - 2;
    AbelianGroup at_top = rep.homology.at(top);
    rep.steinberg_rank = at_top.rank;
    rep.free_part = at_top.torsion.empty();
    rep.concentrated = true;
    for (const auto& [k, g] : rep.homology.groups)
        if (k != top && !g.is_zero()) rep.concentrated = false;
    return rep;
}

}  // namespace rankfilt

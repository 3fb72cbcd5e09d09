#include "rankfilt/cbc.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "rankfilt/errors.hpp"
#include "rankfilt/parallel.hpp"

namespace rankfilt {

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

void validate_members(const std::vector<Subspace>& members, const FqField& f, int r) {
    for (const auto& v : members) {
        if (v.field != &f || v.ambient != r) throw ValidationError("cbc", "member has wrong ambient space");
        if (v.is_zero() || v.is_full())
            throw ValidationError("cbc", "members must be proper nontrivial subspaces");
    }
}

}  // namespace

bool has_common_basis(const std::vector<Subspace>& members, const FqField& f, int r) {
    validate_members(members, f, r);
    if (members.empty()) return true;
    bool found = false;
    enumerate_projective_bases(f, r, [&](const std::vector<std::vector<uint8_t>>& basis) {
        if (found) return;
        for (const auto& v : members) {
            std::vector<std::vector<uint8_t>> inside;
            for (const auto& b : basis)
                if (v.contains_vector(b)) inside.push_back(b);
            if (static_cast<int>(inside.size()) < v.dim) return;
            if (!(span_of(f, r, inside) == v)) return;
        }
        found = true;
    });
    return found;
}

CbcReport common_basis_complex(const FqField& f, int r, const CbcOptions& opts) {
    if (r < 2) throw ValidationError("cbc", "common basis complex needs r >= 2");
    BigInt basis_count = projective_basis_count(f.q, r);
    if (basis_count > opts.facet_budget)
        throw BudgetError("cbc-budget", "facet generation budget exceeded",
                          "bases up to scaling/permutation: " + basis_count.str() + " > " +
                              std::to_string(opts.facet_budget));

    CbcReport rep;
    rep.q = f.q;
    rep.r = r;
    rep.registry = proper_nontrivial_subspaces(f, r);

    std::unordered_map<Subspace, int, SubspaceHash> vertex_id;
    for (size_t i = 0; i < rep.registry.size(); ++i) vertex_id.emplace(rep.registry[i], static_cast<int>(i));

    // One facet per basis: the spans of all proper nonempty subsets. Collect
    // bases first so facet construction can run in parallel per basis.
    std::vector<std::vector<std::vector<uint8_t>>> bases;
    enumerate_projective_bases(f, r, [&](const std::vector<std::vector<uint8_t>>& b) { bases.push_back(b); });

    std::vector<std::vector<int>> facets(bases.size());
    parallel_for(bases.size(), [&](size_t bi) {
        const auto& basis = bases[bi];
        std::vector<int> facet;
        facet.reserve((1u << r) - 2);
        for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
            std::vector<std::vector<uint8_t>> subset;
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) subset.push_back(basis[i]);
            Subspace s = span_of(f, r, subset);
            auto it = vertex_id.find(s);
            if (it == vertex_id.end()) throw std::logic_error("span outside vertex registry");
            facet.push_back(it->second);
        }
        std::sort(facet.begin(), facet.end());
        facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
        facets[bi] = std::move(facet);
    });

    rep.complex = SimplicialComplex::from_facets(static_cast<int>(rep.registry.size()), std::move(facets));
    return rep;
}

namespace {

void check_degree_budget(const CbcReport& rep, int r, const CbcOptions& opts) {
    if (opts.big) return;
    // Pre-dedup upper bound on the simplex count of each degree.
    int fsize = (1 << r) - 2;
    BigInt nfacets = static_cast<long long>(rep.complex.facets.size());
    for (int k = 1; k < fsize; ++k) {
        BigInt bound = nfacets * binomial(fsize, k + 1);
        if (bound > opts.degree_budget)
            throw BudgetError("cbc-budget", "homology degree budget exceeded (pass --big to override)",
                              "degree " + std::to_string(k) + " bound " + bound.str() + " > " +
                                  std::to_string(opts.degree_budget));
    }
}

}  // namespace

CbcReport delta(const FqField& f, int r, const CbcOptions& opts) {
    if (r < 1) throw ValidationError("cbc", "rank must be >= 1");
    CbcReport rep;
    if (r == 1) {
        rep.q = f.q;
        rep.r = 1;
        rep.complex = SimplicialComplex{};
    } else {
        rep = common_basis_complex(f, r, opts);
        check_degree_budget(rep, r, opts);
    }
    rep.homology = homology(rep.complex, /*reduced=*/true);

    int top = 2 * r - 3;
    AbelianGroup at_top = rep.homology->at(top);
    rep.delta_rank = at_top.rank;
    rep.delta_torsion = at_top.torsion;
    rep.concentrated = true;
    for (const auto& [k, g] : rep.homology->groups)
        if (k != top && !g.is_zero()) rep.concentrated = false;
    return rep;
}

ConnectivityReport verify_connectivity(const FqField& f, int r, const CbcOptions& opts) {
    CbcReport rep = delta(f, r, opts);
    ConnectivityReport out;
    out.q = f.q;
    out.r = r;
    out.concentrated = rep.concentrated;
    out.homology = *rep.homology;
    out.degrees_with_homology = rep.homology->degrees_with_homology();
    return out;
}

}  // namespace rankfilt

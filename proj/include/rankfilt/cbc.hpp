#pragma once

#include <optional>
#include <vector>

#include "rankfilt/simplicial.hpp"
#include "rankfilt/subspace.hpp"

namespace rankfilt {

struct CbcOptions {
    bool big = false;                     // lift the per-degree simplex cap
    long long facet_budget = 5000000;     // generated facets, pre-dedup
    long long degree_budget = 200000;     // simplices in any single degree
};

struct CbcReport {
    int q = 0;
    int r = 0;
    std::vector<Subspace> registry;  // all proper nontrivial subspaces
    SimplicialComplex complex;
    std::optional<HomologyResult> homology;
    BigInt delta_rank = 0;                // reduced betti in degree 2r-3
    std::vector<BigInt> delta_torsion;
    bool concentrated = false;            // homology concentrated in degree 2r-3
};

struct ConnectivityReport {
    int q = 0;
    int r = 0;
    bool concentrated = false;
    std::vector<int> degrees_with_homology;
    HomologyResult homology;
};

// True iff some basis of F_q^r contains a basis of every member. Reference
// decision procedure: sweep bases up to rescaling and reordering and test
// span(B intersect V) = V for each member; the maximal candidate subset
// B intersect V is the only one that needs checking.
bool has_common_basis(const std::vector<Subspace>& members, const FqField& f, int r);

// The complex whose faces are the families admitting a common basis, built
// facet-first: one facet per basis, holding the spans of all proper nonempty
// subsets of the basis. r >= 2.
CbcReport common_basis_complex(const FqField& f, int r, const CbcOptions& opts = {});

// Adds full reduced homology; delta_rank/delta_torsion read off degree 2r-3.
// r = 1 is allowed and yields the empty complex with group Z in degree -1.
CbcReport delta(const FqField& f, int r, const CbcOptions& opts = {});

ConnectivityReport verify_connectivity(const FqField& f, int r, const CbcOptions& opts = {});

}  // namespace rankfilt

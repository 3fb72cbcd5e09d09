#pragma once

#include <string>
#include <vector>

#include "rankfilt/cbc.hpp"
#include "rankfilt/matrix.hpp"
#include "rankfilt/snf.hpp"

namespace rankfilt {

// H_t of the cyclic group of order m, computed from the 2-periodic
// resolution (boundary alternates 0 and multiplication by m).
AbelianGroup cyclic_group_homology(long long m, int t);

// Elementary transvections E_ij(1) plus diag(g, 1, .., 1) for the fixed unit
// generator g: a generating set of GL_r(F_q).
std::vector<Matrix> gl_generators(const FqField& f, int r);

struct DeltaActionReport {
    int q = 0;
    int r = 0;
    long long delta_rank = 0;
    std::vector<Matrix> generators;
    // One delta_rank x delta_rank integer matrix per generator, the induced
    // map on the chosen cycle basis of the degree-(2r-3) homology.
    std::vector<std::vector<std::vector<BigInt>>> action;
};

// Transports the vertex action of each generator to the free homology of the
// common basis complex in degree 2r-3. Requires that degree to be
// torsion-free; refuses when the chain group is larger than `chain_budget`.
DeltaActionReport gl_action_on_delta(const FqField& f, int r, long long chain_budget = 800);

struct CoinvariantsResult {
    int q = 0;
    int r = 0;
    long long delta_rank = 0;
    AbelianGroup group;        // invariant factors of the coinvariants
    bool torsion_flag = false; // true when the free part vanishes
};

// Cokernel of the stacked (action - id) matrices over all generators.
CoinvariantsResult coinvariants_delta(const FqField& f, int r, long long chain_budget = 800);

enum class ChartKind { Group, ZeroByConnectivity, NotComputed };

struct RankChartEntry {
    int s = 0;
    int t = 0;
    ChartKind kind = ChartKind::NotComputed;
    AbelianGroup value;        // meaningful only when kind == Group
    std::string provenance;
};

struct RankTable {
    int q = 0;
    int wmax = 0;
    std::vector<RankChartEntry> entries;  // the full (s, t) grid, 0..wmax each

    const RankChartEntry& at(int s, int t) const;
};

// The computable corner of the first-page chart: column s = 0 from cyclic
// group homology, diagonal s = t from coinvariants when within budget,
// below-diagonal zeros only where the connectivity check actually ran.
// Everything else is an explicit not-computed marker. wmax <= 4.
RankTable rank_complex_table(const FqField& f, int wmax);

}  // namespace rankfilt

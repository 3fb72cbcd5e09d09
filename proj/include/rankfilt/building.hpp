#pragma once

#include <vector>

#include "rankfilt/simplicial.hpp"
#include "rankfilt/subspace.hpp"

namespace rankfilt {

struct BuildingReport {
    int q = 0;
    int r = 0;
    std::vector<Subspace> registry;  // vertex id -> subspace
    SimplicialComplex complex;
    HomologyResult homology;
    BigInt steinberg_rank = 0;   // reduced betti in degree r-2
    bool concentrated = false;   // reduced homology vanishes outside degree r-2
    bool free_part = false;      // no torsion in degree r-2
};

// Order complex of the proper nontrivial subspaces of F_q^r under inclusion.
// r = 1 gives the empty complex. Refuses if any single degree would hold
// more than `degree_budget` simplices.
SimplicialComplex tits_building(const FqField& f, int r, long long degree_budget = 200000);
std::vector<Subspace> building_vertex_registry(const FqField& f, int r);

BuildingReport solomon_tits_report(const FqField& f, int r, long long degree_budget = 200000);

}  // namespace rankfilt

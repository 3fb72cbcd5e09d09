#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rankfilt/subspace.hpp"

namespace rankfilt {

// A map [deg]^n -> Sub(F_q^r): one subspace per lattice point of the n-cube
// of side deg+1. Construction checks shape only; the lattice conditions
// (zero boundary, full terminal, monotonicity, 2-cube exactness,
// non-negative subcube rank jumps) are verified by check_lattice_conditions.
struct CubicalDiagram {
    const FqField* field = nullptr;
    int r = 0;    // ambient rank
    int n = 0;    // cube dimension, >= 1
    int deg = 0;  // simplicial degree, >= 0
    std::vector<Subspace> values;  // size (deg+1)^n, mixed-radix indexed

    static CubicalDiagram make(const FqField& f, int r, int n, int deg, std::vector<Subspace> values);

    size_t index_of(const std::vector<int>& point) const;
    std::vector<int> point_of(size_t index) const;
    const Subspace& at(const std::vector<int>& point) const { return values[index_of(point)]; }
    size_t num_points() const { return values.size(); }
};

struct LatticeCheck {
    bool ok = true;
    std::string diagnostic;  // first violation, empty when ok
};

LatticeCheck check_lattice_conditions(const CubicalDiagram& d);

// Alternating dimension sum over the corners of the unit subcube below p;
// coordinates below 0 contribute dimension 0.
int rank_jump(const CubicalDiagram& d, const std::vector<int>& point);

struct DistinguishedPoints {
    std::vector<std::pair<std::vector<int>, int>> points;  // (point, multiplicity > 0)
    int total = 0;                                         // sum of multiplicities, equals r
};

// Requires the lattice conditions; throws ValidationError with the
// diagnostic otherwise.
DistinguishedPoints distinguished_points(const CubicalDiagram& d);

// Connected components of the comparability graph (product partial order) on
// the distinguished points. Copies of one point are mutually comparable, so
// multiplicity never splits a component.
int component_count(const CubicalDiagram& d);

// Component count of a bare point multiset, product order on fixed n.
int comparability_components(const std::vector<std::pair<std::vector<int>, int>>& points);

// All diagrams satisfying the lattice conditions, in lexicographic order of
// the value assignment. Refuses when #subspaces^(#free points) > 10^7.
void enumerate_diagrams(const FqField& f, int r, int n, int deg,
                        const std::function<void(const CubicalDiagram&)>& fn);

// Histogram of component_count over the full enumeration.
std::map<int, long long> component_census(const FqField& f, int r, int n, int deg);

}  // namespace rankfilt

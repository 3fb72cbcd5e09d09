#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "rankfilt/bigint.hpp"
#include "rankfilt/snf.hpp"

namespace rankfilt {

// Abstract simplicial complex over integer vertex ids, stored by facets.
// Facets are strictly ascending id lists forming an antichain, kept in
// lexicographic order; simplices of each degree are enumerated on demand.
struct SimplicialComplex {
    int num_vertices = 0;
    std::vector<std::vector<int>> facets;

    int dimension() const;  // -1 for the empty complex

    // Validates ids, sorts, deduplicates and drops facets contained in others.
    static SimplicialComplex from_facets(int num_vertices, std::vector<std::vector<int>> raw_facets);

    // All k-simplices (as ascending id lists), lexicographically sorted.
    std::vector<std::vector<int>> simplices_of_dim(int k) const;
    std::vector<long long> simplex_counts() const;  // index k = #k-simplices

    bool is_simplex(const std::vector<int>& ascending_ids) const;

    // Complex with vertex i renamed perm[i] (perm a bijection).
    SimplicialComplex relabel(const std::vector<int>& perm) const;

    bool operator==(const SimplicialComplex&) const = default;
};

// Nerve of a strict partial order on {0..n-1}: simplices are chains, facets
// maximal chains. Throws if the relation is not irreflexive and transitive.
SimplicialComplex order_complex(int n, const std::vector<std::pair<int, int>>& strict_less);

struct HomologyResult {
    // Degree -> homology group. Reduced runs cover -1..dim, unreduced 0..dim.
    std::map<int, AbelianGroup> groups;

    AbelianGroup at(int k) const {
        auto it = groups.find(k);
        return it == groups.end() ? AbelianGroup{} : it->second;
    }
    std::vector<int> degrees_with_homology() const;
};

// Exact integral homology via sparse Smith normal form. Verifies dd = 0 on
// the boundary matrices it builds. Reduced homology of the empty complex is
// Z in degree -1.
HomologyResult homology(const SimplicialComplex& c, bool reduced);

// Alternating sum of simplex counts (unreduced).
long long euler_characteristic(const SimplicialComplex& c);

// Boundary matrix from degree k to k-1 given the two simplex lists.
// For k = 0: the augmentation row of ones when reduced, else a 0 x n matrix.
SparseIntMat boundary_matrix(const std::vector<std::vector<int>>& simplices_k,
                             const std::vector<std::vector<int>>& simplices_km1, int k, bool reduced);

// Text export: "scx 1 <num_vertices>" then one facet per line, LF endings.
void write_scx(const SimplicialComplex& c, std::ostream& os);
SimplicialComplex read_scx(std::istream& is);

}  // namespace rankfilt

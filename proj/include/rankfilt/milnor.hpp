#pragma once

#include <vector>

#include "rankfilt/field.hpp"
#include "rankfilt/snf.hpp"

namespace rankfilt {

// Degree-j piece of the tensor algebra on the unit group, presented on the
// (q-1)^j tuples of units with units written as powers of the fixed
// generator. Relation columns live in the free abelian group on the tuples.
struct MilnorPresentation {
    int q = 0;
    int j = 0;
    long long num_generators = 0;
    SparseIntMat relations;
};

// Multilinearity in every slot (pairwise products plus the order-(q-1)
// relation from u^(q-1) = 1).
MilnorPresentation tensor_power_presentation(const FqField& f, int j);
// Tensor relations plus adjacent-slot (u, u) antisymmetry generators.
MilnorPresentation exterior_power_presentation(const FqField& f, int j);
// Tensor relations plus adjacent-slot (u, 1-u) Steinberg generators.
MilnorPresentation milnor_presentation(const FqField& f, int j);

// Quotient groups, computed by Smith normal form of the relation matrix.
// Budget: j <= 3 and q <= 9.
AbelianGroup milnor_k(const FqField& f, int j);
AbelianGroup exterior_power(const FqField& f, int j);

}  // namespace rankfilt

#pragma once

#include <tuple>
#include <vector>

#include "rankfilt/bigint.hpp"

namespace rankfilt {

// Sparse integer matrix in coordinate form. Entries must have distinct
// (row, col) positions; zeros may be passed and are dropped.
struct SparseIntMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, long long>> entries;

    SparseIntMat() = default;
    SparseIntMat(int r, int c) : rows(r), cols(c) {}
    void add(int r, int c, long long v) {
        if (v != 0) entries.emplace_back(r, c, v);
    }
};

struct SmithOptions {
    // When set, U, Uinv, V, Vinv are produced with U * A * V = D,
    // |det U| = |det V| = 1. Dense; request only for small matrices.
    bool transforms = false;
};

struct SmithResult {
    int rank = 0;
    // Nonzero diagonal of D, positive, d_i | d_{i+1}.
    std::vector<BigInt> factors;
    std::vector<std::vector<BigInt>> U, Uinv, V, Vinv;

    std::vector<BigInt> torsion() const {
        std::vector<BigInt> t;
        for (const BigInt& d : factors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

// Exact Smith normal form. Elimination runs on 64-bit integers with checked
// arithmetic and restarts on arbitrary-precision integers if anything
// overflows.
SmithResult smith_normal_form(const SparseIntMat& m, const SmithOptions& opts = {});

// Cokernel of the column space: Z^rows / col-span(m), as betti + torsion.
AbelianGroup cokernel(const SparseIntMat& m);

}  // namespace rankfilt

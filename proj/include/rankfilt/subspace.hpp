#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rankfilt/bigint.hpp"
#include "rankfilt/matrix.hpp"

namespace rankfilt {

// A subspace of F_q^r held in reduced row echelon form with no zero rows.
// RREF is the single canonical form in this codebase: two Subspace values
// compare equal exactly when they are equal as subspaces, and every vertex id,
// hash and export order reduces to it.
struct Subspace {
    const FqField* field = nullptr;
    int ambient = 0;
    int dim = 0;
    std::vector<uint8_t> rows;  // dim x ambient, row-major, RREF

    static Subspace zero(const FqField& f, int r);
    static Subspace full(const FqField& f, int r);

    bool is_zero() const { return dim == 0; }
    bool is_full() const { return dim == ambient; }
    uint8_t at(int i, int j) const { return rows[static_cast<size_t>(i) * ambient + j]; }

    bool contains_vector(const std::vector<uint8_t>& v) const;
    bool contains(const Subspace& other) const;

    Matrix basis_matrix() const;
    std::vector<std::string> basis_digit_strings() const;

    bool operator==(const Subspace& o) const {
        return field == o.field && ambient == o.ambient && dim == o.dim && rows == o.rows;
    }
};

// Total order: by dimension, then lexicographically on the RREF entries.
bool subspace_less(const Subspace& a, const Subspace& b);

struct SubspaceHash {
    size_t operator()(const Subspace& s) const;
};

Subspace span_of(const FqField& f, int r, const std::vector<std::vector<uint8_t>>& vectors);
Subspace row_space(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// All d-dimensional subspaces of F_q^r, each exactly once, ordered by RREF
// lexicographic order. Generated directly from pivot-column patterns.
std::vector<Subspace> enumerate_subspaces(const FqField& f, int r, int d);

// All subspaces 0 < dim < r, dimension-major then RREF-lex: the vertex
// registry order used by the building and common basis complexes.
std::vector<Subspace> proper_nontrivial_subspaces(const FqField& f, int r);

// Number of d-dimensional subspaces of F_q^r.
BigInt gaussian_binomial(int r, int d, int q);

// |GL_r(F_q)| = prod_{i=0}^{r-1} (q^r - q^i).
BigInt gl_order(int q, int r);

// Calls fn once per invertible r x r matrix, in lexicographic order of the
// row tuples. Refuses when |GL_r(F_q)| > 10^7.
void enumerate_gl(const FqField& f, int r, const std::function<void(const Matrix&)>& fn);

// Image g(V) of a subspace under an invertible matrix (column convention).
Subspace act(const Matrix& g, const Subspace& v);

// Bases of F_q^r up to rescaling and reordering of the basis vectors:
// strictly increasing tuples of projective representatives (first nonzero
// coordinate 1) that are linearly independent. fn receives the basis vectors.
void enumerate_projective_bases(const FqField& f, int r,
                                const std::function<void(const std::vector<std::vector<uint8_t>>&)>& fn);

BigInt projective_basis_count(int q, int r);  // gl_order / ((q-1)^r r!)

}  // namespace rankfilt

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rankfilt/field.hpp"

namespace rankfilt {

// Dense matrix over F_q, row-major. Dense is the right call at the ranks this
// project handles (r <= 6).
struct Matrix {
    const FqField* field = nullptr;
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    Matrix() = default;
    Matrix(const FqField& f, int rows_, int cols_)
        : field(&f), rows(rows_), cols(cols_), a(static_cast<size_t>(rows_) * cols_, 0) {}

    uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(const FqField& f, int n);

    bool operator==(const Matrix&) const = default;

    std::vector<std::string> row_digit_strings() const;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);

// v interpreted as a column vector; returns g * v.
std::vector<uint8_t> mat_apply(const Matrix& g, const std::vector<uint8_t>& v);

// Reduced row echelon form and rank; row space preserved.
std::pair<Matrix, int> rref(const Matrix& m);

bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

}  // namespace rankfilt

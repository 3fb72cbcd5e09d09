#include "rankfilt/matrix.hpp"

#include "rankfilt/errors.hpp"

namespace rankfilt {

Matrix Matrix::identity(const FqField& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<std::string> Matrix::row_digit_strings() const {
    std::vector<std::string> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) {
        std::string s(cols, '0');
        for (int j = 0; j < cols; ++j) s[j] = field->digit(at(i, j));
        out.push_back(std::move(s));
    }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.field != b.field || a.cols != b.rows) throw ValidationError("linalg", "matrix shape mismatch in product");
    const FqField& F = *a.field;
    Matrix c(F, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            uint8_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = F.add(c.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return c;
}

std::vector<uint8_t> mat_apply(const Matrix& g, const std::vector<uint8_t>& v) {
    if (static_cast<int>(v.size()) != g.cols) throw ValidationError("linalg", "vector length mismatch");
    const FqField& F = *g.field;
    std::vector<uint8_t> w(g.rows, 0);
    for (int i = 0; i < g.rows; ++i) {
        uint8_t acc = 0;
        for (int j = 0; j < g.cols; ++j) acc = F.add(acc, F.mul(g.at(i, j), v[j]));
        w[i] = acc;
    }
    return w;
}

std::pair<Matrix, int> rref(const Matrix& m) {
    Matrix r = m;
    const FqField& F = *m.field;
    int pivot_row = 0;
    for (int col = 0; col < r.cols && pivot_row < r.rows; ++col) {
        int sel = -1;
        for (int i = pivot_row; i < r.rows; ++i)
            if (r.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
        uint8_t scale = F.inv(r.at(pivot_row, col));
        for (int j = 0; j < r.cols; ++j) r.at(pivot_row, j) = F.mul(scale, r.at(pivot_row, j));
        for (int i = 0; i < r.rows; ++i) {
            if (i == pivot_row) continue;
            uint8_t factor = r.at(i, col);
            if (factor == 0) continue;
            for (int j = 0; j < r.cols; ++j)
                r.at(i, j) = F.sub(r.at(i, j), F.mul(factor, r.at(pivot_row, j)));
        }
        ++pivot_row;
    }
    return {r, pivot_row};
}

bool is_invertible(const Matrix& m) {
    if (m.rows != m.cols) return false;
    return rref(m).second == m.rows;
}

Matrix inverse(const Matrix& m) {
    if (m.rows != m.cols) throw ValidationError("linalg", "inverse of non-square matrix");
    const FqField& F = *m.field;
    int n = m.rows;
    Matrix aug(F, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [red, rank] = rref(aug);
    if (rank < n) throw ValidationError("linalg", "matrix not invertible");
    Matrix inv(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

}  // namespace rankfilt

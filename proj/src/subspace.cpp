#include "rankfilt/subspace.hpp"

#include <algorithm>

#include "rankfilt/errors.hpp"

namespace rankfilt {

Subspace Subspace::zero(const FqField& f, int r) {
    Subspace s;
    s.field = &f;
    s.ambient = r;
    s.dim = 0;
    return s;
}

Subspace Subspace::full(const FqField& f, int r) {
    Subspace s;
    s.field = &f;
    s.ambient = r;
    s.dim = r;
    s.rows.assign(static_cast<size_t>(r) * r, 0);
    for (int i = 0; i < r; ++i) s.rows[static_cast<size_t>(i) * r + i] = 1;
    return s;
}

// Reduce v against the RREF rows; zero remainder means membership.
bool Subspace::contains_vector(const std::vector<uint8_t>& v) const {
    if (static_cast<int>(v.size()) != ambient) throw ValidationError("linalg", "vector length mismatch");
    const FqField& F = *field;
    std::vector<uint8_t> w = v;
    for (int i = 0; i < dim; ++i) {
        int pivot = -1;
        for (int j = 0; j < ambient; ++j)
            if (at(i, j) != 0) {
                pivot = j;
                break;
            }
        uint8_t c = w[pivot];
        if (c == 0) continue;
        for (int j = pivot; j < ambient; ++j) w[j] = F.sub(w[j], F.mul(c, at(i, j)));
    }
    for (uint8_t x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (field != other.field || ambient != other.ambient) throw ValidationError("linalg", "ambient mismatch");
    if (other.dim > dim) return false;
    for (int i = 0; i < other.dim; ++i) {
        std::vector<uint8_t> v(other.rows.begin() + static_cast<size_t>(i) * ambient,
                               other.rows.begin() + static_cast<size_t>(i + 1) * ambient);
        if (!contains_vector(v)) return false;
    }
    return true;
}

Matrix Subspace::basis_matrix() const {
    Matrix m(*field, dim, ambient);
    m.a = rows;
    return m;
}

std::vector<std::string> Subspace::basis_digit_strings() const {
    std::vector<std::string> out;
    out.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        std::string s(ambient, '0');
        for (int j = 0; j < ambient; ++j) s[j] = field->digit(at(i, j));
        out.push_back(std::move(s));
    }
    return out;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.rows < b.rows;
}

size_t SubspaceHash::operator()(const Subspace& s) const {
    size_t h = std::hash<int>()(s.dim * 131 + s.ambient);
    for (uint8_t x : s.rows) h = h * 1099511628211ULL + x;
    return h;
}

Subspace row_space(const Matrix& m) {
    auto [red, rank] = rref(m);
    Subspace s;
    s.field = m.field;
    s.ambient = m.cols;
    s.dim = rank;
    s.rows.assign(red.a.begin(), red.a.begin() + static_cast<size_t>(rank) * m.cols);
    return s;
}

Subspace span_of(const FqField& f, int r, const std::vector<std::vector<uint8_t>>& vectors) {
    Matrix m(f, static_cast<int>(vectors.size()), r);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != r)
            throw ValidationError("linalg", "vector length != ambient dimension");
        for (int j = 0; j < r; ++j) m.at(static_cast<int>(i), j) = vectors[i][j];
    }
    return row_space(m);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.field != b.field || a.ambient != b.ambient) throw ValidationError("linalg", "ambient mismatch");
    Matrix m(*a.field, a.dim + b.dim, a.ambient);
    std::copy(a.rows.begin(), a.rows.end(), m.a.begin());
    std::copy(b.rows.begin(), b.rows.end(), m.a.begin() + static_cast<size_t>(a.dim) * a.ambient);
    return row_space(m);
}

// Zassenhaus: row-reduce [A | A; B | 0]; rows whose left half vanishes carry
// a basis of the intersection in the right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.field != b.field || a.ambient != b.ambient) throw ValidationError("linalg", "ambient mismatch");
    const FqField& F = *a.field;
    int r = a.ambient;
    Matrix m(F, a.dim + b.dim, 2 * r);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < r; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(i, r + j) = a.at(i, j);
        }
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < r; ++j) m.at(a.dim + i, j) = b.at(i, j);
    auto [red, rank] = rref(m);
    std::vector<std::vector<uint8_t>> inter;
    for (int i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < r; ++j)
            if (red.at(i, j) != 0) {
                left_zero = false;
                break;
            }
        if (left_zero) {
            std::vector<uint8_t> v(r);
            for (int j = 0; j < r; ++j) v[j] = red.at(i, r + j);
            inter.push_back(std::move(v));
        }
    }
    return span_of(F, r, inter);
}

std::vector<Subspace> enumerate_subspaces(const FqField& f, int r, int d) {
    if (d < 0 || d > r) throw ValidationError("linalg", "subspace dimension out of range");
    std::vector<Subspace> out;
    if (d == 0) {
        out.push_back(Subspace::zero(f, r));
        return out;
    }
    int q = f.q;

    // Choose pivot columns c_0 < ... < c_{d-1}; the free entries of the RREF
    // pattern are (i, j) with j > c_i, j not a pivot column.
    std::vector<int> pivots(d);
    for (int i = 0; i < d; ++i) pivots[i] = i;
    for (;;) {
        std::vector<std::pair<int, int>> free_cells;
        std::vector<char> is_pivot(r, 0);
        for (int c : pivots) is_pivot[c] = 1;
        for (int i = 0; i < d; ++i)
            for (int j = pivots[i] + 1; j < r; ++j)
                if (!is_pivot[j]) free_cells.emplace_back(i, j);

        std::vector<uint8_t> fill(free_cells.size(), 0);
        for (;;) {
            Subspace s;
            s.field = &f;
            s.ambient = r;
            s.dim = d;
            s.rows.assign(static_cast<size_t>(d) * r, 0);
            for (int i = 0; i < d; ++i) s.rows[static_cast<size_t>(i) * r + pivots[i]] = 1;
            for (size_t t = 0; t < free_cells.size(); ++t)
                s.rows[static_cast<size_t>(free_cells[t].first) * r + free_cells[t].second] = fill[t];
            out.push_back(std::move(s));

            size_t t = fill.size();
            while (t > 0 && fill[t - 1] == q - 1) fill[--t] = 0;
            if (t == 0) break;
            ++fill[t - 1];
        }

        int i = d - 1;
        while (i >= 0 && pivots[i] == r - d + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), subspace_less);
    return out;
}

std::vector<Subspace> proper_nontrivial_subspaces(const FqField& f, int r) {
    std::vector<Subspace> out;
    for (int d = 1; d < r; ++d) {
        auto part = enumerate_subspaces(f, r, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

BigInt gaussian_binomial(int r, int d, int q) {
    if (d < 0 || d > r) throw ValidationError("linalg", "gaussian binomial indices out of range");
    // Pascal-style recurrence keeps every intermediate an integer.
    std::vector<BigInt> row(d + 1, 0);
    row[0] = 1;
    BigInt qd;
    for (int n = 1; n <= r; ++n) {
        for (int j = std::min(n, d); j >= 1; --j) {
            qd = 1;
            for (int t = 0; t < j; ++t) qd *= q;
            row[j] = row[j - 1] + qd * row[j];
        }
    }
    return row[d];
}

BigInt gl_order(int q, int r) {
    BigInt qr = 1;
    for (int i = 0; i < r; ++i) qr *= q;
    BigInt total = 1, qi = 1;
    for (int i = 0; i < r; ++i) {
        total *= (qr - qi);
        qi *= q;
    }
    return total;
}

namespace {

// Shared recursive core: extend a partial list of independent row vectors by
// every vector outside their span, in increasing encoding order.
void extend_rows(const FqField& F, int r, std::vector<std::vector<uint8_t>>& chosen, Matrix& rref_state,
                 int rank, bool projective_only, int min_code,
                 const std::function<void(const std::vector<std::vector<uint8_t>>&)>& fn) {
    if (static_cast<int>(chosen.size()) == r) {
        fn(chosen);
        return;
    }
    int q = F.q;
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= q;
    std::vector<uint8_t> v(r);
    for (long long code = min_code; code < total; ++code) {
        long long c = code;
        for (int j = r - 1; j >= 0; --j) {
            v[j] = static_cast<uint8_t>(c % q);
            c /= q;
        }
        if (projective_only) {
            int first = -1;
            for (int j = 0; j < r; ++j)
                if (v[j] != 0) {
                    first = j;
                    break;
                }
            if (first < 0 || v[first] != 1) continue;
        }
        // Reduce v against current RREF rows; skip if dependent.
        std::vector<uint8_t> w = v;
        for (int i = 0; i < rank; ++i) {
            int pivot = -1;
            for (int j = 0; j < r; ++j)
                if (rref_state.at(i, j) != 0) {
                    pivot = j;
                    break;
                }
            uint8_t csc = w[pivot];
            if (csc == 0) continue;
            for (int j = 0; j < r; ++j) w[j] = F.sub(w[j], F.mul(csc, rref_state.at(i, j)));
        }
        bool zero = true;
        for (uint8_t x : w)
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) continue;

        Matrix saved = rref_state;
        // Append w, rescale to pivot 1, and re-reduce earlier rows above it.
        int pivot = -1;
        for (int j = 0; j < r; ++j)
            if (w[j] != 0) {
                pivot = j;
                break;
            }
        uint8_t scale = F.inv(w[pivot]);
        for (int j = 0; j < r; ++j) rref_state.at(rank, j) = F.mul(scale, w[j]);
        for (int i = 0; i < rank; ++i) {
            uint8_t cc = rref_state.at(i, pivot);
            if (cc == 0) continue;
            for (int j = 0; j < r; ++j)
                rref_state.at(i, j) = F.sub(rref_state.at(i, j), F.mul(cc, rref_state.at(rank, j)));
        }
        // Keep rows of the state sorted by pivot column so reduction stays RREF.
        // (Row order inside the state does not affect the span tests.)
        chosen.push_back(v);
        extend_rows(F, r, chosen, rref_state, rank + 1, projective_only,
                    projective_only ? static_cast<int>(code) + 1 : 0, fn);
        chosen.pop_back();
        rref_state = saved;
    }
}

}  // namespace

void enumerate_gl(const FqField& f, int r, const std::function<void(const Matrix&)>& fn) {
    if (r < 1) throw ValidationError("linalg", "rank must be >= 1");
    BigInt order = gl_order(f.q, r);
    if (order > 10000000) {
        throw BudgetError("gl-budget", "|GL_" + std::to_string(r) + "(F_" + std::to_string(f.q) + ")| exceeds 10^7",
                          "order = " + order.str());
    }
    std::vector<std::vector<uint8_t>> chosen;
    Matrix state(f, r, r);
    extend_rows(f, r, chosen, state, 0, false, /*min_code=*/1,
                [&](const std::vector<std::vector<uint8_t>>& rows_sel) {
                    Matrix g(f, r, r);
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < r; ++j) g.at(i, j) = rows_sel[i][j];
                    fn(g);
                });
}

Subspace act(const Matrix& g, const Subspace& v) {
    if (g.field != v.field || g.cols != v.ambient || g.rows != v.ambient)
        throw ValidationError("linalg", "ambient mismatch in action");
    if (!is_invertible(g)) throw ValidationError("linalg", "action by non-invertible matrix");
    std::vector<std::vector<uint8_t>> image;
    image.reserve(v.dim);
    for (int i = 0; i < v.dim; ++i) {
        std::vector<uint8_t> row(v.ambient);
        for (int j = 0; j < v.ambient; ++j) row[j] = v.at(i, j);
        image.push_back(mat_apply(g, row));
    }
    return span_of(*v.field, v.ambient, image);
}

void enumerate_projective_bases(const FqField& f, int r,
                                const std::function<void(const std::vector<std::vector<uint8_t>>&)>& fn) {
    if (r < 1) throw ValidationError("linalg", "rank must be >= 1");
    std::vector<std::vector<uint8_t>> chosen;
    Matrix state(f, r, r);
    extend_rows(f, r, chosen, state, 0, true, 1, fn);
}

BigInt projective_basis_count(int q, int r) {
    BigInt denom = 1;
    for (int i = 0; i < r; ++i) denom *= (q - 1);
    for (int i = 2; i <= r; ++i) denom *= i;
    return gl_order(q, r) / denom;
}

}  // namespace rankfilt

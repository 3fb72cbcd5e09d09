#include "rankfilt/snf.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "rankfilt/errors.hpp"

// Elimination order: among the entries of the sparsest active columns, pick
// the pivot minimizing (Markowitz fill estimate, |value|) lexicographically,
// with (col, row) as the deterministic tie break. Boundary matrices of the
// complexes built here are dominated by +-1 entries, so pivots are almost
// always unimodular and coefficient growth stays flat; the checked 64-bit
// path is the common case and the big-integer restart is the rare one.

namespace rankfilt {

namespace {

struct Int64Overflow {};

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}
inline long long checked_neg(long long a) {
    if (a == std::numeric_limits<long long>::min()) throw Int64Overflow{};
    return -a;
}

inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_neg(const BigInt& a) { return -a; }

inline long long abs_of(long long a) { return a < 0 ? checked_neg(a) : a; }
inline BigInt abs_of(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline bool is_zero(long long a) { return a == 0; }
inline bool is_zero(const BigInt& a) { return a.is_zero(); }

// g = gcd(a, b) > 0 together with Bezout coefficients x, y: x*a + y*b = g.
template <class T>
void ext_gcd(const T& a, const T& b, T& g, T& x, T& y) {
    T old_r = a, r = b;
    T old_x = 1, xx = 0;
    T old_y = 0, yy = 1;
    while (!is_zero(r)) {
        T qt = old_r / r;
        T tmp = checked_add(old_r, checked_neg(checked_mul(qt, r)));
        old_r = r;
        r = tmp;
        tmp = checked_add(old_x, checked_neg(checked_mul(qt, xx)));
        old_x = xx;
        xx = tmp;
        tmp = checked_add(old_y, checked_neg(checked_mul(qt, yy)));
        old_y = yy;
        yy = tmp;
    }
    g = old_r;
    x = old_x;
    y = old_y;
    if (g < 0) {
        g = checked_neg(g);
        x = checked_neg(x);
        y = checked_neg(y);
    }
}

template <class T>
class Engine {
public:
    Engine(const SparseIntMat& m, bool transforms)
        : nrows_(m.rows), ncols_(m.cols), transforms_(transforms), row_(m.rows), col_rows_(m.cols) {
        for (const auto& [r, c, v] : m.entries) {
            if (v == 0) continue;
            if (r < 0 || r >= m.rows || c < 0 || c >= m.cols)
                throw ValidationError("snf", "sparse entry out of bounds");
            auto [it, fresh] = row_[r].emplace(c, T(v));
            if (!fresh) throw ValidationError("snf", "duplicate sparse entry");
            col_rows_[c].insert(r);
        }
        if (transforms_) {
            U_ = identity(nrows_);
            Uinv_ = identity(nrows_);
            V_ = identity(ncols_);
            Vinv_ = identity(ncols_);
        }
    }

    SmithResult run() {
        std::vector<T> diag;
        std::vector<std::pair<int, int>> pivot_at;
        for (;;) {
            auto [pi, pj] = select_pivot();
            if (pi < 0) break;
            reduce_pivot(pi, pj);
            // Divisibility of the remaining submatrix: absorb any entry the
            // pivot does not divide and re-eliminate.
            for (;;) {
                auto [bi, bj] = find_non_multiple(pi, pj);
                if (bi < 0) break;
                add_row(bi, pi, T(1));  // pull the offending row into the pivot row
                reduce_pivot(pi, pj);
            }
            T p = row_[pi][pj];
            if (p < 0) {
                negate_row(pi);
                p = row_[pi][pj];
            }
            diag.push_back(p);
            pivot_at.emplace_back(pi, pj);
            done_rows_.insert(pi);
            done_cols_.insert(pj);
            erase_entry(pi, pj);
        }

        SmithResult res;
        res.rank = static_cast<int>(diag.size());
        for (auto& d : diag) res.factors.push_back(BigInt(d));
        for (size_t i = 0; i + 1 < res.factors.size(); ++i)
            if (res.factors[i + 1] % res.factors[i] != 0)
                throw std::logic_error("smith normal form: divisibility chain violated");
        if (transforms_) {
            // Pivots sit scattered across the matrix; permutations (|det| = 1)
            // move the t-th pivot to position (t, t).
            std::vector<int> row_order = completion_order(pivot_at, nrows_, /*use_row=*/true);
            std::vector<int> col_order = completion_order(pivot_at, ncols_, /*use_row=*/false);
            res.U.resize(nrows_);
            res.Uinv.assign(nrows_, std::vector<BigInt>(nrows_));
            for (int i = 0; i < nrows_; ++i) {
                res.U[i] = row_to_big(U_[row_order[i]]);
                for (int j = 0; j < nrows_; ++j) res.Uinv[i][j] = BigInt(Uinv_[i][row_order[j]]);
            }
            res.V.assign(ncols_, std::vector<BigInt>(ncols_));
            res.Vinv.resize(ncols_);
            for (int i = 0; i < ncols_; ++i) {
                res.Vinv[i] = row_to_big(Vinv_[col_order[i]]);
                for (int j = 0; j < ncols_; ++j) res.V[i][j] = BigInt(V_[i][col_order[j]]);
            }
        }
        return res;
    }

private:
    int nrows_, ncols_;
    bool transforms_;
    std::vector<std::map<int, T>> row_;       // row -> (col -> value)
    std::vector<std::set<int>> col_rows_;     // col -> rows with a nonzero
    std::set<int> done_rows_, done_cols_;
    std::vector<std::vector<T>> U_, Uinv_, V_, Vinv_;

    static std::vector<std::vector<T>> identity(int n) {
        std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
        for (int i = 0; i < n; ++i) m[i][i] = T(1);
        return m;
    }

    static std::vector<BigInt> row_to_big(const std::vector<T>& row) {
        std::vector<BigInt> out;
        out.reserve(row.size());
        for (const T& v : row) out.push_back(BigInt(v));
        return out;
    }

    // Pivot rows (or columns) in completion order, then the rest ascending.
    static std::vector<int> completion_order(const std::vector<std::pair<int, int>>& pivot_at, int total,
                                             bool use_row) {
        std::vector<int> order;
        order.reserve(total);
        std::vector<char> taken(total, 0);
        for (const auto& [pi, pj] : pivot_at) {
            int idx = use_row ? pi : pj;
            order.push_back(idx);
            taken[idx] = 1;
        }
        for (int i = 0; i < total; ++i)
            if (!taken[i]) order.push_back(i);
        return order;
    }

    void erase_entry(int r, int c) {
        row_[r].erase(c);
        col_rows_[c].erase(r);
    }

    void set_entry(int r, int c, const T& v) {
        if (is_zero(v)) {
            erase_entry(r, c);
        } else {
            row_[r][c] = v;
            col_rows_[c].insert(r);
        }
    }

    // --- row operations (mirror on U; inverse ops on Uinv columns) ---

    // row[dst] += f * row[src]
    void add_row(int src, int dst, const T& f) {
        for (const auto& [c, v] : row_[src]) {
            auto it = row_[dst].find(c);
            T nv = it == row_[dst].end() ? checked_mul(f, v) : checked_add(it->second, checked_mul(f, v));
            set_entry(dst, c, nv);
        }
        if (transforms_) {
            for (int j = 0; j < nrows_; ++j) U_[dst][j] = checked_add(U_[dst][j], checked_mul(f, U_[src][j]));
            // (R^-1 subtracts) applied on the right of Uinv: col[src] -= f * col[dst]
            for (int i = 0; i < nrows_; ++i)
                Uinv_[i][src] = checked_add(Uinv_[i][src], checked_neg(checked_mul(f, Uinv_[i][dst])));
        }
    }

    void negate_row(int r) {
        for (auto& [c, v] : row_[r]) v = checked_neg(v);
        if (transforms_) {
            for (int j = 0; j < nrows_; ++j) U_[r][j] = checked_neg(U_[r][j]);
            for (int i = 0; i < nrows_; ++i) Uinv_[i][r] = checked_neg(Uinv_[i][r]);
        }
    }

    // rows (a, b) <- (x*a + y*b, u*a + w*b), det = x*w - y*u = +-1
    void combine_rows(int a, int b, const T& x, const T& y, const T& u, const T& w) {
        std::set<int> cols;
        for (const auto& [c, v] : row_[a]) cols.insert(c);
        for (const auto& [c, v] : row_[b]) cols.insert(c);
        for (int c : cols) {
            T va = get(row_[a], c), vb = get(row_[b], c);
            set_entry(a, c, checked_add(checked_mul(x, va), checked_mul(y, vb)));
            set_entry(b, c, checked_add(checked_mul(u, va), checked_mul(w, vb)));
        }
        if (transforms_) {
            for (int j = 0; j < nrows_; ++j) {
                T va = U_[a][j], vb = U_[b][j];
                U_[a][j] = checked_add(checked_mul(x, va), checked_mul(y, vb));
                U_[b][j] = checked_add(checked_mul(u, va), checked_mul(w, vb));
            }
            // Uinv <- Uinv * R^-1, R^-1 = det * [[w, -y], [-u, x]] on (a, b)
            T det = checked_add(checked_mul(x, w), checked_neg(checked_mul(y, u)));
            for (int i = 0; i < nrows_; ++i) {
                T va = Uinv_[i][a], vb = Uinv_[i][b];
                Uinv_[i][a] = checked_mul(det, checked_add(checked_mul(w, va), checked_neg(checked_mul(u, vb))));
                Uinv_[i][b] = checked_mul(det, checked_add(checked_mul(x, vb), checked_neg(checked_mul(y, va))));
            }
        }
    }

    // --- column operations (mirror on V; inverse ops on Vinv rows) ---

    void add_col(int src, int dst, const T& f) {
        // copy: set_entry mutates col_rows_[src] iteration is over a copy
        std::vector<std::pair<int, T>> src_entries;
        for (int r : col_rows_[src]) src_entries.emplace_back(r, row_[r][src]);
        for (const auto& [r, v] : src_entries) {
            T nv = checked_add(get(row_[r], dst), checked_mul(f, v));
            set_entry(r, dst, nv);
        }
        if (transforms_) {
            for (int i = 0; i < ncols_; ++i) V_[i][dst] = checked_add(V_[i][dst], checked_mul(f, V_[i][src]));
            for (int j = 0; j < ncols_; ++j)
                Vinv_[src][j] = checked_add(Vinv_[src][j], checked_neg(checked_mul(f, Vinv_[dst][j])));
        }
    }

    // cols (a, b) <- (x*a + y*b, u*a + w*b)
    void combine_cols(int a, int b, const T& x, const T& y, const T& u, const T& w) {
        std::set<int> rows;
        for (int r : col_rows_[a]) rows.insert(r);
        for (int r : col_rows_[b]) rows.insert(r);
        for (int r : rows) {
            T va = get(row_[r], a), vb = get(row_[r], b);
            set_entry(r, a, checked_add(checked_mul(x, va), checked_mul(y, vb)));
            set_entry(r, b, checked_add(checked_mul(u, va), checked_mul(w, vb)));
        }
        if (transforms_) {
            for (int i = 0; i < ncols_; ++i) {
                T va = V_[i][a], vb = V_[i][b];
                V_[i][a] = checked_add(checked_mul(x, va), checked_mul(y, vb));
                V_[i][b] = checked_add(checked_mul(u, va), checked_mul(w, vb));
            }
            T det = checked_add(checked_mul(x, w), checked_neg(checked_mul(y, u)));
            for (int j = 0; j < ncols_; ++j) {
                T va = Vinv_[a][j], vb = Vinv_[b][j];
                Vinv_[a][j] = checked_mul(det, checked_add(checked_mul(w, va), checked_neg(checked_mul(u, vb))));
                Vinv_[b][j] = checked_mul(det, checked_add(checked_mul(x, vb), checked_neg(checked_mul(y, va))));
            }
        }
    }

    static T get(const std::map<int, T>& m, int key) {
        auto it = m.find(key);
        return it == m.end() ? T(0) : it->second;
    }

    std::pair<int, int> select_pivot() const {
        size_t best_col_nnz = SIZE_MAX;
        for (int c = 0; c < ncols_; ++c) {
            if (done_cols_.count(c) || col_rows_[c].empty()) continue;
            best_col_nnz = std::min(best_col_nnz, col_rows_[c].size());
        }
        if (best_col_nnz == SIZE_MAX) return {-1, -1};
        int bi = -1, bj = -1;
        T bval = T(0);
        size_t bfill = SIZE_MAX;
        for (int c = 0; c < ncols_; ++c) {
            if (done_cols_.count(c) || col_rows_[c].size() != best_col_nnz) continue;
            for (int r : col_rows_[c]) {
                size_t fill = (row_[r].size() - 1) * (col_rows_[c].size() - 1);
                const T& v = row_[r].at(c);
                if (bi < 0 || fill < bfill || (fill == bfill && abs_of(v) < abs_of(bval))) {
                    bi = r;
                    bj = c;
                    bval = v;
                    bfill = fill;
                }
            }
        }
        return {bi, bj};
    }

    // Clear row pj / column pj around pivot (pi, pj), gcd-improving the pivot
    // as needed, until the pivot is the only nonzero in its row and column.
    void reduce_pivot(int pi, int pj) {
        for (;;) {
            while (col_rows_[pj].size() > 1) {
                int other = -1;
                for (int r : col_rows_[pj])
                    if (r != pi) {
                        other = r;
                        break;
                    }
                T p = row_[pi][pj], v = row_[other][pj];
                if (v % p == 0) {
                    add_row(pi, other, checked_neg(v / p));
                } else {
                    T g, x, y;
                    ext_gcd(p, v, g, x, y);
                    combine_rows(pi, other, x, y, checked_neg(v / g), p / g);
                }
            }
            while (row_[pi].size() > 1) {
                auto it = row_[pi].begin();
                int other = it->first != pj ? it->first : std::next(it)->first;
                T p = row_[pi][pj], v = row_[pi][other];
                if (v % p == 0) {
                    add_col(pj, other, checked_neg(v / p));
                } else {
                    T g, x, y;
                    ext_gcd(p, v, g, x, y);
                    combine_cols(pj, other, x, y, checked_neg(v / g), p / g);
                }
            }
            // gcd column steps may have refilled the pivot column
            if (col_rows_[pj].size() == 1) break;
        }
    }

    std::pair<int, int> find_non_multiple(int pi, int pj) const {
        const T& p = row_[pi].at(pj);
        if (p == 1 || p == -1) return {-1, -1};
        for (int r = 0; r < nrows_; ++r) {
            if (r == pi || done_rows_.count(r)) continue;
            for (const auto& [c, v] : row_[r]) {
                if (v % p != 0) return {r, c};
            }
        }
        return {-1, -1};
    }
};

}  // namespace

SmithResult smith_normal_form(const SparseIntMat& m, const SmithOptions& opts) {
    try {
        return Engine<long long>(m, opts.transforms).run();
    } catch (const Int64Overflow&) {
        return Engine<BigInt>(m, opts.transforms).run();
    }
}

AbelianGroup cokernel(const SparseIntMat& m) {
    SmithResult snf = smith_normal_form(m);
    AbelianGroup g;
    g.rank = m.rows - snf.rank;
    g.torsion = snf.torsion();
    return g;
}

}  // namespace rankfilt

#include "rankfilt/rankchart.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rankfilt/errors.hpp"

namespace rankfilt {

AbelianGroup cyclic_group_homology(long long m, int t) {
    if (m < 1 || t < 0) throw ValidationError("rankchart", "bad cyclic homology parameters");
    // Chain complex from the periodic resolution: Z <-0- Z <-m- Z <-0- ...
    auto map_into_degree = [&](int k) {
        SparseIntMat b(1, 1);
        if (k >= 1) b.add(0, 0, k % 2 == 1 ? 0 : m);
        else b = SparseIntMat(0, 1);
        return b;
    };
    SparseIntMat into = map_into_degree(t);        // d_t : C_t -> C_{t-1}
    SparseIntMat outof = map_into_degree(t + 1);   // d_{t+1} : C_{t+1} -> C_t
    long long rank_into = smith_normal_form(into).rank;
    SmithResult out_snf = smith_normal_form(outof);
    AbelianGroup g;
    g.rank = 1 - rank_into - out_snf.rank;
    g.torsion = out_snf.torsion();
    return g;
}

std::vector<Matrix> gl_generators(const FqField& f, int r) {
    std::vector<Matrix> gens;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            Matrix e = Matrix::identity(f, r);
            e.at(i, j) = 1;
            gens.push_back(e);
        }
    Matrix d = Matrix::identity(f, r);
    d.at(0, 0) = f.unit_generator();
    gens.push_back(d);
    return gens;
}

namespace {

int sort_sign(std::vector<int>& v) {
    // parity of the permutation sorting v (v has distinct entries)
    int sign = 1;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) sign = -sign;
    std::sort(v.begin(), v.end());
    return sign;
}

std::vector<BigInt> mat_vec(const std::vector<std::vector<BigInt>>& m, const std::vector<BigInt>& v) {
    std::vector<BigInt> out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero() && !m[i][j].is_zero()) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace

DeltaActionReport gl_action_on_delta(const FqField& f, int r, long long chain_budget) {
    if (r < 1) throw ValidationError("rankchart", "rank must be >= 1");
    DeltaActionReport rep;
    rep.q = f.q;
    rep.r = r;
    if (r == 1) {
        // Delta_1 = Z with the trivial action of GL_1.
        rep.delta_rank = 1;
        rep.generators = gl_generators(f, 1);
        rep.action.assign(rep.generators.size(), {{BigInt(1)}});
        return rep;
    }

    CbcReport cbc = delta(f, r);
    int degree = 2 * r - 3;
    if (!cbc.delta_torsion.empty())
        throw ValidationError("rankchart", "homology in degree " + std::to_string(degree) + " has torsion",
                              "action transport is only implemented for the free case");

    auto simp_d = cbc.complex.simplices_of_dim(degree);
    auto simp_d1 = cbc.complex.simplices_of_dim(degree + 1);
    auto simp_dm1 = cbc.complex.simplices_of_dim(degree - 1);
    long long n = static_cast<long long>(simp_d.size());
    if (n > chain_budget)
        throw BudgetError("rankchart-budget", "chain group too large for action transport",
                          std::to_string(n) + " > " + std::to_string(chain_budget));

    // Kernel lattice of d_degree from the column transform of its SNF.
    SparseIntMat bnd_d = boundary_matrix(simp_d, simp_dm1, degree, /*reduced=*/true);
    SmithOptions with_transforms;
    with_transforms.transforms = true;
    SmithResult snf_d = smith_normal_form(bnd_d, with_transforms);
    long long kdim = n - snf_d.rank;

    // Images of the (degree+1)-simplices in kernel coordinates: rows
    // rank..n-1 of Vinv applied to each boundary column.
    SparseIntMat bnd_d1 = boundary_matrix(simp_d1, simp_d, degree + 1, true);
    std::vector<std::vector<long long>> cols(bnd_d1.cols);
    {
        std::vector<std::vector<std::pair<int, long long>>> sparse_cols(bnd_d1.cols);
        for (const auto& [rr, cc, vv] : bnd_d1.entries) sparse_cols[cc].emplace_back(rr, vv);
        SparseIntMat m(static_cast<int>(kdim), bnd_d1.cols);
        for (int c = 0; c < bnd_d1.cols; ++c) {
            for (long long i = 0; i < n; ++i) {
                BigInt acc = 0;
                for (const auto& [rr, vv] : sparse_cols[c]) acc += snf_d.Vinv[i][rr] * vv;
                if (i < snf_d.rank) {
                    if (!acc.is_zero()) throw std::logic_error("boundary image escapes the cycle lattice");
                } else if (!acc.is_zero()) {
                    m.add(static_cast<int>(i - snf_d.rank), c, to_int64_checked(acc));
                }
            }
        }
        // Quotient presentation: H = Z^kdim / col-span(m).
        SmithResult snf_m = smith_normal_form(m, with_transforms);
        for (const BigInt& d : snf_m.torsion())
            if (d > 1) throw std::logic_error("free homology expected");
        long long b = kdim - snf_m.rank;
        if (b != to_int64_checked(cbc.delta_rank))
            throw std::logic_error("cycle basis rank mismatch");
        rep.delta_rank = b;

        // Homology basis: h_j = K * Uinv_m[:, rank_m + j], K = last kdim
        // columns of V.
        std::vector<std::vector<BigInt>> basis(b, std::vector<BigInt>(n, 0));  // chains, basis[j][simplex]
        for (long long j = 0; j < b; ++j) {
            std::vector<BigInt> y(kdim, 0);
            for (long long i = 0; i < kdim; ++i) y[i] = snf_m.Uinv[i][snf_m.rank + j];
            for (long long row = 0; row < n; ++row) {
                BigInt acc = 0;
                for (long long i = 0; i < kdim; ++i)
                    if (!y[i].is_zero()) acc += snf_d.V[row][snf_d.rank + i] * y[i];
                basis[j][row] = acc;
            }
        }

        // Vertex action of each generator, transported through chains.
        std::map<std::vector<int>, long long> simp_index;
        for (long long i = 0; i < n; ++i) simp_index[simp_d[i]] = i;
        rep.generators = gl_generators(f, r);
        for (const Matrix& g : rep.generators) {
            std::vector<int> vperm(cbc.registry.size());
            for (size_t vi = 0; vi < cbc.registry.size(); ++vi) {
                Subspace img = act(g, cbc.registry[vi]);
                auto pos = std::lower_bound(cbc.registry.begin(), cbc.registry.end(), img, subspace_less);
                if (pos == cbc.registry.end() || !(*pos == img)) throw std::logic_error("orbit leaves registry");
                vperm[vi] = static_cast<int>(pos - cbc.registry.begin());
            }
            std::vector<std::vector<BigInt>> rho(b, std::vector<BigInt>(b, 0));
            for (long long j = 0; j < b; ++j) {
                // chain image of basis[j] under the simplicial map
                std::vector<BigInt> image(n, 0);
                for (long long srow = 0; srow < n; ++srow) {
                    if (basis[j][srow].is_zero()) continue;
                    std::vector<int> mapped = simp_d[srow];
                    for (int& v : mapped) v = vperm[v];
                    int sign = sort_sign(mapped);
                    auto it = simp_index.find(mapped);
                    if (it == simp_index.end()) throw std::logic_error("simplex image not in complex");
                    image[it->second] += sign * basis[j][srow];
                }
                // kernel coordinates, then free quotient coordinates
                std::vector<BigInt> y(kdim, 0);
                for (long long i = 0; i < n; ++i) {
                    if (image[i].is_zero()) continue;
                    for (long long kk = 0; kk < n; ++kk) {
                        if (snf_d.Vinv[kk][i].is_zero()) continue;
                        if (kk < snf_d.rank) continue;  // checked below
                        y[kk - snf_d.rank] += snf_d.Vinv[kk][i] * image[i];
                    }
                }
                for (long long kk = 0; kk < snf_d.rank; ++kk) {
                    BigInt acc = 0;
                    for (long long i = 0; i < n; ++i)
                        if (!image[i].is_zero()) acc += snf_d.Vinv[kk][i] * image[i];
                    if (!acc.is_zero()) throw std::logic_error("image chain is not a cycle");
                }
                std::vector<BigInt> z = mat_vec(snf_m.U, y);
                for (long long i = 0; i < b; ++i) rho[i][j] = z[snf_m.rank + i];
            }
            rep.action.push_back(std::move(rho));
        }
    }
    return rep;
}

CoinvariantsResult coinvariants_delta(const FqField& f, int r, long long chain_budget) {
    DeltaActionReport act_rep = gl_action_on_delta(f, r, chain_budget);
    long long b = act_rep.delta_rank;
    SparseIntMat stack(static_cast<int>(b), static_cast<int>(b * act_rep.action.size()));
    int col = 0;
    for (const auto& rho : act_rep.action) {
        for (long long j = 0; j < b; ++j, ++col)
            for (long long i = 0; i < b; ++i) {
                BigInt v = rho[i][j] - (i == j ? 1 : 0);
                if (!v.is_zero()) stack.add(static_cast<int>(i), col, to_int64_checked(v));
            }
    }
    CoinvariantsResult res;
    res.q = f.q;
    res.r = r;
    res.delta_rank = b;
    res.group = cokernel(stack);
    res.torsion_flag = res.group.rank == 0;
    return res;
}

const RankChartEntry& RankTable::at(int s, int t) const {
    for (const auto& e : entries)
        if (e.s == s && e.t == t) return e;
    throw ValidationError("rankchart", "table entry out of range");
}

RankTable rank_complex_table(const FqField& f, int wmax) {
    if (wmax < 0 || wmax > 4) throw ValidationError("rankchart", "wmax must be in 0..4");
    RankTable table;
    table.q = f.q;
    table.wmax = wmax;

    // Connectivity verification per column rank, attempted only where cheap.
    std::map<int, bool> connectivity_ok;
    auto connectivity_for = [&](int rr) {
        auto it = connectivity_ok.find(rr);
        if (it != connectivity_ok.end()) return it->second;
        bool ok = false;
        if (rr == 1 || rr == 2 || (rr == 3 && f.q <= 3)) ok = verify_connectivity(f, rr).concentrated;
        connectivity_ok[rr] = ok;
        return ok;
    };
    auto coinvariants_in_budget = [&](int rr) { return rr == 1 || rr == 2 || (rr == 3 && f.q == 2); };

    for (int t = 0; t <= wmax; ++t)
        for (int s = 0; s <= wmax; ++s) {
            RankChartEntry e;
            e.s = s;
            e.t = t;
            if (t < s) {
                if (connectivity_for(s + 1)) {
                    e.kind = ChartKind::ZeroByConnectivity;
                    e.provenance = "vanishes below the diagonal: connectivity verified for rank " +
                                   std::to_string(s + 1);
                } else {
                    e.kind = ChartKind::NotComputed;
                    e.provenance = "connectivity for rank " + std::to_string(s + 1) + " not verified here";
                }
            } else if (s == 0) {
                e.kind = ChartKind::Group;
                e.value = cyclic_group_homology(f.q - 1, t);
                e.provenance = "homology of the cyclic unit group, order " + std::to_string(f.q - 1);
            } else if (s == t) {
                if (coinvariants_in_budget(s + 1)) {
                    CoinvariantsResult ci = coinvariants_delta(f, s + 1);
                    e.kind = ChartKind::Group;
                    e.value = ci.group;
                    e.provenance = "coinvariants of the stable Steinberg module, rank " + std::to_string(s + 1);
                } else {
                    e.kind = ChartKind::NotComputed;
                    e.provenance = "coinvariants beyond budget for rank " + std::to_string(s + 1);
                }
            } else {
                e.kind = ChartKind::NotComputed;
                e.provenance = "higher group homology with stable Steinberg coefficients not implemented";
            }
            table.entries.push_back(std::move(e));
        }
    return table;
}

}  // namespace rankfilt

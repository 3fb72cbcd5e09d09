#include "rankfilt/simplicial.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rankfilt/errors.hpp"
#include "rankfilt/parallel.hpp"

namespace rankfilt {

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

SimplicialComplex SimplicialComplex::from_facets(int num_vertices, std::vector<std::vector<int>> raw) {
    for (auto& f : raw) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw ValidationError("complex", "facet has repeated vertex");
        if (!f.empty() && (f.front() < 0 || f.back() >= num_vertices))
            throw ValidationError("complex", "facet vertex id out of range");
        if (f.empty()) throw ValidationError("complex", "empty facet");
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Antichain reduction: drop facets contained in a larger one.
    std::vector<std::vector<int>> kept;
    std::vector<size_t> order(raw.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return raw[a].size() > raw[b].size(); });
    for (size_t idx : order) {
        const auto& f = raw[idx];
        bool contained = false;
        for (const auto& g : kept) {
            if (g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());

    SimplicialComplex c;
    c.num_vertices = num_vertices;
    c.facets = std::move(kept);
    return c;
}

std::vector<std::vector<int>> SimplicialComplex::simplices_of_dim(int k) const {
    std::vector<std::vector<int>> out;
    if (k < 0) return out;
    std::set<std::vector<int>> seen;
    std::vector<int> pick(k + 1);
    for (const auto& f : facets) {
        int n = static_cast<int>(f.size());
        if (n < k + 1) continue;
        // iterate (k+1)-subsets of f
        std::vector<int> idx(k + 1);
        for (int i = 0; i <= k; ++i) idx[i] = i;
        for (;;) {
            for (int i = 0; i <= k; ++i) pick[i] = f[idx[i]];
            seen.insert(pick);
            int i = k;
            while (i >= 0 && idx[i] == n - (k + 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

std::vector<long long> SimplicialComplex::simplex_counts() const {
    std::vector<long long> counts;
    for (int k = 0; k <= dimension(); ++k) counts.push_back(static_cast<long long>(simplices_of_dim(k).size()));
    return counts;
}

bool SimplicialComplex::is_simplex(const std::vector<int>& s) const {
    if (s.empty()) return true;
    for (const auto& f : facets) {
        if (f.size() < s.size()) continue;
        if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
    }
    return false;
}

SimplicialComplex SimplicialComplex::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != num_vertices)
        throw ValidationError("complex", "relabeling permutation has wrong length");
    std::vector<std::vector<int>> mapped = facets;
    for (auto& f : mapped)
        for (int& v : f) v = perm[v];
    return from_facets(num_vertices, std::move(mapped));
}

SimplicialComplex order_complex(int n, const std::vector<std::pair<int, int>>& strict_less) {
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    for (auto [a, b] : strict_less) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("poset", "relation element out of range");
        lt[a][b] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (lt[i][i]) throw ValidationError("poset", "relation is not irreflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lt[i][j])
                for (int k = 0; k < n; ++k)
                    if (lt[j][k] && !lt[i][k])
                        throw ValidationError("poset", "relation is not transitive",
                                              std::to_string(i) + "<" + std::to_string(j) + "<" + std::to_string(k));

    // Covering relation; maximal chains are cover paths from minimal elements.
    std::vector<std::vector<int>> covers(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!lt[i][j]) continue;
            bool mid = false;
            for (int z = 0; z < n && !mid; ++z) mid = lt[i][z] && lt[z][j];
            if (!mid) covers[i].push_back(j);
        }
    std::vector<char> minimal(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lt[i][j]) minimal[j] = 0;

    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int v) -> void {
        chain.push_back(v);
        if (covers[v].empty()) {
            chains.push_back(chain);
        } else {
            for (int w : covers[v]) self(self, w);
        }
        chain.pop_back();
    };
    for (int v = 0; v < n; ++v)
        if (minimal[v]) dfs(dfs, v);

    return SimplicialComplex::from_facets(n, std::move(chains));
}

std::vector<int> HomologyResult::degrees_with_homology() const {
    std::vector<int> out;
    for (const auto& [k, g] : groups)
        if (!g.is_zero()) out.push_back(k);
    return out;
}

SparseIntMat boundary_matrix(const std::vector<std::vector<int>>& simplices_k,
                             const std::vector<std::vector<int>>& simplices_km1, int k, bool reduced) {
    int nk = static_cast<int>(simplices_k.size());
    if (k == 0) {
        SparseIntMat m(reduced ? 1 : 0, nk);
        if (reduced)
            for (int c = 0; c < nk; ++c) m.add(0, c, 1);
        return m;
    }
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < simplices_km1.size(); ++i) index[simplices_km1[i]] = static_cast<int>(i);
    SparseIntMat m(static_cast<int>(simplices_km1.size()), nk);
    std::vector<int> face;
    for (int c = 0; c < nk; ++c) {
        const auto& s = simplices_k[c];
        for (int drop = 0; drop <= k; ++drop) {
            face.clear();
            for (int i = 0; i <= k; ++i)
                if (i != drop) face.push_back(s[i]);
            auto it = index.find(face);
            if (it == index.end()) throw std::logic_error("face missing from complex");
            m.add(it->second, c, drop % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

namespace {

void check_dd_zero(const SparseIntMat& a, const SparseIntMat& b) {
    // a: C_k -> C_{k-1}, b: C_{k+1} -> C_k; verify a*b = 0 by sparse product.
    std::vector<std::vector<std::pair<int, long long>>> a_by_col(a.cols);
    for (const auto& [r, c, v] : a.entries) a_by_col[c].emplace_back(r, v);
    std::vector<std::vector<std::pair<int, long long>>> b_cols(b.cols);
    for (const auto& [r, c, v] : b.entries) b_cols[c].emplace_back(r, v);
    for (int c = 0; c < b.cols; ++c) {
        std::map<int, long long> acc;
        for (const auto& [mid, bv] : b_cols[c])
            for (const auto& [r, av] : a_by_col[mid]) acc[r] += av * bv;
        for (const auto& [r, v] : acc)
            if (v != 0) throw std::logic_error("boundary of boundary is nonzero");
    }
}

}  // namespace

HomologyResult homology(const SimplicialComplex& c, bool reduced) {
    HomologyResult res;
    int dim = c.dimension();
    if (dim < 0) {
        if (reduced) res.groups[-1] = AbelianGroup{1, {}};
        return res;
    }

    // Boundary matrices, streaming two simplex lists at a time.
    std::vector<SparseIntMat> bnd(dim + 1);
    std::vector<long long> counts(dim + 1, 0);
    std::vector<std::vector<int>> prev;  // degree k-1
    for (int k = 0; k <= dim; ++k) {
        std::vector<std::vector<int>> cur = c.simplices_of_dim(k);
        counts[k] = static_cast<long long>(cur.size());
        bnd[k] = boundary_matrix(cur, prev, k, reduced);
        prev = std::move(cur);
    }
    for (int k = 1; k <= dim; ++k) check_dd_zero(bnd[k - 1], bnd[k]);

    std::vector<SmithResult> snf(dim + 1);
    parallel_for(static_cast<size_t>(dim) + 1,
                 [&](size_t k) { snf[k] = smith_normal_form(bnd[k]); });

    auto rank_of = [&](int k) -> long long { return k >= 0 && k <= dim ? snf[k].rank : 0; };
    int low = reduced ? -1 : 0;
    for (int k = low; k <= dim; ++k) {
        long long nk = k == -1 ? 1 : counts[k];
        AbelianGroup g;
        g.rank = nk - rank_of(k) - rank_of(k + 1);
        if (k + 1 <= dim) g.torsion = snf[k + 1].torsion();
        res.groups[k] = std::move(g);
    }
    return res;
}

long long euler_characteristic(const SimplicialComplex& c) {
    long long chi = 0;
    auto counts = c.simplex_counts();
    for (size_t k = 0; k < counts.size(); ++k) chi += (k % 2 == 0 ? counts[k] : -counts[k]);
    return chi;
}

void write_scx(const SimplicialComplex& c, std::ostream& os) {
    os << "scx 1 " << c.num_vertices << "\n";
    for (const auto& f : c.facets) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) os << ' ';
            os << f[i];
        }
        os << "\n";
    }
}

SimplicialComplex read_scx(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("scx", "empty scx stream");
    std::istringstream header(line);
    std::string magic;
    int version = 0, n = 0;
    header >> magic >> version >> n;
    if (magic != "scx" || version != 1 || n < 0) throw ValidationError("scx", "bad scx header: " + line);
    std::vector<std::vector<int>> facets;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> f;
        int v;
        while (ls >> v) f.push_back(v);
        if (!ls.eof()) throw ValidationError("scx", "bad facet line: " + line);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace rankfilt

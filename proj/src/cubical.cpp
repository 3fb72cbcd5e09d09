#include "rankfilt/cubical.hpp"

#include <algorithm>
#include <numeric>

#include "rankfilt/errors.hpp"

namespace rankfilt {

namespace {

std::string point_str(const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace

CubicalDiagram CubicalDiagram::make(const FqField& f, int r, int n, int deg, std::vector<Subspace> values) {
    if (r < 1) throw ValidationError("cubical", "ambient rank must be >= 1");
    if (n < 1) throw ValidationError("cubical", "cube dimension must be >= 1");
    if (deg < 0) throw ValidationError("cubical", "degree must be >= 0");
    size_t expect = 1;
    for (int i = 0; i < n; ++i) expect *= static_cast<size_t>(deg) + 1;
    if (values.size() != expect) throw ValidationError("cubical", "value table has wrong size");
    for (const auto& v : values)
        if (v.field != &f || v.ambient != r) throw ValidationError("cubical", "value has wrong ambient space");
    CubicalDiagram d;
    d.field = &f;
    d.r = r;
    d.n = n;
    d.deg = deg;
    d.values = std::move(values);
    return d;
}

size_t CubicalDiagram::index_of(const std::vector<int>& point) const {
    if (static_cast<int>(point.size()) != n) throw ValidationError("cubical", "point has wrong dimension");
    size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        if (point[i] < 0 || point[i] > deg)
            throw ValidationError("cubical", "point " + point_str(point) + " outside the cube");
        idx = idx * (deg + 1) + static_cast<size_t>(point[i]);
    }
    return idx;
}

std::vector<int> CubicalDiagram::point_of(size_t index) const {
    std::vector<int> p(n);
    for (int i = n - 1; i >= 0; --i) {
        p[i] = static_cast<int>(index % (deg + 1));
        index /= (deg + 1);
    }
    return p;
}

namespace {

// Alternating dimension sum over a chosen axis subset at point p.
int subcube_jump(const CubicalDiagram& d, const std::vector<int>& p, const std::vector<int>& axes) {
    int total = 0;
    int m = static_cast<int>(axes.size());
    std::vector<int> corner = p;
    for (unsigned eps = 0; eps < (1u << m); ++eps) {
        corner = p;
        int parity = 0;
        bool below = false;
        for (int i = 0; i < m; ++i)
            if (eps & (1u << i)) {
                ++parity;
                if (--corner[axes[i]] < 0) below = true;
            }
        int dim = below ? 0 : d.at(corner).dim;
        total += parity % 2 == 0 ? dim : -dim;
    }
    return total;
}

}  // namespace

int rank_jump(const CubicalDiagram& d, const std::vector<int>& point) {
    std::vector<int> axes(d.n);
    std::iota(axes.begin(), axes.end(), 0);
    (void)d.index_of(point);  // validates the point
    return subcube_jump(d, point, axes);
}

LatticeCheck check_lattice_conditions(const CubicalDiagram& d) {
    // (0) zero on the boundary faces, full space at the terminal corner.
    for (size_t idx = 0; idx < d.num_points(); ++idx) {
        std::vector<int> p = d.point_of(idx);
        bool has_zero_coord = std::find(p.begin(), p.end(), 0) != p.end();
        if (has_zero_coord && !d.values[idx].is_zero())
            return {false, "condition (0): value at " + point_str(p) + " must be the zero subspace"};
    }
    std::vector<int> terminal(d.n, d.deg);
    if (!d.at(terminal).is_full())
        return {false,
                "condition (0): value at terminal corner " + point_str(terminal) + " must be the full space"};

    // (1) monotone along every axis.
    for (size_t idx = 0; idx < d.num_points(); ++idx) {
        std::vector<int> p = d.point_of(idx);
        for (int s = 0; s < d.n; ++s) {
            if (p[s] == 0) continue;
            std::vector<int> q = p;
            --q[s];
            if (!d.values[idx].contains(d.at(q)))
                return {false, "condition (1): value at " + point_str(q) + " is not contained in value at " +
                                   point_str(p)};
        }
    }

    // (2) two-cube exactness: V_{p-e_s} intersect V_{p-e_t} = V_{p-e_s-e_t}.
    for (size_t idx = 0; idx < d.num_points(); ++idx) {
        std::vector<int> p = d.point_of(idx);
        for (int s = 0; s < d.n; ++s) {
            if (p[s] == 0) continue;
            for (int t = s + 1; t < d.n; ++t) {
                if (p[t] == 0) continue;
                std::vector<int> ps = p, pt = p, pst = p;
                --ps[s];
                --pt[t];
                --pst[s];
                --pst[t];
                if (!(subspace_intersect(d.at(ps), d.at(pt)) == d.at(pst)))
                    return {false, "condition (2): faces below " + point_str(p) +
                                       " meet in more than the corner (axes " + std::to_string(s) + "," +
                                       std::to_string(t) + ")"};
            }
        }
    }

    // Higher-cube surrogate: every subcube rank jump is non-negative. The
    // d >= 3 conditions are enforced only through this consequence; the
    // diagnostic marks it as the approximate form.
    std::vector<int> axes;
    for (unsigned mask = 1; mask < (1u << d.n); ++mask) {
        axes.clear();
        for (int i = 0; i < d.n; ++i)
            if (mask & (1u << i)) axes.push_back(i);
        for (size_t idx = 0; idx < d.num_points(); ++idx) {
            std::vector<int> p = d.point_of(idx);
            if (subcube_jump(d, p, axes) < 0)
                return {false, "subcube rank jump (approximate higher-cube condition) negative at " +
                                   point_str(p) + " on " + std::to_string(axes.size()) + " axes"};
        }
    }
    return {};
}

DistinguishedPoints distinguished_points(const CubicalDiagram& d) {
    LatticeCheck chk = check_lattice_conditions(d);
    if (!chk.ok) throw ValidationError("lattice", "lattice conditions fail", chk.diagnostic);
    DistinguishedPoints out;
    for (size_t idx = 0; idx < d.num_points(); ++idx) {
        std::vector<int> p = d.point_of(idx);
        int j = rank_jump(d, p);
        if (j > 0) {
            out.points.emplace_back(p, j);
            out.total += j;
        }
    }
    if (out.total != d.r) throw std::logic_error("rank jumps do not sum to the ambient rank");
    return out;
}

int comparability_components(const std::vector<std::pair<std::vector<int>, int>>& points) {
    int n = static_cast<int>(points.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto comparable = [](const std::vector<int>& a, const std::vector<int>& b) {
        bool le = true, ge = true;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] > b[i]) le = false;
            if (a[i] < b[i]) ge = false;
        }
        return le || ge;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (comparable(points[i].first, points[j].first)) parent[find(i)] = find(j);
    int c = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++c;
    return c;
}

int component_count(const CubicalDiagram& d) {
    DistinguishedPoints pts = distinguished_points(d);
    int c = comparability_components(pts.points);
    if (c < 1 || c > d.r) throw std::logic_error("component count out of range");
    return c;
}

void enumerate_diagrams(const FqField& f, int r, int n, int deg,
                        const std::function<void(const CubicalDiagram&)>& fn) {
    if (r < 1 || n < 1 || deg < 0) throw ValidationError("cubical", "bad enumeration parameters");

    std::vector<Subspace> all;
    for (int d = 0; d <= r; ++d) {
        auto part = enumerate_subspaces(f, r, d);
        all.insert(all.end(), part.begin(), part.end());
    }

    // Free points: every coordinate >= 1, except the (forced) terminal corner.
    size_t npoints = 1;
    for (int i = 0; i < n; ++i) npoints *= static_cast<size_t>(deg) + 1;
    std::vector<size_t> free_points;
    CubicalDiagram proto;
    proto.field = &f;
    proto.r = r;
    proto.n = n;
    proto.deg = deg;
    proto.values.assign(npoints, Subspace::zero(f, r));
    for (size_t idx = 0; idx < npoints; ++idx) {
        std::vector<int> p = proto.point_of(idx);
        bool inner = std::find(p.begin(), p.end(), 0) == p.end();
        bool terminal = std::all_of(p.begin(), p.end(), [&](int x) { return x == deg; });
        if (inner && !terminal) free_points.push_back(idx);
        if (inner && terminal) proto.values[idx] = Subspace::full(f, r);
    }
    if (deg == 0) {
        // Terminal corner is forced to both 0 and F^r; no diagrams for r >= 1.
        return;
    }

    double budget = 1;
    for (size_t i = 0; i < free_points.size(); ++i) {
        budget *= static_cast<double>(all.size());
        if (budget > 1e7)
            throw BudgetError("cubical-budget", "diagram enumeration budget exceeded",
                              std::to_string(all.size()) + "^" + std::to_string(free_points.size()) + " > 1e7");
    }

    // Odometer over assignments with a monotonicity prune against already
    // assigned (lexicographically smaller) neighbours.
    std::vector<size_t> choice(free_points.size(), 0);
    auto rec = [&](auto&& self, size_t fi) -> void {
        if (fi == free_points.size()) {
            if (check_lattice_conditions(proto).ok) fn(proto);
            return;
        }
        size_t idx = free_points[fi];
        std::vector<int> p = proto.point_of(idx);
        for (size_t c = 0; c < all.size(); ++c) {
            proto.values[idx] = all[c];
            // Lower neighbours have smaller mixed-radix index, so they are
            // already assigned (boundary zeros or earlier free points).
            bool fine = true;
            for (int s = 0; s < n && fine; ++s) {
                std::vector<int> q = p;
                --q[s];
                if (!all[c].contains(proto.values[proto.index_of(q)])) fine = false;
            }
            if (fine) self(self, fi + 1);
        }
        proto.values[idx] = Subspace::zero(f, r);
    };
    rec(rec, 0);
}

std::map<int, long long> component_census(const FqField& f, int r, int n, int deg) {
    std::map<int, long long> hist;
    enumerate_diagrams(f, r, n, deg, [&](const CubicalDiagram& d) { ++hist[component_count(d)]; });
    return hist;
}

}  // namespace rankfilt

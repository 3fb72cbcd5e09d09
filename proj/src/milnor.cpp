#include "rankfilt/milnor.hpp"

#include <map>
#include <string>
#include <tuple>

#include "rankfilt/errors.hpp"

namespace rankfilt {

namespace {

void check_budget(const FqField& f, int j) {
    if (j < 0) throw ValidationError("milnor", "degree must be >= 0");
    if (j > 3 || f.q > 9)
        throw BudgetError("milnor-budget", "presentation budget is j <= 3, q <= 9",
                          "requested q=" + std::to_string(f.q) + " j=" + std::to_string(j));
}

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Generators are exponent tuples (a_1..a_j), a_i in 0..m-1, indexed in
// mixed radix with a_1 most significant.
struct TupleIndex {
    int j;
    long long m;
    long long index(const std::vector<int>& t) const {
        long long idx = 0;
        for (int i = 0; i < j; ++i) idx = idx * m + t[i];
        return idx;
    }
};

// Iterate all tuples of length j over 0..m-1.
template <class Fn>
void for_tuples(int j, long long m, Fn fn) {
    std::vector<int> t(j, 0);
    for (;;) {
        fn(t);
        int i = j - 1;
        while (i >= 0 && t[i] == m - 1) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
}

MilnorPresentation base_presentation(const FqField& f, int j) {
    check_budget(f, j);
    MilnorPresentation p;
    p.q = f.q;
    p.j = j;
    long long m = f.q - 1;
    p.num_generators = pow_ll(m, j);
    p.relations = SparseIntMat(static_cast<int>(p.num_generators), 0);
    if (j == 0) return p;

    TupleIndex ti{j, m};
    // Multilinearity: [.. u*u' ..] - [.. u ..] - [.. u' ..] = 0 as exponents
    // a + b mod m, for each slot; plus m * [.. u ..] = 0 via u^m = 1.
    for (int s = 0; s < j; ++s) {
        for_tuples(j - 1, m, [&](const std::vector<int>& rest) {
            std::vector<int> t(j);
            auto fill = [&](int a) {
                int ri = 0;
                for (int i = 0; i < j; ++i) t[i] = i == s ? a : rest[ri++];
                return ti.index(t);
            };
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    int col = p.relations.cols++;
                    long long g_sum = fill(static_cast<int>((a + b) % m));
                    long long g_a = fill(a);
                    long long g_b = fill(b);
                    // coefficients may coincide; accumulate before adding
                    std::map<long long, long long> coeff;
                    coeff[g_sum] += 1;
                    coeff[g_a] -= 1;
                    coeff[g_b] -= 1;
                    for (auto [row, v] : coeff) p.relations.add(static_cast<int>(row), col, v);
                }
                int col = p.relations.cols++;
                p.relations.add(static_cast<int>(fill(a)), col, m);
            }
        });
    }
    return p;
}

// Appends columns that kill every tuple whose adjacent slots (s, s+1) hold
// the exponent pair (a, b) produced by `pairs`.
void add_adjacent_generators(const FqField& f, MilnorPresentation& p,
                             const std::vector<std::pair<int, int>>& pairs) {
    int j = p.j;
    long long m = f.q - 1;
    TupleIndex ti{j, m};
    for (int s = 0; s + 1 < j; ++s) {
        for (auto [a, b] : pairs) {
            for_tuples(j - 2, m, [&](const std::vector<int>& rest) {
                std::vector<int> t(j);
                int ri = 0;
                for (int i = 0; i < j; ++i) {
                    if (i == s)
                        t[i] = a;
                    else if (i == s + 1)
                        t[i] = b;
                    else
                        t[i] = rest[ri++];
                }
                int col = p.relations.cols++;
                p.relations.add(static_cast<int>(ti.index(t)), col, 1);
            });
        }
    }
}

}  // namespace

MilnorPresentation tensor_power_presentation(const FqField& f, int j) { return base_presentation(f, j); }

MilnorPresentation exterior_power_presentation(const FqField& f, int j) {
    MilnorPresentation p = base_presentation(f, j);
    long long m = f.q - 1;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a) pairs.emplace_back(a, a);
    add_adjacent_generators(f, p, pairs);
    return p;
}

MilnorPresentation milnor_presentation(const FqField& f, int j) {
    MilnorPresentation p = base_presentation(f, j);
    // Steinberg pairs (u, 1-u) for units u with u != 1; 1-u is then a unit.
    std::vector<std::pair<int, int>> pairs;
    uint8_t one = 1;
    for (uint8_t u : f.units()) {
        if (u == one) continue;
        uint8_t w = f.sub(one, u);
        pairs.emplace_back(f.dlog(u), f.dlog(w));
    }
    add_adjacent_generators(f, p, pairs);
    return p;
}

AbelianGroup milnor_k(const FqField& f, int j) { return cokernel(milnor_presentation(f, j).relations); }

AbelianGroup exterior_power(const FqField& f, int j) {
    return cokernel(exterior_power_presentation(f, j).relations);
}

}  // namespace rankfilt

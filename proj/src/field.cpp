#include "rankfilt/field.hpp"

#include <map>
#include <mutex>

#include "rankfilt/errors.hpp"

namespace rankfilt {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) > dm) {
        int lead = a.back();
        if (lead != 0) {
            int shift = static_cast<int>(a.size()) - 1 - dm;
            for (int i = 0; i <= dm; ++i) {
                a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p * p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), m, p);
}

int encode(const Poly& a, int p, int k) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return v;
}

Poly decode(int v, int p, int k) {
    Poly a(k, 0);
    for (int i = 0; i < k; ++i) {
        a[i] = v % p;
        v /= p;
    }
    return a;
}

bool poly_is_zero(const Poly& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

// True if the monic polynomial m (degree >= 2) has a monic divisor of degree
// 1..deg(m)-1. Trial division over the (tiny) space of candidate divisors.
bool is_reducible(const Poly& m, int p) {
    int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; d < deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            Poly cand = decode(low, p, d);
            cand.push_back(1);  // monic degree d
            if (poly_is_zero(poly_mod(m, cand, p))) return true;
        }
    }
    return false;
}

// Least monic irreducible of degree k over F_p, in the order given by the
// integer encoding of the non-leading coefficients.
Poly least_irreducible(int p, int k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
        Poly m = decode(low, p, k);
        m.push_back(1);
        if (!is_reducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

FqField::FqField(int p_, int k_) : p(p_), k(k_) {
    long long order = 1;
    for (int i = 0; i < k; ++i) order *= p;
    q = static_cast<int>(order);

    if (k == 1) {
        reduction_poly = {0, 1};
    } else {
        reduction_poly = least_irreducible(p, k);
    }

    add_table_.assign(static_cast<size_t>(q) * q, 0);
    mul_table_.assign(static_cast<size_t>(q) * q, 0);
    neg_table_.assign(q, 0);
    inv_table_.assign(q, 0);  // 0 stays as sentinel 0

    for (int a = 0; a < q; ++a) {
        Poly pa = decode(a, p, k);
        for (int b = 0; b < q; ++b) {
            Poly pb = decode(b, p, k);
            Poly sum(k, 0);
            for (int i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
            add_table_[static_cast<size_t>(a) * q + b] = static_cast<uint8_t>(encode(sum, p, k));
            mul_table_[static_cast<size_t>(a) * q + b] =
                static_cast<uint8_t>(encode(poly_mul_mod(pa, pb, reduction_poly, p), p, k));
        }
        Poly na(k, 0);
        for (int i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
        neg_table_[a] = static_cast<uint8_t>(encode(na, p, k));
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_table_[static_cast<size_t>(a) * q + b] == 1) inv_table_[a] = static_cast<uint8_t>(b);

    // Least unit of full multiplicative order.
    generator_ = 1;
    for (int a = 1; a < q; ++a) {
        int ord = 1;
        uint8_t x = static_cast<uint8_t>(a);
        while (x != 1) {
            x = mul(x, static_cast<uint8_t>(a));
            ++ord;
        }
        if (ord == q - 1) {
            generator_ = static_cast<uint8_t>(a);
            break;
        }
    }
    dlog_table_.assign(q, -1);
    uint8_t x = 1;
    for (int e = 0; e < q - 1; ++e) {
        dlog_table_[x] = e;
        x = mul(x, generator_);
    }
}

uint8_t FqField::inv(uint8_t a) const {
    if (a == 0) throw ValidationError("field", "inverse of zero requested");
    return inv_table_[a];
}

uint8_t FqField::pow(uint8_t a, long long e) const {
    if (a == 0) return e == 0 ? uint8_t{1} : uint8_t{0};
    long long m = e % (q - 1);
    if (m < 0) m += q - 1;
    uint8_t r = 1;
    for (long long i = 0; i < m; ++i) r = mul(r, a);
    return r;
}

std::vector<uint8_t> FqField::units() const {
    std::vector<uint8_t> u;
    u.reserve(q - 1);
    for (int a = 1; a < q; ++a) u.push_back(static_cast<uint8_t>(a));
    return u;
}

int FqField::dlog(uint8_t u) const {
    if (u == 0 || dlog_table_[u] < 0) throw ValidationError("field", "dlog of non-unit");
    return dlog_table_[u];
}

const FqField& FqField::get(int p, int k) {
    if (!is_prime(p)) throw ValidationError("field", "characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw ValidationError("field", "extension degree must be >= 1");
    long long order = 1;
    for (int i = 0; i < k; ++i) {
        order *= p;
        if (order > 16) throw ValidationError("field", "field order exceeds 16");
    }
    static std::mutex registry_mutex;
    static std::map<std::pair<int, int>, const FqField*> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry.find({p, k});
    if (it == registry.end()) it = registry.emplace(std::make_pair(p, k), new FqField(p, k)).first;
    return *it->second;
}

const FqField& FqField::get_order(int q) {
    if (q < 2 || q > 16) throw ValidationError("field", "field order must be in 2..16, got " + std::to_string(q));
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int k = 0;
        long long pw = 1;
        while (pw < q) {
            pw *= p;
            ++k;
        }
        if (pw == q) return get(p, k);
    }
    throw ValidationError("field", std::to_string(q) + " is not a prime power");
}

char FqField::digit(uint8_t a) const {
    return a < 10 ? static_cast<char>('0' + a) : static_cast<char>('a' + (a - 10));
}

uint8_t FqField::parse_digit(char c) const {
    int v;
    if (c >= '0' && c <= '9')
        v = c - '0';
    else if (c >= 'a' && c <= 'f')
        v = 10 + (c - 'a');
    else
        throw ValidationError("parse", std::string("bad field digit '") + c + "'");
    if (v >= q) throw ValidationError("parse", std::string("digit '") + c + "' out of range for field");
    return static_cast<uint8_t>(v);
}

}  // namespace rankfilt

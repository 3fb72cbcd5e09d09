#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankfilt/errors.hpp"
#include "rankfilt/field.hpp"

using namespace rankfilt;

namespace {
const int kSupportedQ[][2] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};

// Independent polynomial-arithmetic oracle: multiply the encoded polynomials
// and reduce mod the recorded polynomial, coefficient-by-coefficient.
uint8_t poly_mul_oracle(const FqField& F, uint8_t a, uint8_t b) {
    int p = F.p, k = F.k;
    std::vector<int> pa(2 * k, 0), pb(k, 0);
    for (int i = 0, v = a; i < k; ++i, v /= p) pa[i] = v % p;
    for (int i = 0, v = b; i < k; ++i, v /= p) pb[i] = v % p;
    std::vector<int> prod(2 * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    for (int d = 2 * k - 2; d >= k; --d) {
        int lead = prod[d];
        if (lead == 0) continue;
        for (int i = 0; i <= k; ++i) {
            int& c = prod[d - k + i];
            c = ((c - lead * F.reduction_poly[i]) % p + p * p) % p;
        }
    }
    int enc = 0;
    for (int i = k - 1; i >= 0; --i) enc = enc * p + prod[i];
    return static_cast<uint8_t>(enc);
}
}  // namespace

TEST_CASE("field axioms hold exhaustively for every supported order") {
    for (auto [p, k] : kSupportedQ) {
        const FqField& F = FqField::get(p, k);
        int q = F.q;
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
        // x^(q-1) = 1 and cyclic unit group via the flagged generator
        for (int a = 1; a < q; ++a) CHECK(F.pow(a, q - 1) == 1);
        std::vector<bool> seen(q, false);
        uint8_t g = F.unit_generator();
        uint8_t x = 1;
        for (int e = 0; e < q - 1; ++e) {
            CHECK(!seen[x]);
            seen[x] = true;
            x = F.mul(x, g);
        }
        for (int a = 1; a < q; ++a) CHECK(seen[a]);
    }
}

TEST_CASE("frobenius is additive") {
    for (auto [p, k] : kSupportedQ) {
        const FqField& F = FqField::get(p, k);
        for (int a = 0; a < F.q; ++a)
            for (int b = 0; b < F.q; ++b)
                CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
    }
}

TEST_CASE("characteristic 2 addition") { CHECK(FqField::get(2, 1).add(1, 1) == 0); }

TEST_CASE("inverse in F_5") { CHECK(FqField::get(5, 1).inv(2) == 3); }

TEST_CASE("F_4 multiplication against the polynomial oracle") {
    const FqField& F = FqField::get(2, 2);
    CHECK(F.reduction_poly == std::vector<int>{1, 1, 1});  // x^2 + x + 1
    CHECK(F.mul(2, 2) == 3);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(F.mul(a, b) == poly_mul_oracle(F, a, b));
}

TEST_CASE("extension fields match the polynomial oracle everywhere") {
    for (auto [p, k] : {std::pair{2, 3}, {3, 2}, {2, 4}}) {
        const FqField& F = FqField::get(p, k);
        for (int a = 0; a < F.q; ++a)
            for (int b = 0; b < F.q; ++b) CHECK(F.mul(a, b) == poly_mul_oracle(F, a, b));
    }
}

TEST_CASE("reduction polynomials are the least irreducibles") {
    CHECK(FqField::get(2, 3).reduction_poly == std::vector<int>{1, 1, 0, 1});     // x^3 + x + 1
    CHECK(FqField::get(3, 2).reduction_poly == std::vector<int>{1, 0, 1});        // x^2 + 1
    CHECK(FqField::get(2, 4).reduction_poly == std::vector<int>{1, 1, 0, 0, 1});  // x^4 + x + 1
}

TEST_CASE("unit generators") {
    // brute-force order check oracle
    auto order = [](const FqField& F, uint8_t a) {
        int ord = 1;
        uint8_t x = a;
        while (x != 1) {
            x = F.mul(x, a);
            ++ord;
        }
        return ord;
    };
    CHECK(FqField::get(2, 1).unit_generator() == 1);
    CHECK(FqField::get(5, 1).unit_generator() == 2);
    CHECK(FqField::get(2, 2).unit_generator() == 2);
    for (auto [p, k] : kSupportedQ) {
        const FqField& F = FqField::get(p, k);
        CHECK(order(F, F.unit_generator()) == F.q - 1);
        // least: nothing smaller generates
        for (int a = 1; a < F.unit_generator(); ++a) CHECK(order(F, static_cast<uint8_t>(a)) < F.q - 1);
        CHECK(static_cast<int>(F.units().size()) == F.q - 1);
    }
}

TEST_CASE("dlog inverts the generator powers") {
    const FqField& F = FqField::get(3, 2);
    uint8_t g = F.unit_generator();
    for (int e = 0; e < F.q - 1; ++e) CHECK(F.dlog(F.pow(g, e)) == e);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(FqField::get(4, 1), ValidationError);   // non-prime p
    CHECK_THROWS_AS(FqField::get(2, 5), ValidationError);   // 32 > 16
    CHECK_THROWS_AS(FqField::get(17, 1), ValidationError);  // order > 16
    CHECK_THROWS_AS(FqField::get(2, 0), ValidationError);
    CHECK_THROWS_AS(FqField::get_order(6), ValidationError);  // not a prime power
    CHECK_THROWS_AS(FqField::get_order(1), ValidationError);
}

TEST_CASE("get_order factors prime powers") {
    CHECK(FqField::get_order(8).p == 2);
    CHECK(FqField::get_order(8).k == 3);
    CHECK(FqField::get_order(9).p == 3);
    CHECK(FqField::get_order(13).k == 1);
    CHECK(FqField::get_order(16).q == 16);
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankfilt {

// Arithmetic tables for F_q, q = p^k <= 16. Elements are encoded as integers
// 0..q-1: for k = 1 the residues mod p, for k > 1 the polynomial
// c_0 + c_1 x + ... + c_{k-1} x^{k-1} over F_p encoded as sum c_i p^i,
// reduced modulo a fixed monic irreducible of degree k.
//
// Instances are immutable after construction and interned, so raw pointers to
// them stay valid for the lifetime of the process and may be shared freely
// across threads.
class FqField {
public:
    int p = 0;  // prime characteristic
    int k = 0;  // extension degree
    int q = 0;  // order p^k

    // Coefficients of the reduction polynomial, constant term first, length
    // k+1 with leading coefficient 1. For k = 1 this is [0, 1] (i.e. x).
    std::vector<int> reduction_poly;

    uint8_t add(uint8_t a, uint8_t b) const { return add_table_[a * q + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_table_[a * q + neg_table_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_table_[a * q + b]; }
    uint8_t neg(uint8_t a) const { return neg_table_[a]; }
    uint8_t inv(uint8_t a) const;  // a != 0
    uint8_t pow(uint8_t a, long long e) const;

    // Nonzero elements in increasing encoding order.
    std::vector<uint8_t> units() const;
    // Least element generating the (cyclic) multiplicative group.
    uint8_t unit_generator() const { return generator_; }
    // dlog(unit_generator()^e) = e, for e in 0..q-2.
    int dlog(uint8_t u) const;

    // Interned accessor; validates p prime, k >= 1, p^k <= 16.
    static const FqField& get(int p, int k);
    // Convenience: factor q = p^k (q a prime power <= 16) and intern.
    static const FqField& get_order(int q);

    char digit(uint8_t a) const;           // '0'..'9','a'..'f'
    uint8_t parse_digit(char c) const;

private:
    FqField(int p, int k);
    std::vector<uint8_t> add_table_, mul_table_, neg_table_, inv_table_;
    std::vector<int> dlog_table_;
    uint8_t generator_ = 0;
};

}  // namespace rankfilt

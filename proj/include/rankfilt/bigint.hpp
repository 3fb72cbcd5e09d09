#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace rankfilt {

using BigInt = boost::multiprecision::cpp_int;

// Finitely generated abelian group in invariant-factor form:
//   Z^rank (+) Z/d_1 (+) ... (+) Z/d_k   with 1 < d_1 | d_2 | ... | d_k.
struct AbelianGroup {
    long long rank = 0;
    std::vector<BigInt> torsion;

    bool operator==(const AbelianGroup&) const = default;
    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool is_finite() const { return rank == 0; }
    std::string to_string() const;
};

// Narrowing that refuses to be silently wrong.
long long to_int64_checked(const BigInt& v);

}  // namespace rankfilt

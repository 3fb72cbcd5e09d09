#include "rankfilt/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace rankfilt {

std::string AbelianGroup::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (rank == 1) s = "Z";
    else if (rank > 1) s = "Z^" + std::to_string(rank);
    for (const BigInt& d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.str();
    }
    return s;
}

long long to_int64_checked(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return v.convert_to<long long>();
}

}  // namespace rankfilt

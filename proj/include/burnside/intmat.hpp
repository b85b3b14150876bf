#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "burnside/errors.hpp"

namespace burnside {

using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Overflow-checked int64 arithmetic. Every data-dependent product or sum in
/// the elimination kernels goes through these so that a silent wrap is
/// impossible; the error is a bug report, not a recoverable condition.
namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in add");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in sub");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in mul");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

} // namespace checked

/// Floor division (quotient rounded toward -infinity); b must be positive.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

/// Nonnegative remainder in [0, b) for b >= 1.
inline Int mod_floor(Int a, Int b) {
    Int r = a % b;
    if (r < 0) r += b;
    return r;
}

inline std::vector<Int> to_std_vector(const IntVector& v) {
    return std::vector<Int>(v.data(), v.data() + v.size());
}

inline IntVector from_std_vector(const std::vector<Int>& v) {
    IntVector out(static_cast<Eigen::Index>(v.size()));
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = v[static_cast<std::size_t>(i)];
    return out;
}

} // namespace burnside

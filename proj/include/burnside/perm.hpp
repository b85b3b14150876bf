#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

/// A permutation of {0,...,d-1}, stored as its image array: images()[i] is
/// where point i goes. Ordering is lexicographic on the image array; the
/// identity is minimal among permutations of the same degree.
class Perm {
public:
    Perm() = default;

    /// Validates that `images` is a bijection on {0,...,d-1}.
    explicit Perm(std::vector<int> images);

    static Perm identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Perm inverse() const;

    /// Function composition: (*this * rhs)(x) == (*this)(rhs(x)).
    Perm operator*(const Perm& rhs) const;

    auto operator<=>(const Perm&) const = default;

    std::string to_string() const; // "[0,2,1]"

private:
    std::vector<int> images_;
};

/// g^-1 * h * g.
Perm conjugate(const Perm& h, const Perm& g);

/// Cycle of length n on points offset..offset+n-1 (degree = total).
Perm make_cycle(int degree, int offset, int length);

} // namespace burnside

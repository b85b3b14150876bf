#include "burnside/perm.hpp"

#include <numeric>

namespace burnside {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int d = degree();
    if (d == 0) throw MalformedInput("permutation image array is empty");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int x : images_) {
        if (x < 0 || x >= d || seen[static_cast<std::size_t>(x)])
            throw MalformedInput("image array is not a bijection on {0,...," +
                                 std::to_string(d - 1) + "}");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    Perm p;
    p.images_ = std::move(im);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[static_cast<std::size_t>((*this)(i))] = i;
    Perm p;
    p.images_ = std::move(im);
    return p;
}

Perm Perm::operator*(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw DimensionMismatch("composing permutations of different degree");
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[static_cast<std::size_t>(i)] = (*this)(rhs(i));
    Perm p;
    p.images_ = std::move(im);
    return p;
}

std::string Perm::to_string() const {
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
        if (i) s += ",";
        s += std::to_string((*this)(i));
    }
    return s + "]";
}

Perm conjugate(const Perm& h, const Perm& g) { return g.inverse() * h * g; }

Perm make_cycle(int degree, int offset, int length) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    for (int i = 0; i < length; ++i)
        im[static_cast<std::size_t>(offset + i)] = offset + (i + 1) % length;
    return Perm(std::move(im));
}

} // namespace burnside

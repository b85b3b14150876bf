#include "burnside/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace burnside {

namespace {

using checked::add;
using checked::mul;
using checked::sub;

void row_axpy(IntMatrix& m, Eigen::Index dst, Eigen::Index src, Int factor) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        m(dst, j) = add(m(dst, j), mul(factor, m(src, j)));
}

void col_axpy(IntMatrix& m, Eigen::Index dst, Eigen::Index src, Int factor) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        m(i, dst) = add(m(i, dst), mul(factor, m(i, src)));
}

bool pivot_is_lone(const IntMatrix& m, Eigen::Index s) {
    for (Eigen::Index i = s + 1; i < m.rows(); ++i)
        if (m(i, s) != 0) return false;
    for (Eigen::Index j = s + 1; j < m.cols(); ++j)
        if (m(s, j) != 0) return false;
    return true;
}

/// Smallest nonzero |entry| in the trailing submatrix; false if all zero.
bool locate_min_pivot(const IntMatrix& m, Eigen::Index s, Eigen::Index& pi, Eigen::Index& pj) {
    bool found = false;
    Int best = 0;
    for (Eigen::Index i = s; i < m.rows(); ++i)
        for (Eigen::Index j = s; j < m.cols(); ++j) {
            const Int a = std::abs(m(i, j));
            if (a != 0 && (!found || a < best)) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    const Eigen::Index nmin = std::min(m.rows(), m.cols());
    SmithResult result;
    result.invariant_factors.assign(static_cast<std::size_t>(nmin), 0);

    for (Eigen::Index s = 0; s < nmin; ++s) {
        Eigen::Index pi = s, pj = s;
        if (!locate_min_pivot(m, s, pi, pj)) break; // trailing block is zero

        while (true) {
            m.row(s).swap(m.row(pi));
            m.col(s).swap(m.col(pj));

            bool reduced_all = true;
            for (Eigen::Index i = s + 1; i < m.rows(); ++i)
                if (m(i, s) != 0) {
                    row_axpy(m, i, s, -(m(i, s) / m(s, s)));
                    if (m(i, s) != 0) reduced_all = false;
                }
            for (Eigen::Index j = s + 1; j < m.cols(); ++j)
                if (m(s, j) != 0) {
                    col_axpy(m, j, s, -(m(s, j) / m(s, s)));
                    if (m(s, j) != 0) reduced_all = false;
                }
            if (reduced_all && pivot_is_lone(m, s)) {
                // The pivot must divide the rest of the trailing block; if
                // not, pull an offending row in and keep reducing.
                Eigen::Index offender = -1;
                for (Eigen::Index i = s + 1; i < m.rows() && offender < 0; ++i)
                    for (Eigen::Index j = s + 1; j < m.cols(); ++j)
                        if (m(i, j) % m(s, s) != 0) {
                            offender = i;
                            break;
                        }
                if (offender < 0) break;
                row_axpy(m, s, offender, 1);
            }
            if (!locate_min_pivot(m, s, pi, pj)) break;
        }
        if (m(s, s) < 0) m.row(s) = -m.row(s);
        result.invariant_factors[static_cast<std::size_t>(s)] = m(s, s);
    }

    for (Int d : result.invariant_factors)
        if (d != 0) ++result.rank;
    return result;
}

std::optional<IntVector> solve_lower_triangular(const IntMatrix& m, const IntVector& v) {
    const Eigen::Index c = m.rows();
    if (m.cols() != c) throw DimensionMismatch("triangular solve needs a square matrix");
    if (v.size() != c) throw DimensionMismatch("vector length does not match matrix size");

    IntVector x = IntVector::Zero(c);
    for (Eigen::Index j = c - 1; j >= 0; --j) {
        if (m(j, j) == 0) throw SingularMatrix("zero diagonal entry in triangular solve");
        Int acc = v(j);
        for (Eigen::Index i = j + 1; i < c; ++i) acc = sub(acc, mul(x(i), m(i, j)));
        if (acc % m(j, j) != 0) return std::nullopt;
        x(j) = acc / m(j, j);
    }
    return x;
}

IntMatrix lower_triangular_basis(const IntMatrix& a) {
    const Eigen::Index c = a.cols();
    IntMatrix work = a;
    std::vector<bool> active(static_cast<std::size_t>(work.rows()), true);
    std::vector<Eigen::Index> pivot_row(static_cast<std::size_t>(c), -1);

    for (Eigen::Index col = c - 1; col >= 0; --col) {
        // Active rows have zeros in every column > col. Run Euclid on the
        // entries of this column until a single nonzero survivor remains.
        while (true) {
            Eigen::Index best = -1;
            int nonzero = 0;
            for (Eigen::Index r = 0; r < work.rows(); ++r) {
                if (!active[static_cast<std::size_t>(r)] || work(r, col) == 0) continue;
                ++nonzero;
                if (best < 0 || std::abs(work(r, col)) < std::abs(work(best, col))) best = r;
            }
            if (nonzero == 0) throw SingularMatrix("rows do not span a full-rank lattice");
            if (nonzero == 1) {
                if (work(best, col) < 0) work.row(best) = -work.row(best);
                active[static_cast<std::size_t>(best)] = false;
                pivot_row[static_cast<std::size_t>(col)] = best;
                break;
            }
            for (Eigen::Index r = 0; r < work.rows(); ++r) {
                if (r == best || !active[static_cast<std::size_t>(r)] || work(r, col) == 0)
                    continue;
                row_axpy(work, r, best, -(work(r, col) / work(best, col)));
            }
        }
        // Normalize this column in the pivots already chosen for later
        // columns: entries below the new pivot land in [0, pivot).
        const Eigen::Index p = pivot_row[static_cast<std::size_t>(col)];
        for (Eigen::Index later = col + 1; later < c; ++later) {
            const Eigen::Index q = pivot_row[static_cast<std::size_t>(later)];
            const Int f = floor_div(work(q, col), work(p, col));
            if (f != 0) row_axpy(work, q, p, -f);
        }
    }

    IntMatrix h(c, c);
    for (Eigen::Index i = 0; i < c; ++i) h.row(i) = work.row(pivot_row[static_cast<std::size_t>(i)]);
    return h;
}

} // namespace burnside

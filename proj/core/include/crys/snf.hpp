#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crys/matrix.hpp"

namespace crys {

/// Euclidean-domain operations used by the normal form algorithms.
/// Specialized for Int (size = |x|) and Poly<Fp> (size = degree + 1).
template <class T>
struct euclid;

template <>
struct euclid<Int> {
    static bool is_zero(const Int& a) { return a == 0; }
    static bool is_unit(const Int& a) { return a == 1 || a == -1; }
    // Strictly positive for nonzero input; used only to pick pivots.
    static Int size(const Int& a) { return abs(a); }
    static std::pair<Int, Int> divmod(const Int& a, const Int& b) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {q, r};
    }
    static bool divides(const Int& d, const Int& a) { return crys::divides(d, a); }
    // Unit u with u*a canonical (nonnegative / monic).
    static Int canonical_unit(const Int& a) { return a < 0 ? Int(-1) : Int(1); }
};

template <>
struct euclid<FpPoly> {
    static bool is_zero(const FpPoly& a) { return a.is_zero(); }
    static bool is_unit(const FpPoly& a) { return a.degree() == 0; }
    static Int size(const FpPoly& a) { return Int(a.degree() + 1); }
    static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
        return poly_divmod(a, b);
    }
    static bool divides(const FpPoly& d, const FpPoly& a) {
        if (d.is_zero()) return a.is_zero();
        return (a % d).is_zero();
    }
    static FpPoly canonical_unit(const FpPoly& a) {
        return FpPoly::constant(field_ops<Fp>::inv(a.leading()));
    }
};

template <class T>
struct SnfResult {
    Matrix<T> u;  // unimodular left transform
    Matrix<T> d;  // diagonal, successive divisibility
    Matrix<T> v;  // unimodular right transform
    std::vector<T> nontrivial_divisors;

    std::size_t rank() const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
            if (!euclid<T>::is_zero(d(i, i))) ++r;
        return r;
    }
};

namespace detail {

// Pivot rule: nonzero entry of minimal Euclidean size, ties broken by
// lowest (row, col). Fixed so that output is deterministic.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const Matrix<T>& m,
                                                              std::size_t k) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_size;
    for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
            if (euclid<T>::is_zero(m(i, j))) continue;
            Int s = euclid<T>::size(m(i, j));
            if (!best || s < best_size) {
                best = {i, j};
                best_size = s;
            }
        }
    return best;
}

template <class T, bool WithU, bool WithV>
void snf_in_place(Matrix<T>& d, Matrix<T>* u, Matrix<T>* v) {
    const std::size_t m = d.rows(), n = d.cols();
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        for (;;) {
            auto piv = find_pivot(d, k);
            if (!piv) return;  // all remaining entries zero
            auto [pi, pj] = *piv;
            if (pi != k) {
                d.swap_rows(k, pi);
                if constexpr (WithU) u->swap_rows(k, pi);
            }
            if (pj != k) {
                d.swap_cols(k, pj);
                if constexpr (WithV) v->swap_cols(k, pj);
            }

            bool clean = true;
            // Reduce column k below the pivot.
            for (std::size_t i = k + 1; i < m; ++i) {
                if (euclid<T>::is_zero(d(i, k))) continue;
                auto [q, r] = euclid<T>::divmod(d(i, k), d(k, k));
                if (!euclid<T>::is_zero(q)) {
                    for (std::size_t c = k; c < n; ++c) d(i, c) -= q * d(k, c);
                    if constexpr (WithU)
                        for (std::size_t c = 0; c < m; ++c) (*u)(i, c) -= q * (*u)(k, c);
                }
                if (!euclid<T>::is_zero(r)) clean = false;
            }
            // Reduce row k right of the pivot.
            for (std::size_t j = k + 1; j < n; ++j) {
                if (euclid<T>::is_zero(d(k, j))) continue;
                auto [q, r] = euclid<T>::divmod(d(k, j), d(k, k));
                if (!euclid<T>::is_zero(q)) {
                    for (std::size_t rr = k; rr < m; ++rr) d(rr, j) -= d(rr, k) * q;
                    if constexpr (WithV)
                        for (std::size_t rr = 0; rr < n; ++rr) (*v)(rr, j) -= (*v)(rr, k) * q;
                }
                if (!euclid<T>::is_zero(r)) clean = false;
            }
            if (!clean) continue;  // smaller remainders exist; re-pick pivot

            bool col_clear = true, row_clear = true;
            for (std::size_t i = k + 1; i < m && col_clear; ++i)
                if (!euclid<T>::is_zero(d(i, k))) col_clear = false;
            for (std::size_t j = k + 1; j < n && row_clear; ++j)
                if (!euclid<T>::is_zero(d(k, j))) row_clear = false;
            if (!col_clear || !row_clear) continue;

            // Pivot must divide the remaining submatrix for the divisor
            // chain to come out right; fold in an offending row if not.
            bool divides_rest = true;
            for (std::size_t i = k + 1; i < m && divides_rest; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!euclid<T>::divides(d(k, k), d(i, j))) {
                        for (std::size_t c = k; c < n; ++c) d(k, c) += d(i, c);
                        if constexpr (WithU)
                            for (std::size_t c = 0; c < m; ++c) (*u)(k, c) += (*u)(i, c);
                        divides_rest = false;
                        break;
                    }
            if (divides_rest) break;
        }

        T unit = euclid<T>::canonical_unit(d(k, k));
        if (!(unit * d(k, k) == d(k, k))) {
            for (std::size_t c = k; c < n; ++c) d(k, c) = unit * d(k, c);
            if constexpr (WithU)
                for (std::size_t c = 0; c < m; ++c) (*u)(k, c) = unit * (*u)(k, c);
        }
    }
}

}  // namespace detail

/// Smith normal form over a Euclidean domain: returns U, D, V with
/// U*A*V = D diagonal and each diagonal entry dividing the next.
template <class T>
SnfResult<T> snf(const Matrix<T>& a, const T& one = T(1)) {
    SnfResult<T> r;
    r.d = a;
    r.u = Matrix<T>::identity(a.rows(), one);
    r.v = Matrix<T>::identity(a.cols(), one);
    detail::snf_in_place<T, true, true>(r.d, &r.u, &r.v);
    for (std::size_t i = 0; i < std::min(r.d.rows(), r.d.cols()); ++i) {
        const T& di = r.d(i, i);
        if (!euclid<T>::is_zero(di) && !euclid<T>::is_unit(di))
            r.nontrivial_divisors.push_back(di);
    }
    return r;
}

/// Saturated basis of the integer kernel lattice {x : A x = 0}; every
/// kernel vector is an integer combination of the returned columns.
inline std::vector<std::vector<Int>> kernel_saturated(const IntMat& a) {
    IntMat d = a;
    IntMat v = IntMat::identity(a.cols());
    detail::snf_in_place<Int, false, true>(d, nullptr, &v);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d(i, i) != 0) ++rank;
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = rank; j < a.cols(); ++j) {
        std::vector<Int> col(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) col[i] = v(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

/// Integer solution of A x = b, if one exists; decided exactly via SNF.
inline std::optional<std::vector<Int>> solve_linear_integer(const IntMat& a,
                                                            const std::vector<Int>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_linear_integer: dimension mismatch");
    SnfResult<Int> s = snf(a);
    std::vector<Int> c = s.u * b;
    std::vector<Int> y(a.cols());
    std::size_t mn = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < mn && s.d(i, i) != 0) {
            if (!divides(s.d(i, i), c[i])) return std::nullopt;
            y[i] = c[i] / s.d(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * y;
}

/// Nontrivial invariant factors of x*E - A over F_p[x]. Two square
/// matrices over F_p are similar iff the lists coincide.
std::vector<FpPoly> poly_invariant_factors(const FpMat& a);

}  // namespace crys

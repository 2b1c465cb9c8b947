#include "crys/ratlinalg.hpp"
#include "crys/snf.hpp"

#include <stdexcept>

namespace crys {

namespace {

// Row echelon form in place; returns pivot columns. Rows are combined
// with exact rational arithmetic.
std::vector<std::size_t> echelonize(RatMat& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && a(pr, col) == 0) ++pr;
        if (pr == a.rows()) continue;
        if (pr != row) a.swap_rows(pr, row);
        Rat inv = Rat(1) / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMat& a) {
    RatMat m = a;
    return echelonize(m).size();
}

std::optional<RatMat> inverse(const RatMat& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: not square");
    std::size_t n = a.rows();
    RatMat aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, RatMat::identity(n, Rat(1)));
    auto pivots = echelonize(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    return aug.block(0, n, n, n);
}

std::optional<std::vector<Rat>> solve_rational(const RatMat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: dimension mismatch");
    RatMat aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
    auto pivots = echelonize(aug);
    // Inconsistent iff a pivot lands in the appended column.
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

std::vector<std::vector<Rat>> kernel_rational(const RatMat& a) {
    RatMat m = a;
    auto pivots = echelonize(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> x(a.cols());
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

Int det(const IntMat& a) {
    if (!a.is_square()) throw std::invalid_argument("det: not square");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMat m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pr = k + 1;
            while (pr < n && m(pr, k) == 0) ++pr;
            if (pr == n) return 0;
            m.swap_rows(k, pr);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = num / prev;  // exact by Bareiss
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<FpPoly> poly_invariant_factors(const FpMat& a) {
    if (!a.is_square()) throw std::invalid_argument("poly_invariant_factors: not square");
    std::uint64_t p = 0;
    for (const auto& e : a.entries())
        if (e.p) {
            p = e.p;
            break;
        }
    if (p == 0) throw std::invalid_argument("poly_invariant_factors: no modulus context");
    std::size_t n = a.rows();
    FpPolyMat xe_minus_a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Fp> c{-Fp(a(i, j).v, p)};
            if (i == j) c.push_back(Fp(1, p));
            xe_minus_a(i, j) = FpPoly(std::move(c));
        }
    auto s = snf(xe_minus_a, FpPoly::constant(Fp(1, p)));
    return s.nontrivial_divisors;
}

}  // namespace crys

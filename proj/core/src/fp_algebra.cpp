#include "crys/fp_algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "crys/poly_factor.hpp"

namespace crys {

FpAlgebra::FpAlgebra(std::uint64_t p, std::vector<std::vector<FpVec>> table, FpVec identity)
    : p_(p), dim_(table.size()), table_(std::move(table)), identity_(std::move(identity)) {
    if (identity_.size() != dim_)
        throw std::invalid_argument("FpAlgebra: identity coordinate mismatch");
    for (const auto& row : table_) {
        if (row.size() != dim_) throw std::invalid_argument("FpAlgebra: ragged table");
        for (const auto& v : row)
            if (v.size() != dim_) throw std::invalid_argument("FpAlgebra: ragged table");
    }
    // identity must act as identity on the basis
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!equal(mul(identity_, basis_vector(i)), basis_vector(i)) ||
            !equal(mul(basis_vector(i), identity_), basis_vector(i)))
            throw std::invalid_argument("FpAlgebra: identity fails to act as identity");
    }
}

FpVec FpAlgebra::basis_vector(std::size_t i) const {
    FpVec v = zero();
    v[i] = Fp(1, p_);
    return v;
}

FpVec FpAlgebra::mul(const FpVec& x, const FpVec& y) const {
    FpVec r = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Fp c = x[i] * y[j];
            const FpVec& t = table_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!t[k].is_zero()) r[k] += c * t[k];
        }
    }
    return r;
}

FpVec FpAlgebra::add(const FpVec& x, const FpVec& y) const {
    FpVec r = x;
    for (std::size_t k = 0; k < dim_; ++k) r[k] += y[k];
    return r;
}

FpVec FpAlgebra::scale(const Fp& c, const FpVec& x) const {
    FpVec r = x;
    for (auto& e : r) e *= c;
    return r;
}

FpVec FpAlgebra::power(const FpVec& x, Int e) const {
    FpVec r = identity_, base = x;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

bool FpAlgebra::is_zero(const FpVec& x) const {
    for (const auto& e : x)
        if (!e.is_zero()) return false;
    return true;
}

bool FpAlgebra::equal(const FpVec& x, const FpVec& y) const {
    for (std::size_t i = 0; i < dim_; ++i)
        if (!(x[i] == y[i])) return false;
    return true;
}

bool FpAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (!equal(table_[i][j], table_[j][i])) return false;
    return true;
}

FpMat FpAlgebra::left_regular(const FpVec& x) const {
    FpMat m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        // column j = x * b_j
        FpVec col = zero();
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            const FpVec& t = table_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!t[k].is_zero()) col[k] += x[i] * t[k];
        }
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
}

FpPoly FpAlgebra::min_poly(const FpVec& x) const {
    // Krylov span of 1, x, x^2, ... until dependence.
    FpSubspace span(p_, dim_);
    std::vector<FpVec> powers;
    FpVec cur = identity_;
    for (;;) {
        if (!span.grow(cur)) break;
        powers.push_back(cur);
        cur = mul(cur, x);
    }
    // cur = x^k depends on lower powers: solve for coefficients
    std::size_t k = powers.size();
    FpMat sys(dim_, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim_; ++i) sys(i, j) = powers[j][i];
    // solve sys * c = cur by row reduction
    FpMat aug(dim_, k + 1);
    aug.set_block(0, 0, sys);
    for (std::size_t i = 0; i < dim_; ++i) aug(i, k) = cur[i];
    // gaussian elimination
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(k, SIZE_MAX);
    for (std::size_t col = 0; col < k && row < dim_; ++col) {
        std::size_t pr = row;
        while (pr < dim_ && aug(pr, col).is_zero()) ++pr;
        if (pr == dim_) continue;
        aug.swap_rows(pr, row);
        Fp inv = aug(row, col).inv();
        for (std::size_t j = col; j <= k; ++j) aug(row, j) *= inv;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            Fp f = aug(i, col);
            for (std::size_t j = col; j <= k; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<Fp> coeffs(k + 1, Fp(0, p_));
    for (std::size_t col = 0; col < k; ++col)
        if (pivot_of_col[col] != SIZE_MAX) coeffs[col] = aug(pivot_of_col[col], k);
    // x^k - sum c_j x^j = 0
    FpPoly m(std::vector<Fp>(coeffs.begin(), coeffs.end()));
    FpPoly xk = FpPoly::monomial(Fp(1, p_), k);
    return (xk - m).monic();
}

FpSubspace::FpSubspace(std::uint64_t p, std::size_t ambient) : p_(p), ambient_(ambient) {}

FpSubspace FpSubspace::span(std::uint64_t p, std::size_t ambient,
                            const std::vector<FpVec>& vectors) {
    FpSubspace s(p, ambient);
    for (const auto& v : vectors) s.grow(v);
    return s;
}

bool FpSubspace::contains(const FpVec& v) const {
    FpVec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (r[pivots_[k]].is_zero()) continue;
        Fp f = r[pivots_[k]];
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * rows_[k][j];
    }
    for (const auto& e : r)
        if (!e.is_zero()) return false;
    return true;
}

std::optional<FpVec> FpSubspace::coordinates(const FpVec& v) const {
    FpVec r = v;
    FpVec coords(rows_.size(), Fp(0, p_));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (r[pivots_[k]].is_zero()) continue;
        Fp f = r[pivots_[k]];
        coords[k] = f;
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * rows_[k][j];
    }
    for (const auto& e : r)
        if (!e.is_zero()) return std::nullopt;
    return coords;
}

bool FpSubspace::grow(FpVec v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v[pivots_[k]].is_zero()) continue;
        Fp f = v[pivots_[k]];
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[k][j];
    }
    std::size_t piv = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv == ambient_) return false;
    Fp inv = v[piv].inv();
    for (auto& e : v) e *= inv;
    // back-substitute into existing rows to keep reduced form
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k][piv].is_zero()) continue;
        Fp f = rows_[k][piv];
        for (std::size_t j = 0; j < ambient_; ++j) rows_[k][j] -= f * v[j];
    }
    // insert keeping pivot order
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

FpPoly char_poly(const FpMat& m_in) {
    if (!m_in.is_square()) throw std::invalid_argument("char_poly: not square");
    std::size_t n = m_in.rows();
    std::uint64_t p = 0;
    for (const auto& e : m_in.entries())
        if (e.p) {
            p = e.p;
            break;
        }
    if (p == 0) throw std::invalid_argument("char_poly: no modulus context");
    // Hessenberg reduction, then the standard recurrence.
    FpMat m = m_in;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k - 1).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != k) {
            m.swap_rows(piv, k);
            m.swap_cols(piv, k);
        }
        Fp inv = m(k, k - 1).inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k - 1).is_zero()) continue;
            Fp f = m(i, k - 1) * inv;
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
            for (std::size_t j = 0; j < n; ++j) m(j, k) += f * m(j, i);
        }
    }
    // p_0 = 1; p_k(x) built over trailing principal minors
    std::vector<FpPoly> polys(n + 1);
    polys[0] = FpPoly::constant(Fp(1, p));
    FpPoly x = FpPoly::monomial(Fp(1, p), 1);
    for (std::size_t k = 1; k <= n; ++k) {
        FpPoly term = (x - FpPoly::constant(m(k - 1, k - 1))) * polys[k - 1];
        Fp prod(1, p);
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod *= m(i, i - 1);
            FpPoly sub = FpPoly::constant(prod * m(i - 1, k - 1)) * polys[i - 1];
            term = term - sub;
        }
        polys[k] = term;
    }
    return polys[n];
}

std::vector<FpVec> fp_kernel(const FpMat& m_in) {
    std::uint64_t p = 0;
    for (const auto& e : m_in.entries())
        if (e.p) {
            p = e.p;
            break;
        }
    if (p == 0) throw std::invalid_argument("fp_kernel: no modulus context");
    FpMat m = m_in;
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && m(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        m.swap_rows(pr, row);
        Fp inv = m(row, col).inv();
        for (std::size_t j = col; j < cols; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Fp f = m(i, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        FpVec v(cols, Fp(0, p));
        v[free] = Fp(1, p);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Coefficient of lambda^(deg - k) in the characteristic polynomial.
Fp char_coeff(const FpPoly& cp, std::size_t deg, std::size_t k, std::uint64_t p) {
    if (k > deg) return Fp(0, p);
    return cp.coeff(deg - k);
}

}  // namespace

FpSubspace radical(const FpAlgebra& a) {
    std::uint64_t p = a.p();
    std::size_t r = a.dim();

    // current chain member, as a plain basis list
    std::vector<FpVec> basis;
    for (std::size_t i = 0; i < r; ++i) basis.push_back(a.basis_vector(i));

    unsigned stages = 0;
    {
        std::size_t pk = 1;
        while (pk < r) {
            pk *= p;
            ++stages;
        }
    }

    for (unsigned stage = 0; stage <= stages && !basis.empty(); ++stage) {
        std::size_t t = basis.size();
        std::size_t pk = 1;
        for (unsigned i = 0; i < stage; ++i) pk *= p;

        // chi on the current basis; products evaluated through the reduced
        // span so the gram assembly is O(t^2 r)
        std::vector<FpMat> left(t);
        for (std::size_t u = 0; u < t; ++u) left[u] = a.left_regular(basis[u]);
        FpSubspace span = FpSubspace::span(p, r, basis);
        // chi values on the reduced rows of the span
        std::vector<Fp> chi_reduced(span.dim(), Fp(0, p));
        for (std::size_t k = 0; k < span.dim(); ++k) {
            FpPoly cp = char_poly(a.left_regular(span.basis()[k]));
            chi_reduced[k] = char_coeff(cp, r, pk, p);
        }

        FpMat gram(t, t);
        bool ok = true;
        for (std::size_t u = 0; u < t && ok; ++u) {
            for (std::size_t v = 0; v < t; ++v) {
                FpVec prod(r, Fp(0, p));
                const FpMat& lu = left[u];
                for (std::size_t i = 0; i < r; ++i) {
                    Fp acc(0, p);
                    for (std::size_t j = 0; j < r; ++j) {
                        const Fp& lij = lu(i, j);
                        const Fp& bj = basis[v][j];
                        if (!lij.is_zero() && !bj.is_zero()) acc += lij * bj;
                    }
                    prod[i] = acc;
                }
                auto coords = span.coordinates(prod);
                if (!coords) {
                    ok = false;  // product escaped the subspace
                    break;
                }
                Fp val(0, p);
                for (std::size_t k = 0; k < coords->size(); ++k)
                    if (!(*coords)[k].is_zero()) val += (*coords)[k] * chi_reduced[k];
                gram(u, v) = val;
            }
        }
        if (!ok)
            throw std::logic_error("radical: chain member not multiplicatively closed");

        // next member: x = sum y_u s_u with sum_u y_u gram(u, v) = 0 for all v
        auto ker = fp_kernel(gram.transpose());
        std::vector<FpVec> next;
        for (const auto& y : ker) {
            FpVec x(r, Fp(0, p));
            for (std::size_t u = 0; u < t; ++u)
                if (!y[u].is_zero())
                    for (std::size_t j = 0; j < r; ++j) x[j] += y[u] * basis[u][j];
            next.push_back(std::move(x));
        }
        basis = std::move(next);
    }

    FpSubspace result = FpSubspace::span(p, r, basis);

    // Certification: the computed space must be a two-sided ideal and
    // nilpotent; together with J being contained in every chain member by
    // construction (radical products are nilpotent, so every
    // characteristic coefficient vanishes on them), this pins the result
    // to exactly the radical.
    for (const auto& n : result.basis()) {
        for (std::size_t i = 0; i < r; ++i) {
            if (!result.contains(a.mul(a.basis_vector(i), n)) ||
                !result.contains(a.mul(n, a.basis_vector(i))))
                throw std::logic_error("radical: candidate is not an ideal");
        }
    }
    // N nilpotent: the power chain N, N^2, ... must strictly decrease to 0.
    std::vector<FpVec> power = result.basis();
    std::size_t prev_dim = result.dim();
    while (prev_dim > 0) {
        std::vector<FpVec> next_products;
        for (const auto& x : power)
            for (const auto& n : result.basis()) next_products.push_back(a.mul(x, n));
        FpSubspace sp = FpSubspace::span(p, r, next_products);
        if (sp.dim() >= prev_dim)
            throw std::logic_error("radical: candidate is not nilpotent");
        power = sp.basis();
        prev_dim = sp.dim();
    }
    return result;
}

namespace {

struct Quotient {
    FpAlgebra algebra;
    // complement basis vectors in the parent algebra (coset representatives)
    std::vector<FpVec> reps;
};

// Builds A / N for a verified ideal N: complement representatives are the
// standard basis vectors missing from N's pivot set.
Quotient make_quotient(const FpAlgebra& a, const FpSubspace& n) {
    std::uint64_t p = a.p();
    std::size_t r = a.dim();
    std::vector<bool> pivot_used(r, false);
    {
        // recompute pivots of the ideal's reduced basis
        for (const auto& row : n.basis()) {
            for (std::size_t j = 0; j < r; ++j)
                if (!row[j].is_zero()) {
                    pivot_used[j] = true;
                    break;
                }
        }
    }
    std::vector<std::size_t> comp_cols;
    for (std::size_t j = 0; j < r; ++j)
        if (!pivot_used[j]) comp_cols.push_back(j);
    std::size_t q = comp_cols.size();

    // joint space: rows of N + complement unit vectors form a basis of A
    // reduction of x mod N expressed in the complement coordinates:
    FpSubspace nspan = n;
    auto reduce_mod_n = [&](FpVec x) -> FpVec {
        // subtract ideal rows to clear their pivots
        for (const auto& row : nspan.basis()) {
            std::size_t piv = 0;
            while (piv < r && row[piv].is_zero()) ++piv;
            if (piv == r) continue;
            Fp f = x[piv];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < r; ++j) x[j] -= f * row[j];
        }
        return x;
    };

    std::vector<FpVec> reps;
    for (std::size_t k = 0; k < q; ++k) {
        FpVec v(r, Fp(0, p));
        v[comp_cols[k]] = Fp(1, p);
        reps.push_back(v);
    }

    auto coords_in_comp = [&](const FpVec& reduced) -> FpVec {
        FpVec c(q, Fp(0, p));
        for (std::size_t k = 0; k < q; ++k) c[k] = reduced[comp_cols[k]];
        return c;
    };

    std::vector<std::vector<FpVec>> table(q, std::vector<FpVec>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            table[i][j] = coords_in_comp(reduce_mod_n(a.mul(reps[i], reps[j])));
    FpVec id = coords_in_comp(reduce_mod_n(a.identity()));

    return Quotient{FpAlgebra(p, std::move(table), std::move(id)), std::move(reps)};
}

// Frobenius x -> x^p as a linear map (valid on commutative algebras).
FpMat frobenius_matrix(const FpAlgebra& a) {
    std::size_t r = a.dim();
    FpMat m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        FpVec col = a.power(a.basis_vector(j), Int(static_cast<unsigned long>(a.p())));
        for (std::size_t i = 0; i < r; ++i) m(i, j) = col[i];
    }
    return m;
}

// For commutative b: splits a non-scalar Frobenius-fixed element into a
// nontrivial idempotent via its (distinct linear) minimal polynomial.
FpVec idempotent_from_fixed(const FpAlgebra& b, const FpVec& f) {
    std::uint64_t p = b.p();
    FpPoly mp = b.min_poly(f);
    // min poly divides x^p - x: distinct linear factors; collect roots
    std::vector<Fp> roots;
    for (std::uint64_t c = 0; c < p; ++c)
        if (mp.eval(Fp(c, p)).is_zero()) roots.push_back(Fp(c, p));
    if (roots.size() < 2)
        throw std::logic_error("idempotent_from_fixed: fixed element is scalar-like");
    // Lagrange projector onto the first root's component
    Fp c0 = roots[0];
    FpVec e = b.identity();
    for (std::size_t i = 1; i < roots.size(); ++i) {
        // e *= (f - c_i) / (c_0 - c_i)
        FpVec shifted = f;
        for (std::size_t k = 0; k < b.dim(); ++k)
            shifted[k] -= roots[i] * b.identity()[k];
        Fp denom = (c0 - roots[i]).inv();
        shifted = b.scale(denom, shifted);
        e = b.mul(e, shifted);
    }
    return e;
}

}  // namespace

std::optional<FpVec> exhaustive_idempotent_search(const FpAlgebra& a, Int cap) {
    Int total = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        total *= Int(static_cast<unsigned long>(a.p()));
        if (total > cap) throw std::invalid_argument("exhaustive search beyond cap");
    }
    FpVec coeffs(a.dim(), Fp(0, a.p()));
    for (;;) {
        // advance odometer
        std::size_t i = 0;
        while (i < a.dim()) {
            coeffs[i].v = (coeffs[i].v + 1) % a.p();
            if (coeffs[i].v != 0) break;
            ++i;
        }
        if (i == a.dim()) break;
        if (a.is_zero(coeffs)) continue;
        if (a.equal(coeffs, a.identity())) continue;
        if (a.equal(a.mul(coeffs, coeffs), coeffs)) return coeffs;
    }
    return std::nullopt;
}

LocalityResult is_local(const FpAlgebra& a) {
    LocalityResult res;
    std::uint64_t p = a.p();

    FpSubspace rad = radical(a);
    FpSubspace cur_rad = rad;

    for (unsigned round = 0;; ++round) {
        if (round > a.dim())
            throw std::logic_error("is_local: radical folding failed to stabilize");
        Quotient q = make_quotient(a, cur_rad);
        const FpAlgebra& b = q.algebra;
        res.radical_dim = static_cast<unsigned>(cur_rad.dim());
        res.residue_dim = static_cast<unsigned>(b.dim());
        res.residue_commutative = b.is_commutative();

        if (res.residue_commutative) {
            // exact nilradical of the quotient; nonzero means the chain
            // under-computed, so fold it in and restart
            std::size_t m = 0;
            Int pe = 1;
            while (pe < Int(static_cast<unsigned long>(b.dim()))) {
                pe *= Int(static_cast<unsigned long>(p));
                ++m;
            }
            if (m == 0) m = 1;
            // matrix of x -> x^(p^m)
            FpMat psi(b.dim(), b.dim());
            for (std::size_t j = 0; j < b.dim(); ++j) {
                FpVec col = b.basis_vector(j);
                for (std::size_t t = 0; t < m; ++t)
                    col = b.power(col, Int(static_cast<unsigned long>(p)));
                for (std::size_t i = 0; i < b.dim(); ++i) psi(i, j) = col[i];
            }
            auto nil = fp_kernel(psi);
            if (!nil.empty()) {
                for (const auto& y : nil) {
                    // lift y back to the parent and grow the ideal
                    FpVec lifted(a.dim(), Fp(0, p));
                    for (std::size_t k = 0; k < b.dim(); ++k)
                        if (!y[k].is_zero())
                            for (std::size_t j = 0; j < a.dim(); ++j)
                                lifted[j] += y[k] * q.reps[k][j];
                    cur_rad.grow(lifted);
                }
                continue;
            }

            FpMat frob = frobenius_matrix(b);
            FpMat frob_minus_id = frob;
            for (std::size_t i = 0; i < b.dim(); ++i)
                frob_minus_id(i, i) -= Fp(1, p);
            auto fixed = fp_kernel(frob_minus_id);
            if (fixed.size() == 1) {
                res.local = true;
                res.notes.push_back("semisimple quotient is a field of degree " +
                                    std::to_string(b.dim()));
                return res;
            }
            // pick a fixed element independent of 1 and split it
            FpSubspace one_span = FpSubspace::span(p, b.dim(), {b.identity()});
            FpVec chosen;
            for (const auto& f : fixed)
                if (!one_span.contains(f)) {
                    chosen = f;
                    break;
                }
            if (chosen.empty())
                throw std::logic_error("is_local: fixed space exceeds 1 but no independent element");
            FpVec e_b = idempotent_from_fixed(b, chosen);
            // lift along the nilpotent ideal by p-th powering
            FpVec e(a.dim(), Fp(0, p));
            for (std::size_t k = 0; k < b.dim(); ++k)
                if (!e_b[k].is_zero())
                    for (std::size_t j = 0; j < a.dim(); ++j) e[j] += e_b[k] * q.reps[k][j];
            for (std::size_t t = 0; t <= a.dim(); ++t) {
                if (a.equal(a.mul(e, e), e)) break;
                e = a.power(e, Int(static_cast<unsigned long>(p)));
            }
            if (!a.equal(a.mul(e, e), e) || a.is_zero(e) || a.equal(e, a.identity()))
                throw std::logic_error("is_local: idempotent lift failed");
            res.local = false;
            res.idempotent = e;
            res.notes.push_back("nontrivial idempotent found in the semisimple quotient");
            return res;
        }

        // Noncommutative quotient: re-run the radical; a nonzero result
        // means under-computation, fold and retry.
        FpSubspace rad_b = radical(b);
        if (rad_b.dim() > 0) {
            for (const auto& y : rad_b.basis()) {
                FpVec lifted(a.dim(), Fp(0, p));
                for (std::size_t k = 0; k < b.dim(); ++k)
                    if (!y[k].is_zero())
                        for (std::size_t j = 0; j < a.dim(); ++j)
                            lifted[j] += y[k] * q.reps[k][j];
                cur_rad.grow(lifted);
            }
            continue;
        }

        // Semisimple noncommutative: never a division ring over a finite
        // field, so not local; hunt for an explicit idempotent.
        res.local = false;
        res.notes.push_back("semisimple quotient is noncommutative");

        auto try_split = [&](const FpVec& x) -> std::optional<FpVec> {
            FpPoly mp = b.min_poly(x);
            auto factors = factor_poly(mp);
            if (factors.size() < 2) return std::nullopt;
            // coprime split f = g^e * rest
            FpPoly g = factors[0].factor;
            for (unsigned k = 1; k < factors[0].multiplicity; ++k) g = g * factors[0].factor;
            FpPoly rest = mp / g;
            auto [gg, s, tt] = ext_gcd(g, rest);
            (void)tt;
            if (gg.degree() != 0) return std::nullopt;
            // e = (s*g)(x) is idempotent in F_p[x]
            FpPoly e_poly = (s * g) % mp;
            FpVec e = b.zero();
            FpVec xp = b.identity();
            for (std::size_t k = 0; k <= static_cast<std::size_t>(e_poly.degree()); ++k) {
                if (!e_poly.coeff(k).is_zero())
                    e = b.add(e, b.scale(e_poly.coeff(k), xp));
                xp = b.mul(xp, x);
            }
            if (b.is_zero(e) || b.equal(e, b.identity())) return std::nullopt;
            if (!b.equal(b.mul(e, e), e)) return std::nullopt;
            return e;
        };

        std::optional<FpVec> found;
        for (std::size_t i = 0; i < b.dim() && !found; ++i) found = try_split(b.basis_vector(i));
        if (!found) {
            std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
            for (int tries = 0; tries < 4096 && !found; ++tries) {
                FpVec x(b.dim(), Fp(0, p));
                for (auto& c : x) c = Fp(rng() % p, p);
                found = try_split(x);
            }
        }
        if (!found)
            throw std::logic_error("is_local: noncommutative semisimple quotient, no splitter found");

        FpVec e(a.dim(), Fp(0, p));
        for (std::size_t k = 0; k < b.dim(); ++k)
            if (!(*found)[k].is_zero())
                for (std::size_t j = 0; j < a.dim(); ++j) e[j] += (*found)[k] * q.reps[k][j];
        for (std::size_t t = 0; t <= a.dim(); ++t) {
            if (a.equal(a.mul(e, e), e)) break;
            e = a.power(e, Int(static_cast<unsigned long>(p)));
        }
        if (!a.equal(a.mul(e, e), e) || a.is_zero(e) || a.equal(e, a.identity()))
            throw std::logic_error("is_local: idempotent lift failed");
        res.idempotent = e;
        return res;
    }
}

}  // namespace crys

// Exact integer matrices, Hermite/Smith normal forms and integer lattices.
//
// Everything downstream (ranks, kernels, lattice memberships, torsion tests)
// reduces to the routines in this file.  All arithmetic is over GMP integers;
// no floating point is used anywhere in the library.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qsc {

using Int = mpz_class;
using Rat = mpq_class;

class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMat: entry count does not match shape");
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMat from_rows(std::size_t cols, const std::vector<std::vector<Int>>& rows) {
        IntMat m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("IntMat::from_rows: ragged input");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const {
        return std::vector<Int>(a_.begin() + static_cast<long>(i * cols_),
                                a_.begin() + static_cast<long>((i + 1) * cols_));
    }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMat: shape mismatch in product");
        IntMat p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += x * o.at(k, j);
            }
        return p;
    }

    IntMat operator+(const IntMat& o) const {
        require_same_shape(o);
        IntMat s(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
        return s;
    }

    IntMat operator-(const IntMat& o) const {
        require_same_shape(o);
        IntMat s(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
        return s;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("IntMat::apply: size mismatch");
        std::vector<Int> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool operator<(const IntMat& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            int c = cmp(a_[i], o.a_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
    }
    // row_i -= q * row_j
    void submul_row(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
    }
    // col_i -= q * col_j
    void submul_col(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
    }
    void add_row(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) += at(j, c);
    }
    // simultaneously: row_i <- a*row_i + b*row_j, row_j <- c*row_i + d*row_j
    void combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b,
                      const Int& c, const Int& d) {
        for (std::size_t k = 0; k < cols_; ++k) {
            Int x = at(i, k), y = at(j, k);
            at(i, k) = a * x + b * y;
            at(j, k) = c * x + d * y;
        }
    }
    void combine_cols(std::size_t i, std::size_t j, const Int& a, const Int& b,
                      const Int& c, const Int& d) {
        for (std::size_t k = 0; k < rows_; ++k) {
            Int x = at(k, i), y = at(k, j);
            at(k, i) = a * x + b * y;
            at(k, j) = c * x + d * y;
        }
    }

    void truncate_rows(std::size_t nrows) {
        rows_ = nrows;
        a_.resize(rows_ * cols_);
    }

private:
    void require_same_shape(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMat: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

namespace detail {

inline void xgcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0) throw std::logic_error("exact_div: inexact division");
    return a / b;
}

}  // namespace detail

// Row-style Hermite normal form: row echelon with positive pivots, entries
// above a pivot reduced into [0, pivot), zero rows dropped.  Canonical per
// lattice, so lattice equality is comparison of these forms.
inline IntMat hermite_form(IntMat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            // plain elimination when the pivot divides; xgcd combine otherwise
            if (m.at(i, c) % m.at(r, c) == 0) {
                m.submul_row(i, r, m.at(i, c) / m.at(r, c));
                continue;
            }
            Int g, u, v;
            detail::xgcd(m.at(r, c), m.at(i, c), g, u, v);
            Int s = detail::exact_div(m.at(i, c), g), t = detail::exact_div(m.at(r, c), g);
            m.combine_rows(r, i, u, v, -s, t);
        }
        if (m.at(r, c) < 0) m.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) m.submul_row(i, r, detail::fdiv(m.at(i, c), m.at(r, c)));
        ++r;
    }
    m.truncate_rows(r);
    return m;
}

inline std::size_t matrix_rank(const IntMat& m) { return hermite_form(m).rows(); }

struct SmithResult {
    std::vector<Int> diag;  // nonnegative, d1 | d2 | ... (zeros trail)
    IntMat left;            // unimodular, left * m * right is diagonal
    IntMat right;
};

inline SmithResult smith_normal_form(IntMat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat left = IntMat::identity(rows);
    IntMat right = IntMat::identity(cols);

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest-magnitude nonzero pivot keeps intermediate entries tame
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& x = m.at(i, j);
                if (x == 0) continue;
                if (pi == rows || mpz_cmpabs(x.get_mpz_t(), m.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;
        m.swap_rows(t, pi);
        left.swap_rows(t, pi);
        m.swap_cols(t, pj);
        right.swap_cols(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                if (m.at(i, t) % m.at(t, t) == 0) {
                    // plain elimination leaves row t untouched
                    Int q = m.at(i, t) / m.at(t, t);
                    m.submul_row(i, t, q);
                    left.submul_row(i, t, q);
                    continue;
                }
                Int g, u, v;
                detail::xgcd(m.at(t, t), m.at(i, t), g, u, v);
                Int s = detail::exact_div(m.at(i, t), g), q = detail::exact_div(m.at(t, t), g);
                m.combine_rows(t, i, u, v, -s, q);
                left.combine_rows(t, i, u, v, -s, q);
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                if (m.at(t, j) % m.at(t, t) == 0) {
                    Int q = m.at(t, j) / m.at(t, t);
                    m.submul_col(j, t, q);
                    right.submul_col(j, t, q);
                    continue;
                }
                // a genuine gcd step: the pivot strictly shrinks, so the
                // clear/recheck loop terminates
                Int g, u, v;
                detail::xgcd(m.at(t, t), m.at(t, j), g, u, v);
                Int s = detail::exact_div(m.at(t, j), g), q = detail::exact_div(m.at(t, t), g);
                m.combine_cols(t, j, u, v, -s, q);
                right.combine_cols(t, j, u, v, -s, q);
                dirty = true;  // column ops can re-dirty column t
            }
            if (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (m.at(i, t) != 0) { dirty = true; break; }
                if (dirty) continue;
            }
            // pivot must divide the remaining block
            for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                for (std::size_t j = t + 1; j < cols && !dirty; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        m.add_row(t, i);
                        left.add_row(t, i);
                        dirty = true;
                    }
        }
        if (m.at(t, t) < 0) {
            m.negate_row(t);
            left.negate_row(t);
        }
        ++t;
    }

    SmithResult res;
    res.diag.resize(std::min(rows, cols));
    for (std::size_t i = 0; i < res.diag.size(); ++i) res.diag[i] = m.at(i, i);
    res.left = std::move(left);
    res.right = std::move(right);
    return res;
}

// Bareiss fraction-free determinant.
inline Int determinant(IntMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = detail::exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// A sublattice of Z^n, kept in canonical Hermite form.
class IntLattice {
public:
    IntLattice() = default;
    IntLattice(std::size_t ambient, const IntMat& generators)
        : ambient_(ambient), basis_(hermite_form(generators)) {
        if (generators.cols() != ambient && generators.rows() != 0)
            throw std::invalid_argument("IntLattice: generator width != ambient rank");
        if (generators.rows() == 0) basis_ = IntMat(0, ambient);
    }

    static IntLattice zero(std::size_t ambient) { return IntLattice(ambient, IntMat(0, ambient)); }
    static IntLattice full(std::size_t ambient) {
        return IntLattice(ambient, IntMat::identity(ambient));
    }

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMat& basis() const { return basis_; }

    bool operator==(const IntLattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const IntLattice& o) const { return !(*this == o); }

    // coefficients of v in the Hermite basis, if v lies in the lattice
    std::optional<std::vector<Int>> coords_of(std::vector<Int> v) const {
        if (v.size() != ambient_) throw std::invalid_argument("IntLattice: vector size mismatch");
        std::vector<Int> coeff(basis_.rows());
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = 0;
            while (p < ambient_ && basis_.at(i, p) == 0) ++p;
            if (p == ambient_) return std::nullopt;  // not reachable for canonical basis
            Int q = v[p] / basis_.at(i, p);
            if (q * basis_.at(i, p) != v[p]) return std::nullopt;
            coeff[i] = q;
            for (std::size_t c = p; c < ambient_; ++c) v[c] -= q * basis_.at(i, c);
        }
        for (const Int& x : v)
            if (x != 0) return std::nullopt;
        return coeff;
    }

    bool contains(const std::vector<Int>& v) const { return coords_of(v).has_value(); }

    bool contains(const IntLattice& o) const {
        if (o.ambient_ != ambient_) throw std::invalid_argument("IntLattice: ambient mismatch");
        for (std::size_t i = 0; i < o.basis_.rows(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

private:
    std::size_t ambient_ = 0;
    IntMat basis_{0, 0};
};

inline IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("lattice_sum: ambient mismatch");
    IntMat g(a.rank() + b.rank(), a.ambient_rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.ambient_rank(); ++j) g.at(i, j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.ambient_rank(); ++j) g.at(a.rank() + i, j) = b.basis().at(i, j);
    return IntLattice(a.ambient_rank(), g);
}

// Saturated basis of {v : m v = 0}: the kernel columns of the right Smith
// transform form part of a Z-basis of Z^cols, hence a direct summand.
inline IntLattice kernel_basis(const IntMat& m) {
    const std::size_t n = m.cols();
    SmithResult s = smith_normal_form(m);
    std::vector<std::vector<Int>> rows;
    for (std::size_t j = 0; j < n; ++j) {
        bool zero_image = j >= s.diag.size() || s.diag[j] == 0;
        if (!zero_image) continue;
        std::vector<Int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = s.right.at(i, j);
        rows.push_back(std::move(v));
    }
    return IntLattice(n, IntMat::from_rows(n, rows));
}

// {x in Z^p : A x in target}, target a lattice in Z^rows(A).
inline IntLattice preimage_lattice(const IntMat& a, const IntLattice& target) {
    if (target.ambient_rank() != a.rows())
        throw std::invalid_argument("preimage_lattice: target ambient != rows");
    const std::size_t p = a.cols(), k = target.rank();
    if (k == 0) return kernel_basis(a);
    IntMat ext(a.rows(), p + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < p; ++j) ext.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < k; ++j) ext.at(i, p + j) = -target.basis().at(j, i);
    }
    IntLattice ker = kernel_basis(ext);
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < ker.rank(); ++i) {
        std::vector<Int> full = ker.basis().row(i);
        rows.emplace_back(full.begin(), full.begin() + static_cast<long>(p));
    }
    return IntLattice(p, IntMat::from_rows(p, rows));
}

// Expresses the generators of sub (which must lie in sup) in sup's basis.
inline IntMat coords_matrix(const IntLattice& sup, const IntLattice& sub) {
    IntMat coeffs(sub.rank(), sup.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto c = sup.coords_of(sub.basis().row(i));
        if (!c) throw std::invalid_argument("coords_matrix: not a sublattice");
        for (std::size_t j = 0; j < sup.rank(); ++j) coeffs.at(i, j) = (*c)[j];
    }
    return coeffs;
}

struct LatticeRelation {
    std::size_t rank_a = 0;
    bool equal = false;
    bool a_subset_b = false;
    std::optional<Int> index_if_finite;  // [b : a] when a ⊆ b with equal ranks
    bool torsion_free_quotient = false;  // image of a in Z^n / b is torsion free
};

inline LatticeRelation lattice_ops(const IntLattice& a, const IntLattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("lattice_ops: ambient rank mismatch");
    LatticeRelation rel;
    rel.rank_a = a.rank();
    rel.equal = (a == b);
    rel.a_subset_b = b.contains(a);
    if (rel.a_subset_b && a.rank() == b.rank() && a.rank() > 0) {
        Int d = determinant(coords_matrix(b, a));
        rel.index_if_finite = d < 0 ? Int(-d) : d;
    } else if (rel.a_subset_b && a.rank() == b.rank()) {
        rel.index_if_finite = Int(1);  // both zero lattices
    }
    // torsion of (a + b)/b, via the invariant factors of b inside a + b
    IntLattice sum = lattice_sum(a, b);
    SmithResult s = smith_normal_form(coords_matrix(sum, b));
    rel.torsion_free_quotient = true;
    for (const Int& d : s.diag)
        if (d > 1) rel.torsion_free_quotient = false;
    return rel;
}

}  // namespace qsc

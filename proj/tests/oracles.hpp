// Test-only oracles, deliberately independent of the library's normal-form
// code paths: rational elimination for ranks and kernels, cofactor expansion
// for determinants, and exhaustive subword enumeration for the Bruhat order.

#pragma once

#include <random>
#include <set>
#include <vector>

#include "qsc/weyl.hpp"

namespace oracle {

using qsc::Int;
using qsc::IntMat;
using qsc::Rat;

// rank over Q by plain Gaussian elimination with exact rationals
inline std::size_t rational_rank(const IntMat& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rat(m.at(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = m.rows();
        for (std::size_t i = rank; i < m.rows(); ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv == m.rows()) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) {
                a[i][j] -= f * a[rank][j];
                a[i][j].canonicalize();
            }
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rational_kernel_dim(const IntMat& m) { return m.cols() - rational_rank(m); }

// recursive cofactor expansion; fine for the small matrices used in tests
inline Int cofactor_det(const IntMat& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, c++) = m.at(i, k);
            }
        Int term = m.at(0, j) * cofactor_det(minor);
        det += (j % 2 == 0) ? term : Int(-term);
    }
    return det;
}

// all products of subwords of a fixed reduced word; equals the lower interval
inline std::set<qsc::WeylElt> subword_products(const qsc::RootSystem& rs,
                                               const std::vector<int>& word) {
    std::set<qsc::WeylElt> out;
    const std::size_t l = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
        std::vector<int> sub;
        for (std::size_t k = 0; k < l; ++k)
            if (mask & (std::size_t{1} << k)) sub.push_back(word[k]);
        out.insert(qsc::WeylElt::from_word(rs, sub));
    }
    return out;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    IntMat matrix(std::size_t rows, std::size_t cols, long lo = -9, long hi = 9) {
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = pick(lo, hi);
        return m;
    }

    // product of a few random elementary matrices
    IntMat unimodular(std::size_t n, int ops = 8) {
        IntMat u = IntMat::identity(n);
        for (int k = 0; k < ops; ++k) {
            std::size_t i = static_cast<std::size_t>(pick(0, static_cast<long>(n) - 1));
            std::size_t j = static_cast<std::size_t>(pick(0, static_cast<long>(n) - 1));
            switch (pick(0, 2)) {
                case 0:
                    if (i != j) u.submul_row(i, j, Int(pick(-3, 3)));
                    break;
                case 1:
                    u.swap_rows(i, j);
                    break;
                default:
                    u.negate_row(i);
            }
        }
        return u;
    }
};

}  // namespace oracle

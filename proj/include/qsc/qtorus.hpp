// Quantum-torus model of the localized quotient attached to a Cauchon diagram:
// one generator per skipped position, commutation scalars tracked exactly as
// exponent vectors, monomial arithmetic in normal order, and the center as an
// integer kernel.

#pragma once

#include "qsc/twist.hpp"

namespace qsc {

class QTorus {
public:
    QTorus(const RootSystem& rs, std::vector<int> positions, std::vector<RootVec> weights,
           std::size_t nparams, std::vector<ExpVec> comm)
        : rs_(&rs), positions_(std::move(positions)), weights_(std::move(weights)),
          nparams_(nparams), comm_(std::move(comm)) {}

    const RootSystem& root_system() const { return *rs_; }
    std::size_t generators() const { return positions_.size(); }
    std::size_t nparams() const { return nparams_; }
    int position(std::size_t a) const { return positions_.at(a); }
    const RootVec& weight(std::size_t a) const { return weights_.at(a); }

    // scalar lambda(a,b) with z_a z_b = lambda(a,b) z_b z_a; 0-based indices
    const ExpVec& entry(std::size_t a, std::size_t b) const {
        return comm_.at(a * generators() + b);
    }

    IntLattice weight_lattice() const {
        std::vector<std::vector<Int>> rows;
        for (const RootVec& b : weights_) rows.push_back(b.c);
        return IntLattice(rs_->rank(), IntMat::from_rows(rs_->rank(), rows));
    }

private:
    const RootSystem* rs_;
    std::vector<int> positions_;
    std::vector<RootVec> weights_;
    std::size_t nparams_;
    std::vector<ExpVec> comm_;
};

// generators carry the beta roots of the skipped positions; for a > b the
// scalar is r(beta_a, beta_b) q^{-<beta_a, beta_b>}, the leading coefficient
// of the straightening relation
inline QTorus build_torus(const RootSystem& rs, const std::vector<int>& word,
                          const CauchonDiagram& d, const Bicharacter& r) {
    check_reduced(rs, word);
    check_positions(word, d.positions);
    std::vector<RootVec> betas = beta_roots(rs, word);
    std::vector<int> positions;
    std::vector<RootVec> weights;
    for (int j = 1; j <= static_cast<int>(word.size()); ++j)
        if (!d.contains(j)) {
            positions.push_back(j);
            weights.push_back(betas[static_cast<std::size_t>(j - 1)]);
        }
    const std::size_t g = positions.size();
    std::vector<ExpVec> comm(g * g, ExpVec(r.nparams()));
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < a; ++b) {
            ExpVec v = r.eval(weights[a], weights[b]);
            v += ExpVec::q_power(r.nparams(), -rs.pairing(weights[a], weights[b]));
            comm[a * g + b] = v;
            comm[b * g + a] = -v;
        }
    QTorus t(rs, positions, weights, r.nparams(), std::move(comm));
    if (!(t.weight_lattice() == qyw_lattice(rs, word, d)))
        throw std::logic_error("build_torus: generator weights do not span the support lattice");
    return t;
}

struct TorusMonomial {
    std::vector<Int> exps;  // Laurent exponents, one per generator
    ExpVec coeff;

    bool operator==(const TorusMonomial& o) const { return exps == o.exps && coeff == o.coeff; }
};

inline TorusMonomial unit_monomial(const QTorus& t) {
    return TorusMonomial{std::vector<Int>(t.generators()), ExpVec(t.nparams())};
}

inline RootVec monomial_weight(const QTorus& t, const TorusMonomial& x) {
    RootVec w(t.root_system().rank());
    for (std::size_t a = 0; a < t.generators(); ++a)
        for (std::size_t k = 0; k < w.rank(); ++k) w.c[k] += x.exps[a] * t.weight(a).c[k];
    return w;
}

// Normal order is decreasing generator index (z_g^.. ... z_1^..).  Moving the
// top block of y past the tail of x costs entry(a,b) once per crossing pair
// a < b, which keeps the product associative on the nose.
inline TorusMonomial multiply(const QTorus& t, const TorusMonomial& x, const TorusMonomial& y) {
    if (x.exps.size() != t.generators() || y.exps.size() != t.generators())
        throw std::invalid_argument("multiply: monomial does not belong to this torus");
    TorusMonomial z;
    z.exps.resize(t.generators());
    for (std::size_t a = 0; a < t.generators(); ++a) z.exps[a] = x.exps[a] + y.exps[a];
    z.coeff = x.coeff + y.coeff;
    for (std::size_t a = 0; a < t.generators(); ++a) {
        if (x.exps[a] == 0) continue;
        for (std::size_t b = a + 1; b < t.generators(); ++b) {
            if (y.exps[b] == 0) continue;
            z.coeff += t.entry(a, b) * (x.exps[a] * y.exps[b]);
        }
    }
    return z;
}

inline TorusMonomial inverse_monomial(const QTorus& t, const TorusMonomial& x) {
    TorusMonomial inv;
    inv.exps.resize(t.generators());
    for (std::size_t a = 0; a < t.generators(); ++a) inv.exps[a] = -x.exps[a];
    inv.coeff = -x.coeff;
    for (std::size_t a = 0; a < t.generators(); ++a)
        for (std::size_t b = a + 1; b < t.generators(); ++b)
            inv.coeff += t.entry(a, b) * (x.exps[a] * x.exps[b]);
    return inv;
}

// scalar with z^x z^y = scalar * z^y z^x; depends on x, y only through the
// skew form attached to the commutation matrix
inline ExpVec commutation_scalar(const QTorus& t, const std::vector<Int>& x,
                                 const std::vector<Int>& y) {
    ExpVec s(t.nparams());
    for (std::size_t a = 0; a < t.generators(); ++a)
        for (std::size_t b = a + 1; b < t.generators(); ++b)
            s += t.entry(a, b) * (x[a] * y[b] - y[a] * x[b]);
    return s;
}

// exponent vectors commuting with every generator modulo the relations
inline IntLattice center_lattice(const QTorus& t, const RelationsLattice& rel) {
    if (rel.nparams() != t.nparams())
        throw std::invalid_argument("center_lattice: parameter arity mismatch");
    const std::size_t g = t.generators(), m = t.nparams();
    if (g == 0) return IntLattice::zero(0);
    // rows: for each generator c and parameter coordinate k, sum_b a_b entry(b,c)_k
    IntMat cond(g * m, g);
    for (std::size_t c = 0; c < g; ++c)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t b = 0; b < g; ++b) cond.at(c * m + k, b) = t.entry(b, c).e[k];
    if (rel.is_trivial()) return kernel_basis(cond);
    std::vector<std::vector<Int>> target_rows;
    for (std::size_t c = 0; c < g; ++c)
        for (std::size_t i = 0; i < rel.lattice().rank(); ++i) {
            std::vector<Int> row(g * m);
            for (std::size_t k = 0; k < m; ++k) row[c * m + k] = rel.lattice().basis().at(i, k);
            target_rows.push_back(std::move(row));
        }
    IntLattice target(g * m, IntMat::from_rows(g * m, target_rows));
    return preimage_lattice(cond, target);
}

}  // namespace qsc

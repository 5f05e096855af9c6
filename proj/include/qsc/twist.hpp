// Multiplicative data for cocycle twists, handled as formal exponent vectors:
// coordinate 0 is the exponent of q, the remaining coordinates are the twist
// parameters.  Addition of vectors models multiplication in the ground field,
// and the zero vector models 1.  A RelationsLattice collects exponent vectors
// declared equal to 1 (non-generic parameter values); its generators must have
// q-coordinate 0 since q is never a root of unity.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qsc/cauchon.hpp"

namespace qsc {

struct ExpVec {
    std::vector<Int> e;

    ExpVec() = default;
    explicit ExpVec(std::size_t m) : e(m) {}
    explicit ExpVec(std::vector<Int> v) : e(std::move(v)) {}

    static ExpVec q_power(std::size_t m, Int k) {
        ExpVec v(m);
        v.e.at(0) = std::move(k);
        return v;
    }

    std::size_t size() const { return e.size(); }
    bool is_zero() const {
        return std::all_of(e.begin(), e.end(), [](const Int& x) { return x == 0; });
    }
    const Int& q_exponent() const { return e.at(0); }

    ExpVec& operator+=(const ExpVec& o) {
        check(o);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
        return *this;
    }
    ExpVec operator+(const ExpVec& o) const {
        ExpVec r = *this;
        r += o;
        return r;
    }
    ExpVec operator-() const {
        ExpVec r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
        return r;
    }
    ExpVec operator-(const ExpVec& o) const { return *this + (-o); }
    ExpVec operator*(const Int& k) const {
        ExpVec r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = k * e[i];
        return r;
    }
    bool operator==(const ExpVec& o) const { return e == o.e; }
    bool operator!=(const ExpVec& o) const { return !(*this == o); }

private:
    void check(const ExpVec& o) const {
        if (e.size() != o.e.size())
            throw std::invalid_argument("ExpVec: mixing different parameter sets");
    }
};

// exponent vectors declared trivial; ambient rank = number of parameters m
class RelationsLattice {
public:
    explicit RelationsLattice(std::size_t nparams)
        : lat_(IntLattice::zero(nparams)) {}
    RelationsLattice(std::size_t nparams, const std::vector<ExpVec>& generators)
        : lat_(IntLattice::zero(nparams)) {
        std::vector<std::vector<Int>> rows;
        for (const ExpVec& g : generators) {
            if (g.size() != nparams)
                throw std::invalid_argument("RelationsLattice: generator arity mismatch");
            if (g.q_exponent() != 0)
                throw std::invalid_argument(
                    "RelationsLattice: generators must have q-exponent 0 (q is not a root of unity)");
            rows.push_back(g.e);
        }
        lat_ = IntLattice(nparams, IntMat::from_rows(nparams, rows));
    }

    std::size_t nparams() const { return lat_.ambient_rank(); }
    const IntLattice& lattice() const { return lat_; }
    bool is_trivial() const { return lat_.rank() == 0; }
    bool contains(const ExpVec& v) const { return lat_.contains(v.e); }

private:
    IntLattice lat_;
};

// Multiplicatively skew-symmetric bicharacter on the support sublattice of the
// root lattice, tabulated on simple roots and extended bilinearly.
class Bicharacter {
public:
    Bicharacter(const RootSystem& rs, std::vector<int> support, std::size_t nparams)
        : rs_(&rs), support_(std::move(support)), nparams_(nparams),
          table_(rs.rank() * rs.rank(), ExpVec(nparams)) {
        std::sort(support_.begin(), support_.end());
        for (int i : support_)
            if (i < 1 || static_cast<std::size_t>(i) > rs.rank())
                throw std::invalid_argument("Bicharacter: support index out of range");
        if (nparams_ < 1) throw std::invalid_argument("Bicharacter: need at least the q parameter");
    }

    static Bicharacter trivial(const RootSystem& rs, std::vector<int> support,
                               std::size_t nparams = 1) {
        return Bicharacter(rs, std::move(support), nparams);
    }

    // r(alpha_i, alpha_j) = p(alpha_i, alpha_j) / p(alpha_j, alpha_i) from a
    // full cocycle table on simple roots; the result is automatically skew
    static Bicharacter from_cocycle_table(const RootSystem& rs, std::vector<int> support,
                                          std::size_t nparams,
                                          const std::vector<std::vector<ExpVec>>& p) {
        Bicharacter r(rs, support, nparams);
        for (int i : r.support_)
            for (int j : r.support_)
                if (i != j) r.set_raw(i, j, p.at(idx(rs, i)).at(idx(rs, j)) - p.at(idx(rs, j)).at(idx(rs, i)));
        return r;
    }

    const std::vector<int>& support() const { return support_; }
    std::size_t nparams() const { return nparams_; }
    const RootSystem& root_system() const { return *rs_; }

    bool in_support(int i) const {
        return std::binary_search(support_.begin(), support_.end(), i);
    }

    // define r(alpha_i, alpha_j) for i < j; the skew entry is filled in
    void set_entry(int i, int j, const ExpVec& v) {
        if (!in_support(i) || !in_support(j) || i == j)
            throw std::invalid_argument("Bicharacter: entry indices must be distinct support indices");
        if (v.size() != nparams_) throw std::invalid_argument("Bicharacter: entry arity mismatch");
        set_raw(i, j, v);
        set_raw(j, i, -v);
    }

    const ExpVec& entry(int i, int j) const { return table_[idx(*rs_, i) * rs_->rank() + idx(*rs_, j)]; }

    bool is_trivial() const {
        return std::all_of(table_.begin(), table_.end(), [](const ExpVec& v) { return v.is_zero(); });
    }

    // true when every entry is a pure q-power
    bool is_q_power() const {
        for (const ExpVec& v : table_)
            for (std::size_t k = 1; k < v.size(); ++k)
                if (v.e[k] != 0) return false;
        return true;
    }

    // bilinear extension; arguments must be supported on the support set
    ExpVec eval(const RootVec& x, const RootVec& y) const {
        check_supported(x);
        check_supported(y);
        ExpVec out(nparams_);
        for (int i : support_) {
            const Int& xi = x.c[idx(*rs_, i)];
            if (xi == 0) continue;
            for (int j : support_) {
                const Int& yj = y.c[idx(*rs_, j)];
                if (yj == 0) continue;
                out += entry(i, j) * (xi * yj);
            }
        }
        return out;
    }

    void check_supported(const RootVec& x) const {
        if (x.rank() != rs_->rank()) throw std::invalid_argument("Bicharacter: rank mismatch");
        for (std::size_t k = 0; k < x.rank(); ++k)
            if (x.c[k] != 0 && !in_support(static_cast<int>(k) + 1))
                throw std::invalid_argument("Bicharacter: vector has coordinates outside the support");
    }

private:
    static std::size_t idx(const RootSystem& rs, int i) {
        if (i < 1 || static_cast<std::size_t>(i) > rs.rank())
            throw std::invalid_argument("Bicharacter: index out of range");
        return static_cast<std::size_t>(i - 1);
    }
    void set_raw(int i, int j, const ExpVec& v) { table_[idx(*rs_, i) * rs_->rank() + idx(*rs_, j)] = v; }

    const RootSystem* rs_;
    std::vector<int> support_;
    std::size_t nparams_;
    std::vector<ExpVec> table_;
};

// A character of the torus grading group, tabulated on the supported simple
// roots and extended additively.
struct TorusCharacter {
    const RootSystem* rs = nullptr;
    std::size_t nparams = 1;
    std::vector<int> support;
    std::vector<ExpVec> value_on_alpha;  // parallel to support

    ExpVec eval(const RootVec& gamma) const {
        ExpVec out(nparams);
        for (std::size_t k = 0; k < gamma.rank(); ++k) {
            if (gamma.c[k] == 0) continue;
            auto it = std::lower_bound(support.begin(), support.end(), static_cast<int>(k) + 1);
            if (it == support.end() || *it != static_cast<int>(k) + 1)
                throw std::invalid_argument("TorusCharacter: vector outside the support lattice");
            out += value_on_alpha[static_cast<std::size_t>(it - support.begin())] * gamma.c[k];
        }
        return out;
    }

    bool operator==(const TorusCharacter& o) const {
        return support == o.support && value_on_alpha == o.value_on_alpha;
    }
};

inline Int integral_pairing(const RootSystem& rs, const WeightVec& w, const RootVec& v) {
    Rat p = rs.pairing(w, v);
    if (p.get_den() != 1) throw std::logic_error("pairing expected to be integral");
    return p.get_num();
}

// the commutation character gamma |-> r((w-y)mu, gamma) q^{-<(w+y)mu, gamma>}
// of the normal element attached to (y, w) and the weight mu
inline TorusCharacter commutation_character(const WeylElt& w, const WeylElt& y, const WeightVec& mu,
                                            const Bicharacter& r) {
    const RootSystem& rs = w.root_system();
    if (&rs != &y.root_system()) throw std::invalid_argument("commutation_character: mixed root systems");
    if (!mu.is_integral()) throw std::invalid_argument("commutation_character: mu must be an integral weight");
    if (!bruhat_leq(y, w)) throw std::invalid_argument("commutation_character: y must be below w");

    WeightVec diff = w.act(mu) - y.act(mu);
    RootVec wy_mu = rs.weight_to_root(diff);  // always in the root lattice
    r.check_supported(wy_mu);
    WeightVec sum = w.act(mu) + y.act(mu);

    TorusCharacter chi;
    chi.rs = &rs;
    chi.nparams = r.nparams();
    chi.support = r.support();
    for (int i : chi.support) {
        RootVec alpha = rs.simple_root(i);
        ExpVec v = r.eval(wy_mu, alpha);
        v += ExpVec::q_power(r.nparams(), -integral_pairing(rs, sum, alpha));
        chi.value_on_alpha.push_back(std::move(v));
    }
    return chi;
}

// gamma |-> r(theta, gamma) q^{<theta - 2 w mu, gamma>}; additive in (mu, theta)
inline TorusCharacter torus_character(const WeylElt& w, const WeightVec& mu, const RootVec& theta,
                                      const Bicharacter& r) {
    const RootSystem& rs = w.root_system();
    if (!mu.is_integral()) throw std::invalid_argument("torus_character: mu must be an integral weight");
    for (std::size_t k = 0; k < mu.rank(); ++k)
        if (mu.c[k] != 0 && !r.in_support(static_cast<int>(k) + 1))
            throw std::invalid_argument("torus_character: mu outside the support weight lattice");
    r.check_supported(theta);

    WeightVec wmu = w.act(mu);
    TorusCharacter chi;
    chi.rs = &rs;
    chi.nparams = r.nparams();
    chi.support = r.support();
    for (int i : chi.support) {
        RootVec alpha = rs.simple_root(i);
        ExpVec v = r.eval(theta, alpha);
        Int qexp = rs.pairing(theta, alpha) - 2 * integral_pairing(rs, wmu, alpha);
        v += ExpVec::q_power(r.nparams(), qexp);
        chi.value_on_alpha.push_back(std::move(v));
    }
    return chi;
}

// Complete-primeness test: the subgroup generated by the values
// r(beta_i, beta_j) q^{<beta_i, beta_j>}, i < j, inside Z^m / rel must be
// torsion free.  Decided by the invariant factors of rel inside the lattice
// spanned by the values together with rel.
inline bool torsion_free_check(const RootSystem& rs, const std::vector<int>& word,
                               const Bicharacter& r, const RelationsLattice& rel) {
    if (rel.nparams() != r.nparams())
        throw std::invalid_argument("torsion_free_check: parameter arity mismatch");
    std::vector<RootVec> betas = beta_roots(rs, word);
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < betas.size(); ++i)
        for (std::size_t j = i + 1; j < betas.size(); ++j) {
            ExpVec v = r.eval(betas[i], betas[j]);
            v += ExpVec::q_power(r.nparams(), rs.pairing(betas[i], betas[j]));
            rows.push_back(v.e);
        }
    IntLattice values(r.nparams(), IntMat::from_rows(r.nparams(), rows));
    return lattice_ops(values, rel.lattice()).torsion_free_quotient;
}

}  // namespace qsc

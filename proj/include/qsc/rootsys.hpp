// Finite-type Cartan data in Bourbaki numbering: Cartan matrices, symmetrizers,
// positive roots, the symmetric bilinear form and root/weight conversions.
//
// Conventions used throughout the library:
//   cartan(i,j) = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
//   <alpha_i, alpha_j> = d_i * cartan(i,j)   (symmetric)
//   s_i(alpha_j) = alpha_j - cartan(i,j) * alpha_i
//   <omega_i, alpha_j> = delta_ij * d_j
// Root vectors carry integer simple-root coordinates, weight vectors carry
// rational fundamental-weight coordinates.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qsc/intlin.hpp"

namespace qsc {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    Series series;
    int rank;

    std::string str() const {
        return std::string(1, static_cast<char>(series)) + std::to_string(rank);
    }

    static LieType parse(const std::string& s) {
        if (s.size() < 2) throw std::invalid_argument("Lie type '" + s + "': expected e.g. A2, B3, F4");
        char c = s[0];
        if (c < 'A' || c > 'G')
            throw std::invalid_argument("Lie type '" + s + "': unknown series '" + std::string(1, c) + "'");
        int r = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("Lie type '" + s + "': bad rank");
            r = r * 10 + (s[i] - '0');
        }
        LieType t{static_cast<Series>(c), r};
        t.validate();
        return t;
    }

    void validate() const {
        bool ok = false;
        switch (series) {
            case Series::A: ok = rank >= 1; break;
            case Series::B: ok = rank >= 2; break;
            case Series::C: ok = rank >= 2; break;
            case Series::D: ok = rank >= 4; break;  // D3 rejected, use A3
            case Series::E: ok = rank >= 6 && rank <= 8; break;
            case Series::F: ok = rank == 4; break;
            case Series::G: ok = rank == 2; break;
        }
        if (!ok) {
            if (series == Series::D && rank == 3)
                throw std::invalid_argument("Lie type D3: rejected, use the isomorphic A3");
            throw std::invalid_argument("Lie type " + str() + ": rank not admissible for series");
        }
    }
};

// integer vector in the simple-root basis
struct RootVec {
    std::vector<Int> c;

    RootVec() = default;
    explicit RootVec(std::size_t r) : c(r) {}
    explicit RootVec(std::vector<Int> v) : c(std::move(v)) {}

    std::size_t rank() const { return c.size(); }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
    }
    bool operator==(const RootVec& o) const { return c == o.c; }
    bool operator<(const RootVec& o) const {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int k = cmp(c[i], o.c[i]);
            if (k != 0) return k < 0;
        }
        return false;
    }
    RootVec operator+(const RootVec& o) const {
        RootVec s(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) s.c[i] = c[i] + o.c[i];
        return s;
    }
    RootVec operator-(const RootVec& o) const {
        RootVec s(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) s.c[i] = c[i] - o.c[i];
        return s;
    }
    RootVec operator-() const {
        RootVec s(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) s.c[i] = -c[i];
        return s;
    }
};

// rational vector in the fundamental-weight basis
struct WeightVec {
    std::vector<Rat> c;

    WeightVec() = default;
    explicit WeightVec(std::size_t r) : c(r) {}
    explicit WeightVec(std::vector<Rat> v) : c(std::move(v)) {
        for (Rat& x : c) x.canonicalize();
    }

    std::size_t rank() const { return c.size(); }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
    }
    bool is_integral() const {
        return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x.get_den() == 1; });
    }
    // lcm of coordinate denominators
    Int denominator() const {
        Int d = 1;
        for (const Rat& x : c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
        return d;
    }
    bool operator==(const WeightVec& o) const { return c == o.c; }
    WeightVec operator+(const WeightVec& o) const {
        WeightVec s(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) s.c[i] = c[i] + o.c[i];
        return s;
    }
    WeightVec operator-(const WeightVec& o) const {
        WeightVec s(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) s.c[i] = c[i] - o.c[i];
        return s;
    }
    WeightVec operator-() const {
        WeightVec s(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) s.c[i] = -c[i];
        return s;
    }
};

class RootSystem {
public:
    explicit RootSystem(LieType t) : type_(t) {
        t.validate();
        build_cartan();
        build_positive_roots();
        cartan_adj_ = adjugate(cartan_);
        cartan_det_ = determinant(cartan_);
    }

    const LieType& type() const { return type_; }
    std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }

    // 1-based accessors matching the Bourbaki labels used in all I/O
    const Int& cartan(int i, int j) const { return cartan_.at(i - 1, j - 1); }
    const Int& sym(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }
    const IntMat& cartan_matrix() const { return cartan_; }
    const std::vector<Int>& symmetrizers() const { return d_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }

    RootVec simple_root(int i) const {
        RootVec v(rank());
        v.c[static_cast<std::size_t>(i - 1)] = 1;
        return v;
    }
    WeightVec fundamental_weight(int i) const {
        WeightVec v(rank());
        v.c[static_cast<std::size_t>(i - 1)] = 1;
        return v;
    }

    bool is_positive(const RootVec& v) const {
        bool nonzero = false;
        for (const Int& x : v.c) {
            if (x < 0) return false;
            if (x > 0) nonzero = true;
        }
        return nonzero;
    }
    bool is_negative(const RootVec& v) const {
        bool nonzero = false;
        for (const Int& x : v.c) {
            if (x > 0) return false;
            if (x < 0) nonzero = true;
        }
        return nonzero;
    }

    Int pairing(const RootVec& x, const RootVec& y) const {
        check_rank(x.rank());
        check_rank(y.rank());
        Int s = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x.c[i] == 0) continue;
            for (std::size_t j = 0; j < rank(); ++j)
                s += x.c[i] * y.c[j] * d_[i] * cartan_.at(i, j);
        }
        return s;
    }

    Rat pairing(const WeightVec& x, const RootVec& y) const {
        check_rank(x.rank());
        check_rank(y.rank());
        Rat s = 0;
        for (std::size_t j = 0; j < rank(); ++j) s += x.c[j] * Rat(d_[j]) * Rat(y.c[j]);
        return s;
    }
    Rat pairing(const RootVec& x, const WeightVec& y) const { return pairing(y, x); }

    Rat pairing(const WeightVec& x, const WeightVec& y) const {
        check_rank(x.rank());
        check_rank(y.rank());
        // <omega_i, omega_j> = d_i * (C^{-1})_{ij}
        Rat s = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x.c[i] == 0) continue;
            for (std::size_t j = 0; j < rank(); ++j)
                s += x.c[i] * y.c[j] * Rat(d_[i] * cartan_adj_.at(i, j), cartan_det_);
        }
        return s;
    }

    // <x, alpha^vee> = 2<x, alpha>/<alpha, alpha>
    template <typename V>
    Rat coroot_pairing(const V& x, const RootVec& alpha) const {
        Rat num = Rat(2) * Rat(pairing(x, alpha));
        Rat den = Rat(pairing(alpha, alpha));
        if (den == 0) throw std::invalid_argument("coroot_pairing: isotropic vector");
        Rat q = num / den;
        q.canonicalize();
        return q;
    }

    // omega-coordinates of a root vector: C * (alpha-coords); always integral
    WeightVec root_to_weight(const RootVec& v) const {
        check_rank(v.rank());
        WeightVec w(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < rank(); ++j) s += cartan_.at(i, j) * v.c[j];
            w.c[i] = Rat(s);
        }
        return w;
    }

    // rational alpha-coordinates of a weight: C^{-1} * (omega-coords)
    std::vector<Rat> weight_to_root_coords(const WeightVec& w) const {
        check_rank(w.rank());
        std::vector<Rat> out(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < rank(); ++j)
                s += Rat(cartan_adj_.at(i, j), cartan_det_) * w.c[j];
            s.canonicalize();
            out[i] = s;
        }
        return out;
    }

    // integral alpha-coordinates, throws when the weight is not in the root lattice
    RootVec weight_to_root(const WeightVec& w) const {
        std::vector<Rat> q = weight_to_root_coords(w);
        RootVec v(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            if (q[i].get_den() != 1)
                throw std::invalid_argument("weight_to_root: weight is not in the root lattice");
            v.c[i] = q[i].get_num();
        }
        return v;
    }

private:
    void check_rank(std::size_t r) const {
        if (r != rank()) throw std::invalid_argument("RootSystem: vector over a different root system");
    }

    void build_cartan() {
        const int r = type_.rank;
        cartan_ = IntMat(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
        auto set = [&](int i, int j, long v) { cartan_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v; };
        std::vector<std::pair<int, int>> edges;  // simply-laced part, 0-based
        for (int i = 0; i < r; ++i) set(i, i, 2);
        d_.assign(static_cast<std::size_t>(r), Int(1));

        switch (type_.series) {
            case Series::A:
                for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
                break;
            case Series::B:  // alpha_r short
                for (int i = 0; i + 2 < r; ++i) edges.emplace_back(i, i + 1);
                set(r - 2, r - 1, -1);
                set(r - 1, r - 2, -2);
                for (int i = 0; i + 1 < r; ++i) d_[static_cast<std::size_t>(i)] = 2;
                break;
            case Series::C:  // alpha_r long
                for (int i = 0; i + 2 < r; ++i) edges.emplace_back(i, i + 1);
                set(r - 2, r - 1, -2);
                set(r - 1, r - 2, -1);
                d_[static_cast<std::size_t>(r - 1)] = 2;
                break;
            case Series::D:
                for (int i = 0; i + 3 < r; ++i) edges.emplace_back(i, i + 1);
                edges.emplace_back(r - 3, r - 2);
                edges.emplace_back(r - 3, r - 1);
                break;
            case Series::E:
                edges.emplace_back(0, 2);
                edges.emplace_back(1, 3);
                edges.emplace_back(2, 3);
                edges.emplace_back(3, 4);
                edges.emplace_back(4, 5);
                if (r >= 7) edges.emplace_back(5, 6);
                if (r >= 8) edges.emplace_back(6, 7);
                break;
            case Series::F:  // alpha_1, alpha_2 long
                edges.emplace_back(0, 1);
                edges.emplace_back(2, 3);
                set(1, 2, -1);
                set(2, 1, -2);
                d_[0] = d_[1] = 2;
                break;
            case Series::G:  // alpha_1 short, alpha_2 long
                set(0, 1, -3);
                set(1, 0, -1);
                d_[1] = 3;
                break;
        }
        for (auto [i, j] : edges) {
            set(i, j, -1);
            set(j, i, -1);
        }
        // sanity: (d_i c_ij) symmetric, gcd(d) = 1
        Int g = 0;
        for (int i = 0; i < r; ++i) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d_[static_cast<std::size_t>(i)].get_mpz_t());
            for (int j = 0; j < r; ++j)
                if (d_[static_cast<std::size_t>(i)] * cartan_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) !=
                    d_[static_cast<std::size_t>(j)] * cartan_.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)))
                    throw std::logic_error("RootSystem: symmetrizer table is inconsistent");
        }
        if (g != 1) throw std::logic_error("RootSystem: symmetrizers not relatively prime");
    }

    RootVec reflect(int i0, const RootVec& v) const {  // s_{i0+1}, 0-based index
        Int coef = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            coef += cartan_.at(static_cast<std::size_t>(i0), j) * v.c[j];
        RootVec out = v;
        out.c[static_cast<std::size_t>(i0)] -= coef;
        return out;
    }

    void build_positive_roots() {
        std::set<RootVec> seen;
        for (int i = 1; i <= type_.rank; ++i) seen.insert(simple_root(i));
        std::vector<RootVec> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            std::vector<RootVec> next;
            for (const RootVec& v : frontier)
                for (int i = 0; i < type_.rank; ++i) {
                    RootVec w = reflect(i, v);
                    if (is_positive(w) && seen.insert(w).second) next.push_back(w);
                }
            frontier = std::move(next);
        }
        positive_.assign(seen.begin(), seen.end());
        std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
            Int ha = 0, hb = 0;
            for (const Int& x : a.c) ha += x;
            for (const Int& x : b.c) hb += x;
            if (ha != hb) return ha < hb;
            return a < b;
        });
        if (positive_.size() != expected_root_count())
            throw std::logic_error("RootSystem: positive root closure has unexpected size");
    }

    std::size_t expected_root_count() const {
        const std::size_t r = rank();
        switch (type_.series) {
            case Series::A: return r * (r + 1) / 2;
            case Series::B:
            case Series::C: return r * r;
            case Series::D: return r * (r - 1);
            case Series::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
            case Series::F: return 24;
            case Series::G: return 6;
        }
        return 0;
    }

    static IntMat adjugate(const IntMat& m) {
        const std::size_t n = m.rows();
        IntMat adj(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                IntMat minor(n - 1, n - 1);
                for (std::size_t a = 0, ai = 0; a < n; ++a) {
                    if (a == j) continue;
                    for (std::size_t b = 0, bj = 0; b < n; ++b) {
                        if (b == i) continue;
                        minor.at(ai, bj) = m.at(a, b);
                        ++bj;
                    }
                    ++ai;
                }
                Int cof = determinant(minor);
                adj.at(i, j) = ((i + j) % 2 == 0) ? cof : Int(-cof);
            }
        return adj;
    }

    LieType type_;
    IntMat cartan_;
    std::vector<Int> d_;
    std::vector<RootVec> positive_;
    IntMat cartan_adj_;
    Int cartan_det_;
};

inline std::string root_str(const RootVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.c.size(); ++i) {
        if (i) os << ",";
        os << v.c[i];
    }
    os << ")";
    return os.str();
}

}  // namespace qsc

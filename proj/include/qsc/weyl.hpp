// Weyl group elements as exact matrices on the root lattice: length, reduced
// words, Bruhat order, lower intervals, support.

#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qsc/rootsys.hpp"

namespace qsc {

class WeylElt {
public:
    WeylElt() = default;
    WeylElt(const RootSystem& rs, IntMat m) : rs_(&rs), a_(std::move(m)) {
        if (a_.rows() != rs.rank() || a_.cols() != rs.rank())
            throw std::invalid_argument("WeylElt: matrix shape does not match root system");
    }

    static WeylElt identity(const RootSystem& rs) {
        return WeylElt(rs, IntMat::identity(rs.rank()));
    }

    static WeylElt simple(const RootSystem& rs, int i) {
        if (i < 1 || static_cast<std::size_t>(i) > rs.rank())
            throw std::invalid_argument("WeylElt::simple: generator index out of range");
        IntMat m = IntMat::identity(rs.rank());
        // column j of s_i is alpha_j - c_{ij} alpha_i
        for (std::size_t j = 0; j < rs.rank(); ++j)
            m.at(static_cast<std::size_t>(i - 1), j) -= rs.cartan(i, static_cast<int>(j) + 1);
        return WeylElt(rs, std::move(m));
    }

    static WeylElt from_word(const RootSystem& rs, const std::vector<int>& word) {
        WeylElt w = identity(rs);
        for (int i : word) w = w * simple(rs, i);
        return w;
    }

    const RootSystem& root_system() const { return *rs_; }
    const IntMat& matrix() const { return a_; }

    bool is_identity() const { return a_ == IntMat::identity(rs_->rank()); }

    WeylElt operator*(const WeylElt& o) const {
        check_same(o);
        return WeylElt(*rs_, a_ * o.a_);
    }

    bool operator==(const WeylElt& o) const { return rs_ == o.rs_ && a_ == o.a_; }
    bool operator!=(const WeylElt& o) const { return !(*this == o); }
    bool operator<(const WeylElt& o) const { return a_ < o.a_; }

    RootVec act(const RootVec& v) const {
        if (v.rank() != rs_->rank()) throw std::invalid_argument("WeylElt::act: rank mismatch");
        return RootVec(a_.apply(v.c));
    }

    // weights map to weights: the omega-coordinate action C A C^{-1} is integral
    WeightVec act(const WeightVec& v) const {
        if (v.rank() != rs_->rank()) throw std::invalid_argument("WeylElt::act: rank mismatch");
        IntMat wm = weight_matrix();
        WeightVec out(rs_->rank());
        for (std::size_t i = 0; i < rs_->rank(); ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < rs_->rank(); ++j) s += Rat(wm.at(i, j)) * v.c[j];
            s.canonicalize();
            out.c[i] = s;
        }
        return out;
    }

    // omega-coordinate action C A C^{-1}
    IntMat weight_matrix() const {
        const std::size_t r = rs_->rank();
        IntMat num = rs_->cartan_matrix() * a_;
        IntMat wm(r, r);
        for (std::size_t j = 0; j < r; ++j) {
            WeightVec ej(r);
            ej.c[j] = 1;
            std::vector<Rat> alpha = rs_->weight_to_root_coords(ej);
            for (std::size_t i = 0; i < r; ++i) {
                Rat s = 0;
                for (std::size_t k = 0; k < r; ++k) s += Rat(num.at(i, k)) * alpha[k];
                s.canonicalize();
                if (s.get_den() != 1)
                    throw std::logic_error("WeylElt: weight action is not integral");
                wm.at(i, j) = s.get_num();
            }
        }
        return wm;
    }

    int length() const {
        int l = 0;
        for (const RootVec& beta : rs_->positive_roots())
            if (rs_->is_negative(act(beta))) ++l;
        return l;
    }

    // smallest left descent: least i with length(s_i * w) < length(w),
    // equivalently w^{-1}(alpha_i) negative; 0 when w = e
    int first_left_descent() const {
        WeylElt inv = inverse();
        for (int i = 1; i <= static_cast<int>(rs_->rank()); ++i)
            if (rs_->is_negative(inv.act(rs_->simple_root(i)))) return i;
        return 0;
    }

    // greedy canonical reduced word, lexicographically smallest
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        WeylElt x = *this;
        WeylElt xinv = inverse();
        while (true) {
            int pick = 0;
            for (int i = 1; i <= static_cast<int>(rs_->rank()); ++i)
                if (rs_->is_negative(xinv.act(rs_->simple_root(i)))) { pick = i; break; }
            if (pick == 0) break;
            word.push_back(pick);
            WeylElt s = simple(*rs_, pick);
            x = s * x;
            xinv = xinv * s;
        }
        if (!x.is_identity()) throw std::logic_error("WeylElt::reduced_word: descent scan failed");
        return word;
    }

    WeylElt inverse() const {
        // Weyl matrices are unimodular; solve via the reversed reduced word of
        // the matrix would be circular here, so invert with exact adjugate.
        const std::size_t r = rs_->rank();
        Int det = determinant(a_);
        if (det != 1 && det != -1) throw std::logic_error("WeylElt::inverse: matrix not unimodular");
        IntMat inv(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                IntMat minor(r - 1, r - 1);
                for (std::size_t a = 0, ai = 0; a < r; ++a) {
                    if (a == j) continue;
                    for (std::size_t b = 0, bj = 0; b < r; ++b) {
                        if (b == i) continue;
                        minor.at(ai, bj) = a_.at(a, b);
                        ++bj;
                    }
                    ++ai;
                }
                Int cof = determinant(minor);
                if ((i + j) % 2 == 1) cof = -cof;
                inv.at(i, j) = det == 1 ? cof : Int(-cof);
            }
        return WeylElt(*rs_, std::move(inv));
    }

private:
    void check_same(const WeylElt& o) const {
        if (rs_ != o.rs_) throw std::invalid_argument("WeylElt: mixed root systems");
    }

    const RootSystem* rs_ = nullptr;
    IntMat a_{0, 0};
};

inline std::string word_label(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << word[i];
    }
    return os.str();
}

inline std::vector<int> parse_word_label(const std::string& s) {
    if (s == "e" || s.empty()) return {};
    std::istringstream is(s);
    std::vector<int> word;
    int x;
    while (is >> x) word.push_back(x);
    if (!is.eof()) throw std::invalid_argument("bad word '" + s + "'");
    return word;
}

// standard recursion; agrees with the subword characterization (tested)
inline bool bruhat_leq(WeylElt y, WeylElt w) {
    if (&y.root_system() != &w.root_system())
        throw std::invalid_argument("bruhat_leq: mixed root systems");
    const RootSystem& rs = y.root_system();
    while (!w.is_identity()) {
        if (y.is_identity()) return true;
        int i = w.first_left_descent();
        WeylElt s = WeylElt::simple(rs, i);
        WeylElt sy = s * y;
        if (sy.length() < y.length()) y = sy;
        w = s * w;
    }
    return y.is_identity();
}

// W^{<=w} by downward closure: deleting a letter of a reduced word yields a
// subword product, and iterating reaches the whole lower interval
inline std::set<WeylElt> lower_interval(const WeylElt& w) {
    std::set<WeylElt> seen{w};
    std::deque<WeylElt> queue{w};
    const RootSystem& rs = w.root_system();
    while (!queue.empty()) {
        WeylElt x = queue.front();
        queue.pop_front();
        std::vector<int> word = x.reduced_word();
        for (std::size_t skip = 0; skip < word.size(); ++skip) {
            std::vector<int> sub;
            sub.reserve(word.size() - 1);
            for (std::size_t k = 0; k < word.size(); ++k)
                if (k != skip) sub.push_back(word[k]);
            WeylElt y = WeylElt::from_word(rs, sub);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return seen;
}

inline std::set<int> support(const WeylElt& w) {
    std::vector<int> word = w.reduced_word();
    return std::set<int>(word.begin(), word.end());
}

constexpr std::size_t kMaxEnumeratedGroup = 2000;

inline std::vector<WeylElt> enumerate_group(const RootSystem& rs) {
    std::set<WeylElt> seen{WeylElt::identity(rs)};
    std::deque<WeylElt> queue{WeylElt::identity(rs)};
    while (!queue.empty()) {
        WeylElt x = queue.front();
        queue.pop_front();
        for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) {
            WeylElt y = x * WeylElt::simple(rs, i);
            if (seen.insert(y).second) {
                if (seen.size() > kMaxEnumeratedGroup)
                    throw std::runtime_error("enumerate_group: group larger than cap " +
                                             std::to_string(kMaxEnumeratedGroup));
                queue.push_back(y);
            }
        }
    }
    return std::vector<WeylElt>(seen.begin(), seen.end());
}

inline WeylElt longest_element(const RootSystem& rs) {
    WeylElt w = WeylElt::identity(rs);
    while (true) {
        int pick = 0;
        for (int i = 1; i <= static_cast<int>(rs.rank()); ++i)
            if (rs.is_positive(w.act(rs.simple_root(i)))) { pick = i; break; }
        if (pick == 0) return w;
        w = w * WeylElt::simple(rs, pick);
    }
}

// Coxeter exponent m(i,j) from the Cartan entries: c_ij c_ji in {0,1,2,3}
// corresponds to m = 2, 3, 4, 6.
inline int braid_exponent(const RootSystem& rs, int i, int j) {
    Int prod = rs.cartan(i, j) * rs.cartan(j, i);
    if (prod == 0) return 2;
    if (prod == 1) return 3;
    if (prod == 2) return 4;
    if (prod == 3) return 6;
    throw std::logic_error("braid_exponent: not a finite-type Cartan pair");
}

// all reduced words of w by breadth-first braid-move closure
inline std::set<std::vector<int>> all_reduced_words(const WeylElt& w, std::size_t cap = 10000) {
    const RootSystem& rs = w.root_system();
    std::set<std::vector<int>> seen{w.reduced_word()};
    std::deque<std::vector<int>> queue{w.reduced_word()};
    while (!queue.empty()) {
        std::vector<int> word = queue.front();
        queue.pop_front();
        for (std::size_t p = 0; p < word.size(); ++p) {
            if (p + 1 >= word.size()) continue;
            int i = word[p], j = word[p + 1];
            if (i == j) continue;
            int m = braid_exponent(rs, i, j);
            if (p + static_cast<std::size_t>(m) > word.size()) continue;
            bool alternating = true;
            for (int k = 0; k < m; ++k)
                if (word[p + static_cast<std::size_t>(k)] != (k % 2 == 0 ? i : j)) alternating = false;
            if (!alternating) continue;
            std::vector<int> moved = word;
            for (int k = 0; k < m; ++k) moved[p + static_cast<std::size_t>(k)] = (k % 2 == 0 ? j : i);
            if (seen.insert(moved).second) {
                if (seen.size() > cap)
                    throw std::runtime_error("all_reduced_words: cap exceeded");
                queue.push_back(moved);
            }
        }
    }
    return seen;
}

// covering pairs inside a finite Bruhat-closed set
inline bool is_cover(const WeylElt& lo, const WeylElt& hi, const std::set<WeylElt>& within) {
    if (!(bruhat_leq(lo, hi)) || lo == hi) return false;
    for (const WeylElt& z : within) {
        if (z == lo || z == hi) continue;
        if (bruhat_leq(lo, z) && bruhat_leq(z, hi)) return false;
    }
    return true;
}

// the lower interval of w with its order relation tabulated once
struct IntervalPoset {
    std::vector<WeylElt> elems;          // sorted by (length, canonical word)
    std::vector<std::vector<bool>> leq;  // leq[i][j] iff elems[i] <= elems[j]

    static IntervalPoset of(const WeylElt& w) {
        IntervalPoset p;
        std::set<WeylElt> interval = lower_interval(w);
        p.elems.assign(interval.begin(), interval.end());
        std::sort(p.elems.begin(), p.elems.end(), [](const WeylElt& a, const WeylElt& b) {
            std::vector<int> wa = a.reduced_word(), wb = b.reduced_word();
            if (wa.size() != wb.size()) return wa.size() < wb.size();
            return wa < wb;
        });
        const std::size_t n = p.elems.size();
        p.leq.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                p.leq[i][j] = bruhat_leq(p.elems[i], p.elems[j]);
        return p;
    }

    std::size_t size() const { return elems.size(); }

    bool is_cover(std::size_t i, std::size_t j) const {
        if (i == j || !leq[i][j]) return false;
        for (std::size_t k = 0; k < elems.size(); ++k)
            if (k != i && k != j && leq[i][k] && leq[k][j]) return false;
        return true;
    }
};

}  // namespace qsc

// Subexpression combinatorics over a fixed reduced word: beta root sequences,
// Cauchon diagrams, the support lattices Q_{y,w}, and ascent chains.
//
// Positions are 1-based.  For D a subset of [1,l] and word (i_1..i_l), the
// letter at position j contributes s_{i_j} when j is in D and drops out
// otherwise; w^D is the resulting product.  D is a Cauchon diagram when every
// proper suffix product grows in length when its own letter is prepended:
//   length(s_{i_j} * suffix_j(D)) > length(suffix_j(D)),  j in [1, l-1],
// where suffix_j(D) uses positions j+1..l.  For each y <= w there is exactly
// one such D with w^D = y; the greedy scan below finds it and the subset
// enumeration doubles as the reference oracle.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qsc/weyl.hpp"

namespace qsc {

struct CauchonDiagram {
    std::vector<int> word;       // reduced word of w
    std::vector<int> positions;  // sorted subset of [1, l]

    bool contains(int j) const {
        return std::binary_search(positions.begin(), positions.end(), j);
    }
};

inline void check_reduced(const RootSystem& rs, const std::vector<int>& word) {
    WeylElt w = WeylElt::from_word(rs, word);
    if (w.length() != static_cast<int>(word.size()))
        throw std::invalid_argument("word '" + word_label(word) + "' is not reduced");
}

inline void check_positions(const std::vector<int>& word, const std::vector<int>& positions) {
    int prev = 0;
    for (int j : positions) {
        if (j < 1 || j > static_cast<int>(word.size()))
            throw std::invalid_argument("diagram position out of range");
        if (j <= prev) throw std::invalid_argument("diagram positions must be strictly increasing");
        prev = j;
    }
}

// beta_j = s_{i_1} ... s_{i_{j-1}} (alpha_{i_j}); for a reduced word these are
// exactly the positive roots inverted by w^{-1}, pairwise distinct
inline std::vector<RootVec> beta_roots(const RootSystem& rs, const std::vector<int>& word) {
    check_reduced(rs, word);
    std::vector<RootVec> betas;
    betas.reserve(word.size());
    WeylElt prefix = WeylElt::identity(rs);
    for (int letter : word) {
        betas.push_back(prefix.act(rs.simple_root(letter)));
        prefix = prefix * WeylElt::simple(rs, letter);
    }
    return betas;
}

inline WeylElt subexpression_product(const RootSystem& rs, const std::vector<int>& word,
                                     const std::vector<int>& positions) {
    WeylElt w = WeylElt::identity(rs);
    for (int j : positions) w = w * WeylElt::simple(rs, word[static_cast<std::size_t>(j - 1)]);
    return w;
}

inline bool is_cauchon_diagram(const RootSystem& rs, const std::vector<int>& word,
                               const std::vector<int>& positions) {
    check_reduced(rs, word);
    check_positions(word, positions);
    const int l = static_cast<int>(word.size());
    WeylElt suffix_inv = WeylElt::identity(rs);  // inverse of suffix_j(D)
    for (int j = l - 1; j >= 1; --j) {
        if (std::binary_search(positions.begin(), positions.end(), j + 1))
            suffix_inv = suffix_inv * WeylElt::simple(rs, word[static_cast<std::size_t>(j)]);
        // length(s_i * u) > length(u)  iff  u^{-1}(alpha_i) is positive
        if (!rs.is_positive(suffix_inv.act(rs.simple_root(word[static_cast<std::size_t>(j - 1)]))))
            return false;
    }
    return true;
}

namespace detail {

inline void cauchon_dfs(const RootSystem& rs, const std::vector<int>& word, const WeylElt& y,
                        int ylen, int j, const WeylElt& suffix, const WeylElt& suffix_inv,
                        int suffix_len, std::vector<int>& chosen,
                        std::vector<std::vector<int>>& found) {
    if (j >= 1 && j + 1 <= static_cast<int>(word.size())) {
        // Cauchon condition at index j is already determined
        if (!rs.is_positive(suffix_inv.act(rs.simple_root(word[static_cast<std::size_t>(j - 1)]))))
            return;
    }
    if (std::abs(suffix_len - ylen) > j) return;  // prefix cannot bridge the length gap
    if (j == 0) {
        if (suffix == y) {
            std::vector<int> d(chosen.rbegin(), chosen.rend());
            found.push_back(std::move(d));
        }
        return;
    }
    const int letter = word[static_cast<std::size_t>(j - 1)];
    cauchon_dfs(rs, word, y, ylen, j - 1, suffix, suffix_inv, suffix_len, chosen, found);
    WeylElt s = WeylElt::simple(rs, letter);
    WeylElt nsuffix = s * suffix;
    chosen.push_back(j);
    cauchon_dfs(rs, word, y, ylen, j - 1, nsuffix, suffix_inv * s, nsuffix.length(), chosen, found);
    chosen.pop_back();
}

}  // namespace detail

// reference implementation: enumerate subsets right-to-left with pruning and
// insist on a unique survivor (uniqueness is a theorem, so anything else is a bug)
inline CauchonDiagram cauchon_diagram_enumerate(const RootSystem& rs, const std::vector<int>& word,
                                                const WeylElt& y) {
    check_reduced(rs, word);
    WeylElt w = WeylElt::from_word(rs, word);
    if (!bruhat_leq(y, w))
        throw std::invalid_argument("cauchon_diagram: y is not below w in Bruhat order");
    std::vector<std::vector<int>> found;
    std::vector<int> chosen;
    detail::cauchon_dfs(rs, word, y, y.length(), static_cast<int>(word.size()),
                        WeylElt::identity(rs), WeylElt::identity(rs), 0, chosen, found);
    if (found.size() != 1)
        throw std::logic_error("cauchon_diagram: expected exactly one diagram, found " +
                               std::to_string(found.size()));
    return CauchonDiagram{word, found.front()};
}

// production scan: walk the word once, absorbing a letter whenever it shortens
// the running remainder; certified afterwards against the defining conditions
inline CauchonDiagram cauchon_diagram_for(const RootSystem& rs, const std::vector<int>& word,
                                          const WeylElt& y) {
    check_reduced(rs, word);
    WeylElt w = WeylElt::from_word(rs, word);
    if (!bruhat_leq(y, w))
        throw std::invalid_argument("cauchon_diagram: y is not below w in Bruhat order");
    std::vector<int> positions;
    WeylElt g = y;
    int glen = g.length();
    for (int j = 1; j <= static_cast<int>(word.size()); ++j) {
        WeylElt s = WeylElt::simple(rs, word[static_cast<std::size_t>(j - 1)]);
        WeylElt sg = s * g;
        int sglen = sg.length();
        if (sglen < glen) {
            positions.push_back(j);
            g = sg;
            glen = sglen;
        }
    }
    if (!g.is_identity())
        throw std::logic_error("cauchon_diagram: greedy scan did not exhaust y");
    CauchonDiagram d{word, positions};
    if (!is_cauchon_diagram(rs, word, positions) || !(subexpression_product(rs, word, positions) == y))
        throw std::logic_error("cauchon_diagram: greedy scan produced an invalid diagram");
    return d;
}

// Q_{y,w}: spanned by the prefix images of the skipped letters
inline IntLattice qyw_lattice(const RootSystem& rs, const std::vector<int>& word,
                              const CauchonDiagram& d) {
    check_reduced(rs, word);
    check_positions(word, d.positions);
    std::vector<std::vector<Int>> gens;
    WeylElt prefix = WeylElt::identity(rs);
    for (int j = 1; j <= static_cast<int>(word.size()); ++j) {
        const int letter = word[static_cast<std::size_t>(j - 1)];
        if (!d.contains(j)) gens.push_back(prefix.act(rs.simple_root(letter)).c);
        else prefix = prefix * WeylElt::simple(rs, letter);
    }
    return IntLattice(rs.rank(), IntMat::from_rows(rs.rank(), gens));
}

// the same lattice from the beta roots of the skipped positions
inline IntLattice qyw_lattice_beta(const RootSystem& rs, const std::vector<int>& word,
                                   const CauchonDiagram& d) {
    std::vector<RootVec> betas = beta_roots(rs, word);
    std::vector<std::vector<Int>> gens;
    for (int j = 1; j <= static_cast<int>(word.size()); ++j)
        if (!d.contains(j)) gens.push_back(betas[static_cast<std::size_t>(j - 1)].c);
    return IntLattice(rs.rank(), IntMat::from_rows(rs.rank(), gens));
}

// y = y_0 < y_1 < ... < y_k = w obtained by filling the skipped positions from
// the left; verifies the length increase and the weight-drop identity
//   y_m(omega) = y_{m-1}(omega) - <suffix_{j_m}(D) omega, alpha_{i_{j_m}}^vee> beta_{j_m}
inline std::vector<WeylElt> ascent_chain(const RootSystem& rs, const std::vector<int>& word,
                                         const CauchonDiagram& d) {
    check_reduced(rs, word);
    check_positions(word, d.positions);
    const int l = static_cast<int>(word.size());
    std::vector<int> skipped;
    for (int j = 1; j <= l; ++j)
        if (!d.contains(j)) skipped.push_back(j);

    std::vector<RootVec> betas = beta_roots(rs, word);
    std::vector<WeylElt> chain;
    chain.push_back(subexpression_product(rs, word, d.positions));

    for (int jm : skipped) {
        std::vector<int> next;
        for (int j = 1; j <= l; ++j)
            if (j <= jm || d.contains(j)) next.push_back(j);
        WeylElt ym = subexpression_product(rs, word, next);
        const WeylElt& prev = chain.back();
        if (!(ym.length() > prev.length() && bruhat_leq(prev, ym)))
            throw std::logic_error("ascent_chain: chain fails to increase at position " +
                                   std::to_string(jm));

        // suffix of the original diagram strictly after jm
        std::vector<int> suffix_positions;
        for (int j : d.positions)
            if (j > jm) suffix_positions.push_back(j);
        WeylElt suffix = WeylElt::identity(rs);
        for (int j : suffix_positions)
            suffix = suffix * WeylElt::simple(rs, word[static_cast<std::size_t>(j - 1)]);

        const int letter = word[static_cast<std::size_t>(jm - 1)];
        const RootVec& beta = betas[static_cast<std::size_t>(jm - 1)];
        WeightVec beta_w = rs.root_to_weight(beta);
        for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) {
            WeightVec omega = rs.fundamental_weight(i);
            Rat coef = rs.coroot_pairing(suffix.act(omega), rs.simple_root(letter));
            WeightVec lhs = ym.act(omega);
            WeightVec rhs = prev.act(omega);
            for (std::size_t k = 0; k < rs.rank(); ++k) rhs.c[k] -= coef * beta_w.c[k];
            if (!(lhs == rhs))
                throw std::logic_error("ascent_chain: weight-drop identity fails at position " +
                                       std::to_string(jm));
        }
        chain.push_back(ym);
    }
    return chain;
}

}  // namespace qsc

// Text formats: the cocycle configuration file, the tab-separated machine
// report, the human table, and the DOT closure graph.  The machine format and
// the canonical cocycle serialization are byte-exact; see README for the
// grammar of both.

#pragma once

#include <functional>
#include <sstream>

#include "qsc/strata.hpp"

namespace qsc {

inline constexpr const char* kFormatVersion = "1";

// ---------------------------------------------------------------- cocycle ---

struct CocycleConfig {
    LieType type{Series::A, 1};
    std::vector<int> word;
    std::vector<std::string> params;  // extra parameter names; q is implicit
    // entries r(alpha_i, alpha_j) for i < j, as exponent vectors of length 1+|params|
    std::vector<std::tuple<int, int, std::vector<Int>>> entries;
    std::vector<std::vector<Int>> relations;

    std::size_t nparams() const { return 1 + params.size(); }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline Int parse_int(const std::string& tok, int line) {
    try {
        return Int(tok);
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("cocycle:" + std::to_string(line) + ": bad integer '" + tok + "'");
    }
}

inline int parse_small_int(const std::string& tok, int line) {
    Int v = parse_int(tok, line);
    if (v < 1 || v > 64)
        throw std::runtime_error("cocycle:" + std::to_string(line) + ": index out of range '" + tok + "'");
    return static_cast<int>(v.get_si());
}

}  // namespace detail

inline CocycleConfig parse_cocycle_text(const std::string& text) {
    CocycleConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_magic = false, saw_type = false, saw_word = false;
    std::set<std::pair<int, int>> seen_entries;

    while (std::getline(is, line)) {
        ++lineno;
        std::vector<std::string> tok = detail::split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (!saw_magic) {
            if (tok.size() != 2 || tok[0] != "qsc-cocycle" || tok[1] != kFormatVersion)
                throw std::runtime_error("cocycle:" + std::to_string(lineno) +
                                         ": expected header 'qsc-cocycle " + kFormatVersion + "'");
            saw_magic = true;
            continue;
        }
        const std::string& key = tok[0];
        if (key == "type") {
            if (tok.size() != 2)
                throw std::runtime_error("cocycle:" + std::to_string(lineno) + ": type takes one value");
            cfg.type = LieType::parse(tok[1]);
            saw_type = true;
        } else if (key == "word") {
            if (!saw_type)
                throw std::runtime_error("cocycle:" + std::to_string(lineno) + ": word before type");
            for (std::size_t k = 1; k < tok.size(); ++k) {
                int i = detail::parse_small_int(tok[k], lineno);
                if (i > cfg.type.rank)
                    throw std::runtime_error("cocycle:" + std::to_string(lineno) +
                                             ": word letter exceeds the rank");
                cfg.word.push_back(i);
            }
            saw_word = true;
        } else if (key == "params") {
            for (std::size_t k = 1; k < tok.size(); ++k) {
                if (tok[k] == "q")
                    throw std::runtime_error("cocycle:" + std::to_string(lineno) +
                                             ": 'q' is implicit and cannot be redeclared");
                if (std::find(cfg.params.begin(), cfg.params.end(), tok[k]) != cfg.params.end())
                    throw std::runtime_error("cocycle:" + std::to_string(lineno) +
                                             ": duplicate parameter '" + tok[k] + "'");
                cfg.params.push_back(tok[k]);
            }
        } else if (key == "r") {
            if (!saw_word)
                throw std::runtime_error("cocycle:" + std::to_string(lineno) + ": r entry before word");
            if (tok.size() != 4 + cfg.nparams() || tok[3] != "=")
                throw std::runtime_error("cocycle:" + std::to_string(lineno) +
                                         ": expected 'r i j = " + std::to_string(cfg.nparams()) +
                                         " exponents'");
            int i = detail::parse_small_int(tok[1], lineno);
            int j = detail::parse_small_int(tok[2], lineno);
            if (i >= j)
                throw std::runtime_error("cocycle:" + std::to_string(lineno) +
                                         ": canonical entries require i < j");
            if (!seen_entries.insert({i, j}).second)
                throw std::runtime_error("cocycle:" + std::to_string(lineno) + ": duplicate entry");
            std::vector<Int> v;
            for (std::size_t k = 4; k < tok.size(); ++k) v.push_back(detail::parse_int(tok[k], lineno));
            cfg.entries.emplace_back(i, j, std::move(v));
        } else if (key == "rel") {
            if (tok.size() != 1 + cfg.nparams())
                throw std::runtime_error("cocycle:" + std::to_string(lineno) + ": rel expects " +
                                         std::to_string(cfg.nparams()) + " exponents");
            std::vector<Int> v;
            for (std::size_t k = 1; k < tok.size(); ++k) v.push_back(detail::parse_int(tok[k], lineno));
            if (v[0] != 0)
                throw std::runtime_error("cocycle:" + std::to_string(lineno) +
                                         ": relations must have q-exponent 0");
            cfg.relations.push_back(std::move(v));
        } else {
            throw std::runtime_error("cocycle:" + std::to_string(lineno) + ": unknown field '" + key + "'");
        }
    }
    if (!saw_magic) throw std::runtime_error("cocycle:1: missing 'qsc-cocycle' header");
    if (!saw_type) throw std::runtime_error("cocycle: missing 'type' field");
    if (!saw_word) throw std::runtime_error("cocycle: missing 'word' field");
    return cfg;
}

inline std::string canonical_cocycle_text(const CocycleConfig& cfg) {
    std::ostringstream os;
    os << "qsc-cocycle " << kFormatVersion << "\n";
    os << "type " << cfg.type.str() << "\n";
    os << "word";
    for (int i : cfg.word) os << ' ' << i;
    os << "\n";
    if (!cfg.params.empty()) {
        os << "params";
        for (const std::string& p : cfg.params) os << ' ' << p;
        os << "\n";
    }
    auto entries = cfg.entries;
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
    });
    for (const auto& [i, j, v] : entries) {
        os << "r " << i << ' ' << j << " =";
        for (const Int& x : v) os << ' ' << x;
        os << "\n";
    }
    for (const auto& v : cfg.relations) {
        os << "rel";
        for (const Int& x : v) os << ' ' << x;
        os << "\n";
    }
    return os.str();
}

// Builds the bicharacter over the support of the run word (the config support
// must be contained in it) together with the relations lattice.
inline std::pair<Bicharacter, RelationsLattice> realize_cocycle(const CocycleConfig& cfg,
                                                                const RootSystem& rs,
                                                                const WeylElt& run_w) {
    if (rs.type().str() != cfg.type.str())
        throw std::runtime_error("cocycle: type " + cfg.type.str() + " does not match run type " +
                                 rs.type().str());
    check_reduced(rs, cfg.word);
    std::set<int> cfg_sup;
    for (int i : cfg.word) cfg_sup.insert(i);
    std::set<int> run_sup = support(run_w);
    for (int i : cfg_sup)
        if (!run_sup.count(i))
            throw std::runtime_error("cocycle: support contains " + std::to_string(i) +
                                     " which is outside the support of w");
    Bicharacter r(rs, std::vector<int>(run_sup.begin(), run_sup.end()), cfg.nparams());
    for (const auto& [i, j, v] : cfg.entries) {
        if (!cfg_sup.count(i) || !cfg_sup.count(j))
            throw std::runtime_error("cocycle: entry indices outside the declared word support");
        r.set_entry(i, j, ExpVec(v));
    }
    std::vector<ExpVec> rels;
    for (const auto& v : cfg.relations) rels.emplace_back(v);
    return {r, RelationsLattice(cfg.nparams(), rels)};
}

// ---------------------------------------------------------------- reports ---

struct RunMeta {
    std::string type_str;
    std::vector<int> word;
    std::vector<std::string> param_names;  // including the leading q
};

inline std::string diagram_str(const std::vector<int>& positions) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) os << ',';
        os << positions[i];
    }
    os << ']';
    return os.str();
}

inline std::vector<int> parse_diagram_str(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::runtime_error("bad diagram '" + s + "'");
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return out;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

inline std::string join_ints(const std::vector<Int>& v, char sep = ',') {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

namespace detail {

inline void machine_preamble(std::ostringstream& os, const std::string& command, const RunMeta& meta) {
    os << "qsc-report\t" << kFormatVersion << "\n";
    os << "command\t" << command << "\n";
    os << "type\t" << meta.type_str << "\n";
    os << "word\t" << word_label(meta.word) << "\n";
    os << "params\t";
    for (std::size_t i = 0; i < meta.param_names.size(); ++i) {
        if (i) os << ' ';
        os << meta.param_names[i];
    }
    os << "\n";
}

}  // namespace detail

inline std::string strata_machine_text(const RunMeta& meta, const std::vector<StratumReport>& reports) {
    std::ostringstream os;
    detail::machine_preamble(os, "strata", meta);
    for (const StratumReport& rep : reports) {
        os << "stratum\t" << word_label(rep.y_word) << '\t' << diagram_str(rep.diagram.positions)
           << '\t' << rep.dim << '\t' << rep.height << '\t' << rep.gk_codim << '\t';
        for (std::size_t i = 0; i < rep.closure_down.size(); ++i) {
            if (i) os << ';';
            os << rep.closure_down[i];
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

struct StrataDoc {
    RunMeta meta;
    std::vector<StratumReport> reports;
};

inline StrataDoc parse_strata_machine(const std::string& text) {
    StrataDoc doc;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool ended = false;
    auto fields = [](const std::string& l) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : l) {
            if (c == '\t') {
                out.push_back(cur);
                cur.clear();
            } else
                cur.push_back(c);
        }
        out.push_back(cur);
        return out;
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f = fields(line);
        const std::string& key = f[0];
        if (key == "qsc-report") {
            if (f.size() != 2 || f[1] != kFormatVersion)
                throw std::runtime_error("report:" + std::to_string(lineno) + ": bad version");
        } else if (key == "command") {
            if (f.size() != 2 || f[1] != "strata")
                throw std::runtime_error("report:" + std::to_string(lineno) + ": not a strata report");
        } else if (key == "type") {
            doc.meta.type_str = f.at(1);
        } else if (key == "word") {
            doc.meta.word = parse_word_label(f.at(1));
        } else if (key == "params") {
            std::istringstream ps(f.at(1));
            std::string tok;
            while (ps >> tok) doc.meta.param_names.push_back(tok);
        } else if (key == "stratum") {
            if (f.size() != 7)
                throw std::runtime_error("report:" + std::to_string(lineno) + ": stratum needs 7 fields");
            StratumReport rep;
            rep.y_word = parse_word_label(f[1]);
            rep.diagram.word = doc.meta.word;
            rep.diagram.positions = parse_diagram_str(f[2]);
            rep.dim = static_cast<std::size_t>(std::stoul(f[3]));
            rep.height = static_cast<std::size_t>(std::stoul(f[4]));
            rep.gk_codim = static_cast<std::size_t>(std::stoul(f[5]));
            if (!f[6].empty()) {
                std::istringstream cs(f[6]);
                std::string tok;
                while (std::getline(cs, tok, ';')) rep.closure_down.push_back(tok);
            }
            doc.reports.push_back(std::move(rep));
        } else if (key == "end") {
            ended = true;
        } else {
            throw std::runtime_error("report:" + std::to_string(lineno) + ": unknown record '" + key + "'");
        }
    }
    if (!ended) throw std::runtime_error("report: missing end record");
    return doc;
}

inline std::string strata_table_text(const RunMeta& meta, const std::vector<StratumReport>& reports) {
    std::ostringstream os;
    os << "strata  type " << meta.type_str << "  w = " << word_label(meta.word) << "  (length "
       << meta.word.size() << ")\n";
    os << "y\tD\tdim\theight\tgkcodim\n";
    for (const StratumReport& rep : reports)
        os << word_label(rep.y_word) << '\t' << diagram_str(rep.diagram.positions) << '\t' << rep.dim
           << '\t' << rep.height << '\t' << rep.gk_codim << "\n";
    return os.str();
}

// cover edges y' -> y of the closure order
inline std::string closure_dot_text(const WeylElt& w) {
    IntervalPoset poset = IntervalPoset::of(w);
    std::ostringstream os;
    os << "digraph closure {\n";
    for (const WeylElt& x : poset.elems) os << "  \"" << word_label(x.reduced_word()) << "\";\n";
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t j = 0; j < poset.size(); ++j)
            if (poset.is_cover(i, j))
                os << "  \"" << word_label(poset.elems[i].reduced_word()) << "\" -> \""
                   << word_label(poset.elems[j].reduced_word()) << "\";\n";
    os << "}\n";
    return os.str();
}

inline std::string roots_machine_text(const RunMeta& meta, const RootSystem& rs) {
    std::ostringstream os;
    detail::machine_preamble(os, "roots", meta);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        std::vector<Int> row;
        for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan_matrix().at(i, j));
        os << "cartan\t" << i + 1 << '\t' << join_ints(row) << "\n";
    }
    os << "sym\t" << join_ints(rs.symmetrizers()) << "\n";
    for (const RootVec& beta : rs.positive_roots()) os << "posroot\t" << join_ints(beta.c) << "\n";
    os << "end\n";
    return os.str();
}

inline std::string roots_table_text(const RootSystem& rs) {
    std::ostringstream os;
    os << "root system " << rs.type().str() << "  (" << rs.positive_roots().size()
       << " positive roots)\n";
    os << "cartan matrix (rows):\n";
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < rs.rank(); ++j) {
            if (j) os << ' ';
            os << rs.cartan_matrix().at(i, j);
        }
        os << "\n";
    }
    os << "symmetrizers d:";
    for (const Int& d : rs.symmetrizers()) os << ' ' << d;
    os << "\npositive roots (simple-root coordinates):\n";
    for (const RootVec& beta : rs.positive_roots()) os << "  " << root_str(beta) << "\n";
    return os.str();
}

inline std::string weyl_machine_text(const RunMeta& meta, const WeylElt& w) {
    std::set<WeylElt> interval = lower_interval(w);
    std::vector<WeylElt> elems(interval.begin(), interval.end());
    std::sort(elems.begin(), elems.end(), [](const WeylElt& a, const WeylElt& b) {
        return report_order(a.reduced_word(), b.reduced_word());
    });
    std::ostringstream os;
    detail::machine_preamble(os, "weyl", meta);
    for (const WeylElt& x : elems) {
        std::set<int> sup = support(x);
        std::vector<Int> sv(sup.begin(), sup.end());
        os << "elt\t" << word_label(x.reduced_word()) << '\t' << x.length() << '\t' << join_ints(sv)
           << "\n";
    }
    os << "end\n";
    return os.str();
}

inline std::string weyl_table_text(const RunMeta& meta, const WeylElt& w) {
    std::set<WeylElt> interval = lower_interval(w);
    std::vector<WeylElt> elems(interval.begin(), interval.end());
    std::sort(elems.begin(), elems.end(), [](const WeylElt& a, const WeylElt& b) {
        return report_order(a.reduced_word(), b.reduced_word());
    });
    std::ostringstream os;
    os << "lower interval of w = " << word_label(meta.word) << "  (" << elems.size()
       << " elements)\ny\tlength\tsupport\n";
    for (const WeylElt& x : elems) {
        std::set<int> sup = support(x);
        std::vector<Int> sv(sup.begin(), sup.end());
        os << word_label(x.reduced_word()) << '\t' << x.length() << '\t' << join_ints(sv) << "\n";
    }
    return os.str();
}

inline std::string cauchon_machine_text(const RunMeta& meta, const RootSystem& rs,
                                        const std::vector<WeylElt>& ys) {
    std::ostringstream os;
    detail::machine_preamble(os, "cauchon", meta);
    for (const WeylElt& y : ys) {
        CauchonDiagram d = cauchon_diagram_for(rs, meta.word, y);
        IntLattice q = qyw_lattice(rs, meta.word, d);
        os << "cauchon\t" << word_label(y.reduced_word()) << '\t' << diagram_str(d.positions) << '\t';
        for (std::size_t i = 0; i < q.rank(); ++i) {
            if (i) os << ';';
            os << join_ints(q.basis().row(i));
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

// monomials as "coeff-exps | gen-exps", e.g. "0,1 | 1,-2,0"
inline std::string monomial_str(const TorusMonomial& m) {
    return join_ints(m.coeff.e) + " | " + join_ints(m.exps);
}

inline TorusMonomial parse_monomial_str(const std::string& s) {
    std::size_t bar = s.find(" | ");
    if (bar == std::string::npos) throw std::runtime_error("bad monomial '" + s + "'");
    auto ints = [](const std::string& part) {
        std::vector<Int> out;
        std::istringstream is(part);
        std::string tok;
        while (std::getline(is, tok, ',')) out.emplace_back(tok);
        return out;
    };
    TorusMonomial m;
    m.coeff = ExpVec(ints(s.substr(0, bar)));
    m.exps = ints(s.substr(bar + 3));
    return m;
}

inline std::string cauchon_table_text(const RunMeta& meta, const RootSystem& rs,
                                      const std::vector<WeylElt>& ys) {
    std::ostringstream os;
    os << "cauchon diagrams  type " << meta.type_str << "  w = " << word_label(meta.word) << "\n";
    for (const WeylElt& y : ys) {
        CauchonDiagram d = cauchon_diagram_for(rs, meta.word, y);
        IntLattice q = qyw_lattice(rs, meta.word, d);
        os << "y = " << word_label(y.reduced_word()) << "  D=" << diagram_str(d.positions)
           << "  rank " << q.rank() << "  basis";
        for (std::size_t i = 0; i < q.rank(); ++i) os << ' ' << root_str(RootVec(q.basis().row(i)));
        os << "\n";
    }
    return os.str();
}

inline std::string torus_table_text(const RunMeta& meta, const RootSystem& rs,
                                    const std::vector<WeylElt>& ys, const Bicharacter& r,
                                    const RelationsLattice& rel) {
    std::ostringstream os;
    os << "quantum tori  type " << meta.type_str << "  w = " << word_label(meta.word) << "\n";
    for (const WeylElt& y : ys) {
        CauchonDiagram d = cauchon_diagram_for(rs, meta.word, y);
        QTorus t = build_torus(rs, meta.word, d, r);
        os << "y = " << word_label(y.reduced_word()) << "  D=" << diagram_str(d.positions)
           << "  generators " << t.generators() << "  center rank "
           << center_lattice(t, rel).rank() << "\n";
    }
    return os.str();
}

inline std::string torus_machine_text(const RunMeta& meta, const RootSystem& rs,
                                      const std::vector<WeylElt>& ys, const Bicharacter& r,
                                      const RelationsLattice& rel) {
    std::ostringstream os;
    detail::machine_preamble(os, "torus", meta);
    for (const WeylElt& y : ys) {
        CauchonDiagram d = cauchon_diagram_for(rs, meta.word, y);
        QTorus t = build_torus(rs, meta.word, d, r);
        IntLattice center = center_lattice(t, rel);
        os << "torus\t" << word_label(y.reduced_word()) << '\t' << t.generators() << '\t'
           << center.rank() << "\n";
        for (std::size_t a = 0; a < t.generators(); ++a)
            os << "gen\t" << word_label(y.reduced_word()) << '\t' << a + 1 << '\t' << t.position(a)
               << '\t' << join_ints(t.weight(a).c) << "\n";
        for (std::size_t a = 0; a < t.generators(); ++a)
            for (std::size_t b = a + 1; b < t.generators(); ++b)
                os << "comm\t" << word_label(y.reduced_word()) << '\t' << a + 1 << '\t' << b + 1
                   << '\t' << join_ints(t.entry(a, b).e) << "\n";
    }
    os << "end\n";
    return os.str();
}

inline std::string check_machine_text(const RunMeta& meta, const std::vector<CheckResult>& results) {
    std::ostringstream os;
    detail::machine_preamble(os, "check", meta);
    for (const CheckResult& c : results)
        os << "check\t" << c.name << '\t' << (c.pass ? "pass" : "fail") << '\t' << c.witness << "\n";
    os << "end\n";
    return os.str();
}

}  // namespace qsc

// qsc command line: exact computations for quantum Schubert cell spectra.
//
// Subcommands: roots, weyl, cauchon, strata, torus, check.  Output formats:
// table (default), machine (tab-separated, stable), dot (closure digraph,
// strata only).  See README for the formats and the cocycle file grammar.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qsc/textio.hpp"

namespace {

struct CommonOpts {
    std::string type_str;
    std::string word_str;
    bool use_w0 = false;
    std::string cocycle_path;
    std::string y_filter;
    std::string format = "table";
    std::string out_path;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_word) {
    cmd->add_option("--type", o.type_str, "Lie type, e.g. A2, B3, F4")->required();
    if (needs_word) {
        cmd->add_option("--word", o.word_str, "reduced word of w, e.g. \"1 2 1\"");
        cmd->add_flag("--w0", o.use_w0, "use the longest element");
        cmd->add_option("--cocycle", o.cocycle_path, "cocycle configuration file");
        cmd->add_option("--y", o.y_filter, "restrict to one y given by a word");
        cmd->add_option("--jobs", o.jobs, "parallel workers for per-y computations")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_option("--format", o.format, "table | machine | dot")
        ->check(CLI::IsMember({"table", "machine", "dot"}));
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + o.out_path + "'");
    out << text;
}

qsc::WeylElt resolve_w(const qsc::RootSystem& rs, const CommonOpts& o) {
    if (o.use_w0) {
        if (!o.word_str.empty()) throw std::runtime_error("give either --word or --w0, not both");
        return qsc::longest_element(rs);
    }
    if (o.word_str.empty()) throw std::runtime_error("missing --word (or --w0)");
    std::vector<int> word = qsc::parse_word_label(o.word_str);
    for (int i : word)
        if (i < 1 || static_cast<std::size_t>(i) > rs.rank())
            throw std::runtime_error("word letter " + std::to_string(i) + " out of range for " +
                                     rs.type().str());
    qsc::check_reduced(rs, word);
    return qsc::WeylElt::from_word(rs, word);
}

struct RunState {
    qsc::RunMeta meta;
    qsc::WeylElt w;
    qsc::Bicharacter r;
    qsc::RelationsLattice rel;
    std::vector<qsc::WeylElt> ys;  // filtered or full interval, report order
};

RunState resolve_run(const qsc::RootSystem& rs, const CommonOpts& o) {
    qsc::WeylElt w = resolve_w(rs, o);
    std::vector<int> word = w.reduced_word();

    std::set<int> sup = qsc::support(w);
    qsc::Bicharacter r =
        qsc::Bicharacter::trivial(rs, std::vector<int>(sup.begin(), sup.end()));
    qsc::RelationsLattice rel(1);
    std::vector<std::string> names{"q"};
    if (!o.cocycle_path.empty()) {
        std::ifstream in(o.cocycle_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open cocycle file '" + o.cocycle_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        qsc::CocycleConfig cfg = qsc::parse_cocycle_text(buf.str());
        auto realized = qsc::realize_cocycle(cfg, rs, w);
        r = realized.first;
        rel = realized.second;
        for (const std::string& p : cfg.params) names.push_back(p);
    }

    std::vector<qsc::WeylElt> ys;
    if (!o.y_filter.empty()) {
        std::vector<int> yw = qsc::parse_word_label(o.y_filter);
        qsc::check_reduced(rs, yw);
        qsc::WeylElt y = qsc::WeylElt::from_word(rs, yw);
        if (!qsc::bruhat_leq(y, w)) throw std::runtime_error("--y is not below w in Bruhat order");
        ys.push_back(y);
    } else {
        std::set<qsc::WeylElt> interval = qsc::lower_interval(w);
        ys.assign(interval.begin(), interval.end());
        std::sort(ys.begin(), ys.end(), [](const qsc::WeylElt& a, const qsc::WeylElt& b) {
            return qsc::report_order(a.reduced_word(), b.reduced_word());
        });
    }
    return RunState{qsc::RunMeta{rs.type().str(), word, names}, w, r, rel, ys};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra, strata dimensions and catenarity data of quantum Schubert cells"};
    app.require_subcommand(1);

    CommonOpts roots_o, weyl_o, cauchon_o, strata_o, torus_o, check_o;
    CLI::App* roots_cmd = app.add_subcommand("roots", "root system tables");
    add_common(roots_cmd, roots_o, false);
    CLI::App* weyl_cmd = app.add_subcommand("weyl", "lengths, words and the lower Bruhat interval");
    add_common(weyl_cmd, weyl_o, true);
    CLI::App* cauchon_cmd = app.add_subcommand("cauchon", "diagram and support lattice per y");
    add_common(cauchon_cmd, cauchon_o, true);
    CLI::App* strata_cmd = app.add_subcommand("strata", "stratum dimensions, heights and closures");
    add_common(strata_cmd, strata_o, true);
    CLI::App* torus_cmd = app.add_subcommand("torus", "quantum torus commutation data per y");
    add_common(torus_cmd, torus_o, true);
    CLI::App* check_cmd = app.add_subcommand("check", "run the invariant suite for the given w");
    add_common(check_cmd, check_o, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (roots_cmd->parsed()) {
            qsc::RootSystem rs(qsc::LieType::parse(roots_o.type_str));
            qsc::RunMeta meta{rs.type().str(), {}, {"q"}};
            emit(roots_o, roots_o.format == "machine" ? qsc::roots_machine_text(meta, rs)
                                                      : qsc::roots_table_text(rs));
        } else if (weyl_cmd->parsed()) {
            qsc::RootSystem rs(qsc::LieType::parse(weyl_o.type_str));
            RunState st = resolve_run(rs, weyl_o);
            emit(weyl_o, weyl_o.format == "machine" ? qsc::weyl_machine_text(st.meta, st.w)
                                                    : qsc::weyl_table_text(st.meta, st.w));
        } else if (cauchon_cmd->parsed()) {
            qsc::RootSystem rs(qsc::LieType::parse(cauchon_o.type_str));
            RunState st = resolve_run(rs, cauchon_o);
            emit(cauchon_o, cauchon_o.format == "machine"
                                ? qsc::cauchon_machine_text(st.meta, rs, st.ys)
                                : qsc::cauchon_table_text(st.meta, rs, st.ys));
        } else if (strata_cmd->parsed()) {
            qsc::RootSystem rs(qsc::LieType::parse(strata_o.type_str));
            RunState st = resolve_run(rs, strata_o);
            std::vector<qsc::StratumReport> reports =
                qsc::stratification_report(st.w, st.r, st.rel, strata_o.jobs);
            if (!strata_o.y_filter.empty()) {
                std::string label = qsc::word_label(st.ys.front().reduced_word());
                std::vector<qsc::StratumReport> filtered;
                for (auto& rep : reports)
                    if (qsc::word_label(rep.y_word) == label) filtered.push_back(rep);
                reports = filtered;
            }
            if (strata_o.format == "machine")
                emit(strata_o, qsc::strata_machine_text(st.meta, reports));
            else if (strata_o.format == "dot")
                emit(strata_o, qsc::closure_dot_text(st.w));
            else
                emit(strata_o, qsc::strata_table_text(st.meta, reports));
        } else if (torus_cmd->parsed()) {
            qsc::RootSystem rs(qsc::LieType::parse(torus_o.type_str));
            RunState st = resolve_run(rs, torus_o);
            emit(torus_o, torus_o.format == "machine"
                              ? qsc::torus_machine_text(st.meta, rs, st.ys, st.r, st.rel)
                              : qsc::torus_table_text(st.meta, rs, st.ys, st.r, st.rel));
        } else if (check_cmd->parsed()) {
            qsc::RootSystem rs(qsc::LieType::parse(check_o.type_str));
            RunState st = resolve_run(rs, check_o);
            std::vector<qsc::CheckResult> results = qsc::invariant_checks(st.w, st.r, st.rel);
            bool all_pass = true;
            for (const qsc::CheckResult& c : results) all_pass = all_pass && c.pass;
            emit(check_o, qsc::check_machine_text(st.meta, results));
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "qsc: error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

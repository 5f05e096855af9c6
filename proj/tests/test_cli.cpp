#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <random>
#include <fstream>

#include "qsc/textio.hpp"

#include "test_support.hpp"

using namespace qsc;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(QSC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return CliRun{WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kA1Golden =
    "qsc-report\t1\n"
    "command\tstrata\n"
    "type\tA1\n"
    "word\t1\n"
    "params\tq\n"
    "stratum\te\t[]\t1\t0\t1\te\n"
    "stratum\t1\t[1]\t0\t1\t0\te;1\n"
    "end\n";

const std::string kA2Golden =
    "qsc-report\t1\n"
    "command\tstrata\n"
    "type\tA2\n"
    "word\t1 2 1\n"
    "params\tq\n"
    "stratum\te\t[]\t1\t0\t3\te\n"
    "stratum\t1\t[1]\t0\t1\t2\te;1\n"
    "stratum\t2\t[2]\t0\t1\t2\te;2\n"
    "stratum\t1 2\t[1,2]\t1\t2\t1\te;1;2;1 2\n"
    "stratum\t2 1\t[2,3]\t1\t2\t1\te;1;2;2 1\n"
    "stratum\t1 2 1\t[1,2,3]\t0\t3\t0\te;1;2;1 2;2 1;1 2 1\n"
    "end\n";

}  // namespace

TEST_CASE("cocycle files parse and serialize canonically") {
    std::string text =
        "qsc-cocycle 1\n"
        "type A2\n"
        "word 1 2 1\n"
        "params p\n"
        "r 1 2 = 0 1\n"
        "rel 0 2\n";
    CocycleConfig cfg = parse_cocycle_text(text);
    REQUIRE(cfg.type.str() == "A2");
    REQUIRE(cfg.word == std::vector<int>{1, 2, 1});
    REQUIRE(cfg.params == std::vector<std::string>{"p"});
    REQUIRE(cfg.entries.size() == 1);
    REQUIRE(cfg.relations.size() == 1);
    REQUIRE(canonical_cocycle_text(cfg) == text);  // canonical input is a fixed point

    SECTION("comments and blank lines are ignored") {
        CocycleConfig cfg2 = parse_cocycle_text("# hello\n\n" + text);
        REQUIRE(canonical_cocycle_text(cfg2) == text);
    }
    SECTION("diagnostics carry line numbers") {
        REQUIRE_THROWS_WITH(parse_cocycle_text("qsc-cocycle 1\ntype A2\nword 9\n"),
                            Catch::Matchers::ContainsSubstring("cocycle:3"));
        REQUIRE_THROWS_WITH(parse_cocycle_text("nonsense\n"),
                            Catch::Matchers::ContainsSubstring("cocycle:1"));
        REQUIRE_THROWS_WITH(parse_cocycle_text(text + "rel 1 0\n"),
                            Catch::Matchers::ContainsSubstring("q-exponent 0"));
        REQUIRE_THROWS_WITH(parse_cocycle_text(text + "r 2 1 = 0 0\n"),
                            Catch::Matchers::ContainsSubstring("i < j"));
    }
    SECTION("realization validates type and support") {
        RootSystem a2(LieType::parse("A2"));
        WeylElt w0 = longest_element(a2);
        auto [r, rel] = realize_cocycle(cfg, a2, w0);
        REQUIRE(r.nparams() == 2);
        REQUIRE(r.entry(1, 2) == ExpVec(testsup::vec({0, 1})));
        REQUIRE(r.entry(2, 1) == ExpVec(testsup::vec({0, -1})));
        REQUIRE_FALSE(rel.is_trivial());

        RootSystem a3(LieType::parse("A3"));
        REQUIRE_THROWS_WITH(realize_cocycle(cfg, a3, longest_element(a3)),
                            Catch::Matchers::ContainsSubstring("does not match"));
        // support of the run word must contain the cocycle support
        WeylElt small = WeylElt::simple(a2, 1);
        REQUIRE_THROWS_WITH(realize_cocycle(cfg, a2, small),
                            Catch::Matchers::ContainsSubstring("outside the support"));
    }
    SECTION("fixture files parse") {
        CocycleConfig fix = parse_cocycle_text(
            read_file(std::string(QSC_FIXTURE_DIR) + "/a2_order_two_counterexample.cocycle"));
        REQUIRE(fix.word == std::vector<int>{1, 2});
        REQUIRE(fix.relations.size() == 1);
    }
}

TEST_CASE("parsers reject mutated input without misbehaving", "[property]") {
    std::string cocycle =
        "qsc-cocycle 1\ntype A2\nword 1 2 1\nparams p\nr 1 2 = 0 1\nrel 0 2\n";
    std::string report = kA2Golden;
    std::mt19937_64 gen(1337);
    auto mutate = [&gen](std::string s) {
        std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
        std::uniform_int_distribution<int> byte(0, 255);
        for (int k = 0, edits = 1 + static_cast<int>(gen() % 4); k < edits; ++k) {
            switch (gen() % 3) {
                case 0: s[pos(gen)] = static_cast<char>(byte(gen)); break;
                case 1: s.insert(pos(gen), 1, static_cast<char>(byte(gen))); break;
                default: s.erase(pos(gen), 1);
            }
            if (s.empty()) s = "x";
        }
        return s;
    };
    for (int iter = 0; iter < 500; ++iter) {
        try {
            (void)parse_cocycle_text(mutate(cocycle));
        } catch (const std::exception&) {
        }
        try {
            (void)parse_strata_machine(mutate(report));
        } catch (const std::exception&) {
        }
    }
    SUCCEED("no crashes on 1000 mutated documents");
}

TEST_CASE("monomial serialization round trips") {
    TorusMonomial m;
    m.coeff = ExpVec(testsup::vec({0, 1}));
    m.exps = testsup::vec({1, -2, 0});
    REQUIRE(monomial_str(m) == "0,1 | 1,-2,0");
    REQUIRE(parse_monomial_str(monomial_str(m)) == m);
}

TEST_CASE("machine strata reports round trip") {
    RootSystem a2(LieType::parse("A2"));
    WeylElt w0 = longest_element(a2);
    Bicharacter r = Bicharacter::trivial(a2, {1, 2});
    RelationsLattice rel(1);
    std::vector<StratumReport> reports = stratification_report(w0, r, rel);
    RunMeta meta{"A2", w0.reduced_word(), {"q"}};
    std::string text = strata_machine_text(meta, reports);
    REQUIRE(text == kA2Golden);

    StrataDoc doc = parse_strata_machine(text);
    REQUIRE(doc.meta.type_str == "A2");
    REQUIRE(doc.meta.word == w0.reduced_word());
    REQUIRE(doc.reports.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        REQUIRE(doc.reports[i].y_word == reports[i].y_word);
        REQUIRE(doc.reports[i].diagram.positions == reports[i].diagram.positions);
        REQUIRE(doc.reports[i].dim == reports[i].dim);
        REQUIRE(doc.reports[i].height == reports[i].height);
        REQUIRE(doc.reports[i].gk_codim == reports[i].gk_codim);
        REQUIRE(doc.reports[i].closure_down == reports[i].closure_down);
    }
}

TEST_CASE("cli subcommands") {
    SECTION("strata machine output matches the golden bytes") {
        CliRun a1 = run_cli("strata --type A1 --word \"1\" --format machine");
        REQUIRE(a1.exit_code == 0);
        REQUIRE(a1.out == kA1Golden);
        CliRun a2 = run_cli("strata --type A2 --word \"1 2 1\" --format machine");
        REQUIRE(a2.exit_code == 0);
        REQUIRE(a2.out == kA2Golden);
        CliRun again = run_cli("strata --type A2 --word \"1 2 1\" --format machine");
        REQUIRE(again.out == a2.out);  // byte-identical across runs
        CliRun w0 = run_cli("strata --type A2 --w0 --format machine");
        REQUIRE(w0.out == a2.out);
    }
    SECTION("roots") {
        CliRun g2 = run_cli("roots --type G2");
        REQUIRE(g2.exit_code == 0);
        REQUIRE(g2.out.find("6 positive roots") != std::string::npos);
        CliRun machine = run_cli("roots --type G2 --format machine");
        std::size_t count = 0, pos = 0;
        while ((pos = machine.out.find("posroot\t", pos)) != std::string::npos) {
            ++count;
            pos += 8;
        }
        REQUIRE(count == 6);
    }
    SECTION("weyl interval listing") {
        CliRun b2 = run_cli("weyl --type B2 --w0 --format machine");
        REQUIRE(b2.exit_code == 0);
        std::size_t count = 0, pos = 0;
        while ((pos = b2.out.find("elt\t", pos)) != std::string::npos) {
            ++count;
            pos += 4;
        }
        REQUIRE(count == 8);
    }
    SECTION("cauchon with a y filter") {
        CliRun one = run_cli("cauchon --type A2 --word \"1 2 1\" --y \"2\" --format machine");
        REQUIRE(one.exit_code == 0);
        REQUIRE(one.out.find("cauchon\t2\t[2]\t") != std::string::npos);
        CliRun bad = run_cli("cauchon --type A2 --word \"1 2\" --y \"2 1\"");
        REQUIRE(bad.exit_code == 2);
    }
    SECTION("cauchon table format spells the diagram") {
        CliRun tab = run_cli("cauchon --type A2 --word \"1 2 1\" --y \"2\"");
        REQUIRE(tab.exit_code == 0);
        REQUIRE(tab.out.find("D=[2]") != std::string::npos);
    }
    SECTION("torus shows commutation data") {
        CliRun t = run_cli("torus --type A2 --word \"1 2 1\" --y e --format machine");
        REQUIRE(t.exit_code == 0);
        REQUIRE(t.out.find("torus\te\t3\t1\n") != std::string::npos);
        REQUIRE(t.out.find("comm\te\t1\t2\t1\n") != std::string::npos);
    }
    SECTION("check passes on A2 and B2") {
        CliRun a2 = run_cli("check --type A2 --w0");
        REQUIRE(a2.exit_code == 0);
        REQUIRE(a2.out.find("check\tformula-agreement\tpass") != std::string::npos);
        REQUIRE(a2.out.find("fail") == std::string::npos);
    }
    SECTION("dot output lists the cover edges") {
        CliRun dot = run_cli("strata --type A2 --word \"1 2 1\" --format dot");
        REQUIRE(dot.exit_code == 0);
        REQUIRE(dot.out.find("digraph closure {") == 0);
        REQUIRE(dot.out.find("\"e\" -> \"1\";") != std::string::npos);
        REQUIRE(dot.out.find("\"1 2\" -> \"1 2 1\";") != std::string::npos);
        REQUIRE(dot.out.find("\"e\" -> \"1 2\";") == std::string::npos);  // not a cover
    }
    SECTION("--out writes the same bytes to a file") {
        std::string path = "/tmp/qsc_out_test.txt";
        std::remove(path.c_str());
        CliRun direct = run_cli("strata --type A1 --word \"1\" --format machine");
        CliRun filed = run_cli("strata --type A1 --word \"1\" --format machine --out " + path);
        REQUIRE(filed.exit_code == 0);
        REQUIRE(filed.out.empty());
        REQUIRE(read_file(path) == direct.out);
        std::remove(path.c_str());
    }
    SECTION("errors exit with status 2") {
        REQUIRE(run_cli("strata --type A2 --word \"1 1\"").exit_code == 2);  // not reduced
        REQUIRE(run_cli("strata --type D3 --w0").exit_code == 2);
        REQUIRE(run_cli("strata --type A2").exit_code == 2);  // no word
    }
    SECTION("cocycle flag feeds the twist into strata") {
        std::string fixture = std::string(QSC_FIXTURE_DIR) + "/a2_generic.cocycle";
        CliRun run = run_cli("strata --type A2 --word \"1 2\" --cocycle " + fixture +
                             " --format machine");
        REQUIRE(run.exit_code == 0);
        REQUIRE(run.out.find("params\tq p\n") != std::string::npos);
    }
}

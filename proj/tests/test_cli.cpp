#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qrs/expr.hpp"
#include "qrs/verify.hpp"

using namespace qrs;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("expression parsing round trips") {
    Algebra a2(CartanData::make("A2"));
    const char* exprs[] = {
        "f[1]*f[2]*w[1]^2*v[2]^-1*e[1]",
        "1 + (r*s^-1)*f[1]*E[1]",
        "(1/(r-s))*e[1] - e[2]",
        "E[1]*E[2] + E[2]*E[1]",
        "w[1]^-3*v[1]^2",
    };
    for (const char* t : exprs) {
        Element x = parse_element(a2, t);
        CHECK(parse_element(a2, x.str(), x.parent()) == x);
    }
    // juxtaposition works like explicit products
    CHECK(parse_element(a2, "f[1]f[2]") == parse_element(a2, "f[1]*f[2]"));
    // powers of word letters expand
    CHECK(parse_element(a2, "f[1]^3") == parse_element(a2, "f[1]*f[1]*f[1]"));
}

TEST_CASE("parsing matches the rewriting engine") {
    Algebra a1(CartanData::make("A1"));
    Element x = a1.normal_form(parse_element(a1, "E[1]*f[1]", Parent::B));
    CHECK(x == parse_element(a1, "(r*s^-1)*f[1]*E[1] + 1", Parent::B));
    CHECK(parse_element(a1, "w[1]^-1*w[1]") == a1.unit(Parent::U));
}

TEST_CASE("parse errors carry positions") {
    Algebra a1(CartanData::make("A1"));
    try {
        parse_element(a1, "e[1]+");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.pos >= 4);
    }
    CHECK_THROWS_AS(parse_element(a1, "e[2]"), BadIndex);
    CHECK_THROWS_AS(parse_element(a1, "e[1]*P[1]"), IncompatibleParents);
    CHECK_THROWS_AS(parse_element(a1, "f[1]/f[1]"), SyntaxError);
    CHECK_THROWS_AS(parse_element(a1, "E[1]", Parent::U), IllegalLetter);
}

TEST_CASE("parent inference") {
    Algebra a1(CartanData::make("A1"));
    CHECK(parse_element(a1, "e[1]").parent() == Parent::U);
    CHECK(parse_element(a1, "E[1]*f[1]").parent() == Parent::B);
    CHECK(parse_element(a1, "P[1]*e[1]").parent() == Parent::Bbar);
    CHECK(parse_element(a1, "e[1]*E[1]").parent() == Parent::Env);
}

TEST_CASE("config files and lambda parsing") {
    CHECK(parse_lambda("1,-2,0") == std::vector<int>({1, -2, 0}));
    CHECK_THROWS_AS(parse_lambda("1,x"), ConfigError);
    const std::string path = "qrs_test_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment\n type = A2 \nheight=4\nlambda=1,1\n";
    }
    Config cfg = load_config_file(path);
    CHECK(cfg.type == "A2");
    CHECK(cfg.height == 4);
    CHECK(cfg.lambda == std::vector<int>({1, 1}));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config_file("missing_file.cfg"), ConfigError);
    CHECK_THROWS_AS(run_suite("bogus", Config{}), ConfigError);
}

TEST_CASE("reports are byte stable for a fixed config") {
    Config cfg;
    cfg.type = "A1";
    cfg.height = 2;
    Report a = run_suite("relations", cfg);
    Report b = run_suite("relations", cfg);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json() == b.to_json());
    Report c = run_suite("pairing", cfg);
    Report d = run_suite("pairing", cfg);
    CHECK(c.to_json() == d.to_json());
}

TEST_CASE("golden reports for the default configs") {
    const std::string dir = std::string(QRS_SOURCE_DIR) + "/tests/golden/";
    {
        Config cfg;  // defaults: A1, height 3, depth 4
        Report rep = run_suite("relations", cfg);
        CHECK(rep.to_text() == read_file(dir + "relations_A1.txt"));
    }
    {
        Config cfg;
        cfg.type = "A2";
        Report rep = run_suite("casimir", cfg);
        CHECK(rep.to_json() + "\n" == read_file(dir + "casimir_A2.json"));
    }
}

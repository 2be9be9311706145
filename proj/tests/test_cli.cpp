#include "doctest.h"
#include "json.hpp"
#include "qsp/center.hpp"
#include "qsp/cli.hpp"
#include "qsp/parse.hpp"

#include <cstdlib>
#include <sstream>

using namespace qsp;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Scalar q(int e) { return Scalar::q(e); }

}  // namespace

TEST_CASE("parser builds the expected elements") {
    Element B0(Gen::B0), B1(Gen::B1), Bm(Gen::Bm1);
    CHECK(parse_element("B0*B1") == B0 * B1);
    CHECK(parse_element("B-1") == Bm);
    CHECK(parse_element("Bm1 * B1 - q^2*B0") == Bm * B1 - q(2) * B0);
    CHECK(parse_element("[3]") == Element(qint(3)));
    CHECK(parse_element("-(q + q^-1)/2*X") == gen_X() * (-(q(1) + q(-1)) / Scalar(2)));
    CHECK(normal_form(parse_element("K^-1")) == normal_form(gen_Kinv()));
    CHECK(parse_element("Dd^-2") == Element(Gen::DdInv) * Element(Gen::DdInv));
    CHECK(parse_element("i*mu^2") == Element(Scalar::iota() * Scalar::mu(2)));
    CHECK(parse_scalar("(q^2 - 1)/(q - 1)") == q(1) + Scalar(1));
}

TEST_CASE("parser round trip") {
    std::vector<Element> corpus;
    for (const auto& e : central_elements()) corpus.push_back(e.body);
    corpus.push_back(gen_X() * (q(2) + Scalar(3) / q(1) + Scalar::iota()) + Element(Gen::Bm1) * Element(Gen::DdInv));
    corpus.push_back(Element(Scalar::mu() * Scalar(2) / Scalar(3)));
    corpus.push_back(gen_Z() * gen_W() - Element(Gen::D1Inv) * (Scalar(1) / (q(1) + Scalar(1))));
    corpus.push_back(Element());
    for (const auto& e : corpus) {
        CAPTURE(e.str());
        CHECK(parse_element(e.str()) == e);
    }
    for (std::string s : {"B0*B1 + q^-1*B1*B0", "3*Z*W - [2]*Dd", "(q+1)^3*B-1"}) {
        Element e = parse_element(s);
        CHECK(parse_element(e.str()) == e);
    }
}

TEST_CASE("parse errors carry positions") {
    struct Bad {
        const char* text;
        std::size_t pos;
    };
    for (Bad b : {Bad{"B0*", 3}, Bad{"B2", 0}, Bad{"B1^-1", 0}, Bad{"(q", 2}, Bad{"B0/B1", 3}, Bad{"B0 $", 3}}) {
        CAPTURE(b.text);
        try {
            parse_element(b.text);
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.pos() == b.pos);
        }
    }
    CHECK_THROWS_AS(parse_scalar("B0"), ParseError);
    CHECK_THROWS_AS(parse_element("1/0"), ParseError);
}

TEST_CASE("mu and zeta specs") {
    CHECK(parse_mu_spec("q^3") == q(3));
    CHECK(parse_mu_spec("i*q^-2") == Scalar::iota() * q(-2));
    CHECK(parse_mu_spec("mu") == Scalar::mu());
    CHECK_THROWS(parse_mu_spec("q^x"));
    CHECK(parse_zeta_spec("dominant:1", q(2), 3) == dominant_zeta(q(2), 3, 1));
    CHECK(parse_zeta_spec("q + 1", q(2), 3) == q(1) + Scalar(1));
    CHECK_THROWS(parse_zeta_spec("dominant:x", q(2), 3));
}

TEST_CASE("nf and relcheck") {
    Result r = run_cli({"nf", "B0*B1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "q^-1·m(e=1,b=1) + m(x=1)\n");
    Result s = run_cli({"relcheck", "serre"});
    CHECK(s.code == kExitOk);
    CHECK(s.out.find("8 identities, 0 failed") != std::string::npos);
    CHECK(run_cli({"relcheck", "all"}).code == kExitOk);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == kExitUsage);
    CHECK(run_cli({"relcheck", "nope"}).code == kExitUsage);
    Result p = run_cli({"nf", "B0*"});
    CHECK(p.code == kExitUsage);
    CHECK(p.err.find("position 3") != std::string::npos);
    CHECK(run_cli({"tensor", "--d", "9"}).code == kExitUsage);
    CHECK(run_cli({"probe", "--kappa", "2", "--n", "0", "--depth", "0"}).code == kExitUsage);
    CHECK(run_cli({"verma", "--kd", "2", "--k1", "0", "--mu", "q^x", "--zeta", "0"}).code == kExitUsage);
    CHECK(run_cli({"verma", "--kd", "2", "--k1", "0", "--zeta", "B0"}).code == kExitUsage);
    CHECK(run_cli({"cg", "--lambda", "0,1", "--mu", "0,0"}).code == kExitUsage);
}

TEST_CASE("depth bound from the environment") {
    setenv("QSP_MAX_DEPTH", "4", 1);
    CHECK(run_cli({"probe", "--kappa", "2", "--n", "0", "--depth", "5"}).code == kExitUsage);
    CHECK(run_cli({"probe", "--kappa", "2", "--n", "0"}).code == kExitOk);
    setenv("QSP_MAX_DEPTH", "junk", 1);
    CHECK(run_cli({"probe", "--kappa", "2", "--n", "0"}).code == kExitUsage);
    unsetenv("QSP_MAX_DEPTH");
}

TEST_CASE("tensor JSON") {
    Result r = run_cli({"tensor", "--d", "2", "--json"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["summands"].size() == 5);
    long total = 0;
    for (const auto& s : j["summands"]) total += s["dimL"].get<long>() * s["dimSpecht"].get<long>();
    CHECK(total == 16);
    // byte-deterministic
    CHECK(run_cli({"tensor", "--d", "2", "--json"}).out == r.out);
    CHECK(run_cli({"--json", "tensor", "--d", "2"}).out == r.out);
}

TEST_CASE("other subcommands") {
    Result v = run_cli({"verma", "--kd", "2", "--k1", "0", "--n", "1", "--zeta", "dominant:1", "--fd", "--json"});
    REQUIRE(v.code == kExitOk);
    auto vj = nlohmann::json::parse(v.out);
    CHECK(vj.dump().find("\"dim\":4") != std::string::npos);
    CHECK(run_cli({"verma", "--kd", "3", "--k1", "0", "--n", "2", "--zeta", "0", "--table", "2,2"}).code == kExitOk);
    CHECK(run_cli({"verma", "--kd", "2", "--k1", "0", "--n", "1", "--zeta", "dominant:0", "--bgg"}).code == kExitOk);
    Result cg = run_cli({"cg", "--lambda", "1,0", "--mu", "0,0", "--json"});
    CHECK(cg.code == kExitOk);
    CHECK(nlohmann::json::parse(cg.out).is_object());
    Result c = run_cli({"center", "--max-size", "1"});
    CHECK(c.code == kExitOk);
    CHECK(c.out.find("characters pairwise distinct: yes") != std::string::npos);
    Result p = run_cli({"probe", "--kappa", "2", "--n", "0", "--json"});
    CHECK(p.code == kExitOk);
    auto pj = nlohmann::json::parse(p.out);
    CHECK(pj["experimental"] == true);
    CHECK(pj["entries"].size() == 3);
    CHECK(pj["entries"][1]["sl2_character"] == "[3]+[1]");
}

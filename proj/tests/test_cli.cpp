#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "griess/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = griess::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("verify exits 0 on passing checks") {
    const auto chain = run({"verify", "thm2.7", "--spec", "A2"});
    CHECK(chain.code == 0);
    CHECK(contains(chain.out, "7/10"));
    CHECK(contains(chain.out, "PASS thm2.7"));

    CHECK(run({"verify", "lemma2.1", "--spec", "D4"}).code == 0);
    CHECK(run({"verify", "lemma2.1", "D4"}).code == 0);
    CHECK(run({"verify", "thm3.1", "--spec", "A2", "--spec", "D4"}).code == 0);
}

TEST_CASE("verify all on a small system") {
    const auto r = run({"verify", "all", "--spec", "A1", "--max-dim", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS all"));
    CHECK(r.out == run({"verify", "all", "--spec", "A1", "--max-dim", "4"}).out);
}

TEST_CASE("verify JSON agrees with the text verdict") {
    const auto r = run({"verify", "lemma2.4", "--spec", "A3", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["target"] == "lemma2.4");
    CHECK(j["reports"].size() == 1);
    CHECK_FALSE(j["reports"][0].contains("elapsed_seconds"));
    const auto timed = nlohmann::json::parse(run({"verify", "lemma2.4", "--spec", "A3", "--json", "--timing"}).out);
    CHECK(timed["reports"][0].contains("elapsed_seconds"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "lemma9.9", "--spec", "A2"}).code == 2);
    const auto bad = run({"verify", "lemma2.1", "--spec", "B3"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "B3"));
    CHECK(run({"roots", "Q7"}).code == 2);
    CHECK(run({"verify", "formula4.1", "--max-dim", "40"}).code == 2);
    CHECK(run({"decompose", "A2", "--chain", "1,x"}).code == 2);
    CHECK(run({"decompose", "A2", "--chain", "1,1"}).code == 2);
    CHECK(run({"niemeier", "sub", "Leech"}).code == 2);
    CHECK(run({"niemeier", "sub", "A3^7"}).code == 2);
}

TEST_CASE("size guard") {
    const auto refused = run({"verify", "lemma2.1", "--spec", "D24^2"});
    CHECK(refused.code == 2);
    CHECK(contains(refused.err, "--force"));
    CHECK(run({"verify", "lemma2.1", "--spec", "D24^2", "--force"}).code == 0);
}

TEST_CASE("roots") {
    const auto text = run({"roots", "A2*2+D4"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "N = 18"));
    const auto j = nlohmann::json::parse(run({"roots", "E8", "--json"}).out);
    CHECK(j["N"] == 120);
    CHECK(j["positive_roots"].size() == 120);
    CHECK(j["components"][0]["h"] == 30);
}

TEST_CASE("algebra and bplus dumps") {
    const auto j = nlohmann::json::parse(run({"algebra", "A", "A2"}).out);
    CHECK(j["basis"].size() == 6);
    CHECK(nlohmann::json::parse(run({"algebra", "T", "A3"}).out)["basis"].size() == 6);
    CHECK(nlohmann::json::parse(run({"algebra", "B", "D4"}).out)["basis"].size() == 22);
    CHECK(run({"algebra", "X", "D4"}).code == 2);
    const auto b = run({"bplus", "E6"});
    CHECK(b.code == 0);
    CHECK(contains(b.out, "dim 57"));
    CHECK(nlohmann::json::parse(run({"bplus", "A1", "--dump-json"}).out)["basis"].size() == 2);
}

TEST_CASE("decompose") {
    const auto r = run({"decompose", "A2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["charges"] == nlohmann::json::array({"1/2", "7/10", "4/5"}));

    const auto empty = nlohmann::json::parse(run({"decompose", "A2", "--chain", ""}).out);
    CHECK(empty["charges"] == nlohmann::json::array({"2"}));

    const auto d4 = nlohmann::json::parse(run({"decompose", "D4", "--chain", "2,1", "--skip-associativity"}).out);
    CHECK(d4["pass"] == true);
    CHECK(d4["charges"].size() == 3);
    CHECK_FALSE(d4["checks"].contains("associative"));
}

TEST_CASE("niemeier") {
    const auto list = nlohmann::json::parse(run({"niemeier", "list", "--json"}).out);
    CHECK(list.size() == 24);
    CHECK(list[1]["name"] == "A1^24");
    CHECK(list[1]["lemma_4_2_dimension"] == 48);
    CHECK(contains(run({"niemeier", "list"}).out, "D24"));

    const auto sub = run({"niemeier", "sub", "A2^12", "--json"});
    REQUIRE(sub.code == 0);
    const auto j = nlohmann::json::parse(sub.out);
    CHECK(j["dimension"] == 36);
    CHECK(j["associative"] == true);
    CHECK(j["pass"] == true);
}

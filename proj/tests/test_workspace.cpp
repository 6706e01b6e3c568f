#include <catch2/catch_amalgamated.hpp>

#include "descent/suites.hpp"

using namespace descent;

TEST_CASE("built-in workspace validates and resolves") {
    Workspace ws = builtin_workspace();
    REQUIRE(ws.truncation == 4);
    REQUIRE(ws.ring_maps.size() == 7);
    REQUIRE_NOTHROW(ws.ring_map("zz2"));
    REQUIRE_NOTHROW(ws.module("Z+Z/4"));
    REQUIRE_NOTHROW(ws.bundle("fX_bundle"));
    REQUIRE_NOTHROW(ws.cat_functor("pick_d0"));
    REQUIRE_THROWS_AS(ws.module("no-such-module"), error);
}

TEST_CASE("round trip: load(emit(ws)) reproduces the validated content") {
    Workspace ws = builtin_workspace();
    json doc = emit_workspace(ws);
    Workspace back = load_workspace(doc);
    json doc2 = emit_workspace(back);
    REQUIRE(doc == doc2);
    REQUIRE(back.ring_maps.size() == ws.ring_maps.size());
    REQUIRE(back.modules.size() == ws.modules.size());
    // the reloaded data is genuinely validated and usable
    auto r = beck_descent_check(back.ring_map("zz2"), back.module("Z"));
    REQUIRE(r.holds);
}

TEST_CASE("validation failures name the violated invariant") {
    SECTION("non-associative structure constants name the triple") {
        json doc = {
            {"groups", {{"G", {{"generators", 2}, {"relations", json::array()}}}}},
            {"rings",
             {{"R",
               {{"group", "G"},
                // e1*e1 = e0 and e0 acts as unit, but e0*e1 = 0 breaks associativity
                {"mul", {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}},
                {"unit", {1, 0}}}}}}};
        try {
            load_workspace(doc);
            FAIL("expected a validation error");
        } catch (const error& e) {
            std::string what = e.what();
            bool names_structure = what.find("(i,j,k)") != std::string::npos ||
                                   what.find("unit law") != std::string::npos ||
                                   what.find("commutative") != std::string::npos;
            INFO(what);
            REQUIRE(names_structure);
        }
    }
    SECTION("dangling module reference is rejected") {
        json doc = {{"groups", {{"G", {{"generators", 1}, {"relations", json::array()}}}}},
                    {"modules",
                     {{"M", {{"ring", "missing"}, {"group", "G"}, {"actions", json::array({json::array({json::array({1})})})}}}}}};
        REQUIRE_THROWS_WITH(load_workspace(doc), Catch::Matchers::ContainsSubstring("dangling"));
    }
    SECTION("parse errors carry a location") {
        REQUIRE_THROWS_WITH(load_workspace_text("{ not json"),
                            Catch::Matchers::ContainsSubstring("parse error at byte"));
    }
}

TEST_CASE("reports are byte-deterministic given workspace and seed") {
    // two runs of the same suite render identical detail strings
    SuiteResult a = suite_snf_contract(17), b = suite_snf_contract(17);
    REQUIRE(a.passed);
    REQUIRE(a.detail == b.detail);
}

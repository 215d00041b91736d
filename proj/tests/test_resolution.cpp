#include <doctest.h>

#include "ezdop/resolution.hpp"
#include "ezdop/worked_example.hpp"
#include "fixtures.hpp"

using namespace ezdop;

TEST_CASE("minimal resolution of the worked-example module") {
    WorkedExample ex = make_worked_example();
    ResolutionResult res = minimal_resolution(ex.R, ex.M, 3, 10);
    REQUIRE(res.betti.count(1));
    REQUIRE(res.betti.count(2));
    REQUIRE(res.betti.count(3));
    CHECK(res.betti.at(1) == ex.expected_betti.at(1));
    CHECK(res.betti.at(2) == ex.expected_betti.at(2));
    CHECK(res.betti.at(3) == ex.expected_betti.at(3));
    CHECK_FALSE(res.truncated);
    CHECK(res.steps.at(3).certified_degree >= 6);

    // d^2 = 0 and minimality, re-verified through the window checker.
    ResolutionCheck check = verify_resolution_window(*res.complex, ex.M, 7);
    CHECK(check.ok);
}

TEST_CASE("length-one resolution over a polynomial ring") {
    auto B = fixtures::two_var_model(2).B;  // isomorphic to a polynomial ring in v
    auto v = RingElem::parse(B, "v");
    ResolutionResult res = minimal_resolution(B, ModulePresentation::cyclic(B, {v}), 3, 8);
    CHECK(res.betti.at(1) == std::vector<int>{-1});
    CHECK(res.betti.at(2).empty());
    CHECK(res.betti.at(3).empty());
}

TEST_CASE("window verification accepts the reference differentials") {
    WorkedExample ex = make_worked_example();
    ResolutionCheck check = verify_resolution_window(*ex.F, ex.M, 8);
    CHECK(check.ok);
    CHECK(check.squares_zero);
    CHECK(check.minimal);
    CHECK(check.exact);
    CHECK(check.resolves_module);
}

TEST_CASE("window verification flags unit entries") {
    WorkedExample ex = make_worked_example();
    GradedFreeModule f0{ex.R, {0}};
    GradedFreeModule f1{ex.R, {0}};
    std::map<int, FreeModuleMap> diffs;
    diffs.emplace(1, FreeModuleMap(f1, f0, {Polynomial::constant(ex.R->ambient(), Rational(1))},
                                   -1, 0));
    auto F = GradedComplex::create(ex.R, 0, {f0, f1}, std::move(diffs));
    ModulePresentation M = ModulePresentation::cyclic(ex.R, {RingElem::parse(ex.R, "y")});
    ResolutionCheck check = verify_resolution_window(*F, M, 4);
    CHECK_FALSE(check.minimal);
}

TEST_CASE("dropping a column breaks exactness at the right index") {
    WorkedExample ex = make_worked_example();
    const FreeModuleMap& d3 = ex.F->diff(3);
    // Drop the last column of d3.
    std::vector<int> twists = d3.source().twists;
    twists.pop_back();
    GradedFreeModule smaller{ex.R, twists};
    std::vector<Polynomial> entries;
    for (int r = 0; r < d3.target().rank(); ++r)
        for (int c = 0; c + 1 < d3.source().rank(); ++c) entries.push_back(d3.entry(r, c));
    std::map<int, FreeModuleMap> diffs;
    diffs.emplace(1, ex.F->diff(1));
    diffs.emplace(2, ex.F->diff(2));
    diffs.emplace(3, FreeModuleMap(smaller, ex.F->module(2), std::move(entries), -1, 0));
    auto F = GradedComplex::create(ex.R, 0,
                                   {ex.F->module(0), ex.F->module(1), ex.F->module(2), smaller},
                                   std::move(diffs));
    ResolutionCheck check = verify_resolution_window(*F, ex.M, 8);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.exact);
    bool at_index_2 = false;
    for (const std::string& s : check.failures)
        if (s.find("exactness fails at index 2") != std::string::npos) at_index_2 = true;
    CHECK(at_index_2);
}

TEST_CASE("betti numbers are independent of the monomial order") {
    // Same quotient presented with a lex order: matrices may differ, the
    // twist multisets may not.
    auto S_lex = PresentedRing::make(
        {"x", "y", "z", "w", "t"}, {1, 1, 1, 1, 1},
        {"x^4", "y^4", "w^4", "z^4", "x^2*y^2", "y^2*w^2", "z^2*w^2", "x*t", "z*t", "w*t"},
        TermOrder::lex());
    auto f = RingElem::parse(S_lex, "x^2+y^2+z^2+w^2");
    auto R_lex = quotient_by(S_lex, f);
    auto y = RingElem::parse(R_lex, "y");
    ResolutionResult res =
        minimal_resolution(R_lex, ModulePresentation::cyclic(R_lex, {y}), 3, 10);
    WorkedExample ex = make_worked_example();
    CHECK(res.betti.at(1) == ex.expected_betti.at(1));
    CHECK(res.betti.at(2) == ex.expected_betti.at(2));
    CHECK(res.betti.at(3) == ex.expected_betti.at(3));
}

TEST_CASE("a too-small degree bound truncates and says so") {
    WorkedExample ex = make_worked_example();
    ResolutionResult res = minimal_resolution(ex.R, ex.M, 3, 3);
    // Step 2 syzygies live in degrees 3 and 4, beyond the certified range.
    CHECK(res.steps.at(2).certified_degree == 2);
    CHECK(res.betti.at(2).empty());

    // A bound that cannot certify any degree of step 1 reports truncation.
    ResolutionResult res0 = minimal_resolution(ex.R, ex.M, 2, -1);
    CHECK(res0.truncated);
    CHECK_FALSE(res0.warnings.empty());
}

#include <doctest.h>

#include "ezdop/engine.hpp"
#include "ezdop/worked_example.hpp"

using namespace ezdop;

TEST_CASE("the shipped example job parses") {
    JobFile job = parse_jobfile(worked_example_job_text());
    CHECK(job.statements.size() == 14);
    CHECK(std::holds_alternative<RingDecl>(job.statements[0]));
    CHECK(std::holds_alternative<ReproduceCmd>(job.statements.back()));
    const auto& complex = std::get<ComplexDecl>(job.statements[6]);
    CHECK(complex.name == "F");
    CHECK(complex.modules.size() == 4);
    CHECK(complex.maps.size() == 3);
    CHECK(complex.maps[2].second.size() == 4);       // d3 rows
    CHECK(complex.maps[2].second[0].size() == 16);   // d3 columns
}

TEST_CASE("empty input parses to an empty job") {
    CHECK(parse_jobfile("").statements.empty());
    CHECK(parse_jobfile("# only a comment\n\n").statements.empty());
}

TEST_CASE("print/parse round-trip is the identity on the AST") {
    JobFile job = parse_jobfile(worked_example_job_text());
    std::string printed = print_jobfile(job);
    JobFile again = parse_jobfile(printed);
    CHECK(job == again);
    CHECK(print_jobfile(again) == printed);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_jobfile("ring S vars x:1\nelem f in = x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 0);
    }
    CHECK_THROWS_AS(parse_jobfile("resolve R y\n"), ParseError);
    CHECK_THROWS_AS(parse_jobfile("homotopy check phi\n"), ParseError);
    CHECK_THROWS_AS(parse_jobfile("bogus statement\n"), ParseError);
}

TEST_CASE("execution reports definition errors with nonzero exit") {
    // Repeated variable.
    Report r1 = run_job_text("ring S vars x:1, x:1\n");
    CHECK(r1.exit_code == 1);
    CHECK(r1.doc.contains("error"));

    // Undefined references.
    Report r2 = run_job_text("check ezd S f g\n");
    CHECK(r2.exit_code == 1);

    Report r3 = run_job_text("ring A vars u:1, v:1 mod u*v\nann q in A\n");
    CHECK(r3.exit_code == 1);

    // Inhomogeneous relation in graded mode.
    Report r4 = run_job_text("ring A vars u:1, v:1 mod u*v+u\n");
    CHECK(r4.exit_code == 1);
}

TEST_CASE("a small job end to end") {
    const char* text =
        "ring A vars u:1, v:1 mod u*v\n"
        "elem a in A = u\n"
        "elem b in A = v\n"
        "check ezd A a b\n"
        "ann a in A\n"
        "resolve A / a --hmax 2 --dmax 6\n";
    Report rep = run_job_text(text);
    REQUIRE(rep.exit_code == 0);
    const auto& items = rep.doc["items"];
    REQUIRE(items.size() == 3);
    CHECK(items[0]["verdict"] == true);
    CHECK(items[1]["generators"].size() == 1);
    CHECK(items[2]["betti"]["1"] == std::vector<int>{-1});
    CHECK(items[2]["betti"]["2"] == std::vector<int>{-2});  // periodic: u, v alternate
    CHECK(rep.doc["schema"] == "ezdop-report/1");
}

TEST_CASE("verdicts exit zero even when infeasible") {
    // The full worked-example job: homotopy checks return "infeasible" but
    // the run still succeeds.
    std::string text = worked_example_job_text();
    // Strip the trailing reproduce-example (exercised separately; keeps this
    // test fast).
    auto pos = text.find("reproduce-example");
    REQUIRE(pos != std::string::npos);
    text = text.substr(0, pos);
    Report rep = run_job_text(text);
    REQUIRE(rep.exit_code == 0);
    bool has_infeasible = false;
    for (const auto& item : rep.doc["items"])
        if (item.contains("verdict") && item["verdict"] == "infeasible") has_infeasible = true;
    CHECK(has_infeasible);
}

TEST_CASE("complex declarations are validated at execution") {
    const char* text =
        "ring A vars u:1, v:1 mod u*v\n"
        "complex C over A {\n"
        "  module 0 twists [0];\n"
        "  module 1 twists [-1];\n"
        "  module 2 twists [-2];\n"
        "  map d1 = [[u]];\n"
        "  map d2 = [[u]];\n"
        "}\n";
    Report rep = run_job_text(text);
    CHECK(rep.exit_code == 1);  // u*u != 0: not a complex
}

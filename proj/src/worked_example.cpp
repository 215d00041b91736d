#include "ezdop/worked_example.hpp"

namespace ezdop {

namespace {

FreeModuleMap row_map(const GradedFreeModule& src, const GradedFreeModule& tgt,
                      const std::vector<std::vector<const char*>>& rows, int hdeg,
                      int64_t ideg) {
    std::vector<Polynomial> entries;
    entries.reserve(static_cast<size_t>(src.rank()) * tgt.rank());
    for (const auto& row : rows)
        for (const char* s : row) entries.push_back(Polynomial::parse(src.ring->ambient(), s));
    return FreeModuleMap(src, tgt, std::move(entries), hdeg, ideg);
}

}  // namespace

WorkedExample make_worked_example() {
    WorkedExample ex;
    ex.S = PresentedRing::make(
        {"x", "y", "z", "w", "t"}, {1, 1, 1, 1, 1},
        {"x^4", "y^4", "w^4", "z^4", "x^2*y^2", "y^2*w^2", "z^2*w^2", "x*t", "z*t", "w*t"});
    ex.f = RingElem::parse(ex.S, "x^2+y^2+z^2+w^2");
    ex.g = RingElem::parse(ex.S, "x^2+y^2-z^2-w^2");
    ex.R = quotient_by(ex.S, ex.f);
    ex.y = RingElem::parse(ex.R, "y");
    ex.t = RingElem::parse(ex.R, "t");

    GradedFreeModule f0{ex.R, {0}};
    GradedFreeModule f1{ex.R, {-1}};
    GradedFreeModule f2{ex.R, {-3, -4, -4, -4}};
    GradedFreeModule f3{ex.R, {-4, -4, -4, -4, -5, -5, -5, -5, -5, -5,
                               -6, -6, -6, -6, -6, -6}};

    FreeModuleMap d1 = row_map(f1, f0, {{"y"}}, -1, 0);
    FreeModuleMap d2 = row_map(f2, f1, {{"y*t", "y*w^2", "y*z^2", "y^3"}}, -1, 0);
    FreeModuleMap d3 = row_map(
        f3, f2,
        {{"w", "z", "y", "x", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "t", "0", "0", "y", "0", "0", "w^2", "z^2", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "0", "t", "0", "0", "y", "0", "0", "0", "w^2", "0", "z^2", "0"},
         {"0", "0", "0", "0", "0", "0", "t", "0", "0", "y", "0", "0", "0", "w^2", "0", "z^2"}},
        -1, 0);

    std::map<int, FreeModuleMap> diffs;
    diffs.emplace(1, std::move(d1));
    diffs.emplace(2, std::move(d2));
    diffs.emplace(3, std::move(d3));
    ex.F = GradedComplex::create(ex.R, 0, {f0, f1, f2, f3}, std::move(diffs));
    ex.M = ModulePresentation::cyclic(ex.R, {ex.y});

    // Reference operator entries, read over S.
    GradedFreeModule s0{ex.S, f0.twists};
    GradedFreeModule s1{ex.S, f1.twists};
    GradedFreeModule s2{ex.S, f2.twists};
    GradedFreeModule s3{ex.S, f3.twists};
    ex.psi_reference.emplace(
        2, row_map(s2, s0, {{"t", "0", "z^2-x^2+w^2", "0"}}, -2, -2));
    ex.psi_reference.emplace(
        3, row_map(s3, s1,
                   {{"0", "0", "t", "0", "0", "0", "y*t", "0", "z^2-x^2+w^2", "0", "0", "0",
                     "0", "0", "0", "y*z^2-y*x^2+y*w^2"}},
                   -2, -2));
    ex.phi_reference.emplace(
        3, row_map(s3, s0,
                   {{"0", "0", "0", "0", "0", "0", "t", "0", "0", "0", "0", "0", "w^2", "0",
                     "y^2+z^2", "-y^2"}},
                   -3, -4));

    for (const char* s : {"x^2", "y^2", "w^2", "t^2", "x*y", "x*z", "x*w", "y*z", "y*w",
                          "z*w", "y*t"})
        ex.r2_reference_span.push_back(Polynomial::parse(ex.S->ambient(), s));

    ex.expected_betti[1] = {-1};
    ex.expected_betti[2] = {-3, -4, -4, -4};
    ex.expected_betti[3] = {-4, -4, -4, -4, -5, -5, -5, -5, -5, -5, -6, -6, -6, -6, -6, -6};
    return ex;
}

const char* worked_example_job_text() {
    return R"job(# Worked example: exact pair of zero divisors, operators, and nonvanishing.

ring S vars x:1, y:1, z:1, w:1, t:1 mod x^4; y^4; w^4; z^4; x^2*y^2; y^2*w^2; z^2*w^2; x*t; z*t; w*t

elem f in S = x^2+y^2+z^2+w^2
elem g in S = x^2+y^2-z^2-w^2

quotient R = S / f

elem yR in R = y
elem tR in R = t

# Start of the minimal graded free resolution of R/(y).
complex F over R {
  module 0 twists [0];
  module 1 twists [-1];
  module 2 twists [-3, -4, -4, -4];
  module 3 twists [-4, -4, -4, -4, -5, -5, -5, -5, -5, -5, -6, -6, -6, -6, -6, -6];
  map d1 = [[y]];
  map d2 = [[y*t, y*w^2, y*z^2, y^3]];
  map d3 = [[w, z, y, x, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, t, 0, 0, y, 0, 0, w^2, z^2, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, t, 0, 0, y, 0, 0, 0, w^2, 0, z^2, 0],
            [0, 0, 0, 0, 0, 0, t, 0, 0, y, 0, 0, 0, w^2, 0, z^2]];
}

check ezd S f g
ann g in R
resolve R / yR --hmax 3 --dmax 10
operators build F pair f,g z tR
homotopy check phi --window 0:3
homotopy check psi_tR --window 0:2
reproduce-example
)job";
}

}  // namespace ezdop

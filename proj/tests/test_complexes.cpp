#include <doctest.h>

#include <random>

#include "ezdop/operators.hpp"
#include "ezdop/resolution.hpp"
#include "ezdop/worked_example.hpp"
#include "oracles.hpp"

using namespace ezdop;

namespace {

FreeModuleMap random_graded_map(const GradedFreeModule& src, const GradedFreeModule& tgt,
                                int hdeg, int64_t ideg, std::mt19937_64& rng) {
    std::vector<Polynomial> entries;
    for (int i = 0; i < tgt.rank(); ++i)
        for (int j = 0; j < src.rank(); ++j) {
            int64_t d = src.gen_degree(j) + ideg - tgt.gen_degree(i);
            entries.push_back(d < 0 ? Polynomial::zero(src.ring->ambient())
                                    : oracle::random_homogeneous_elem(src.ring, d, rng).rep());
        }
    return FreeModuleMap(src, tgt, std::move(entries), hdeg, ideg);
}

}  // namespace

TEST_CASE("validate_complex distinguishes the quotient from its cover") {
    WorkedExample ex = make_worked_example();
    CHECK(validate_complex(*ex.F).ok);

    // The same matrices over S do not square to zero; the report shows the
    // composite entries y^2*t and y^2*z^2.
    std::vector<GradedFreeModule> smods;
    for (int i = 0; i <= 3; ++i)
        smods.push_back(GradedFreeModule{ex.S, ex.F->module(i).twists});
    std::map<int, FreeModuleMap> sdiffs;
    for (int i = 1; i <= 3; ++i) {
        const FreeModuleMap& d = ex.F->diff(i);
        std::vector<Polynomial> entries;
        for (int r = 0; r < d.target().rank(); ++r)
            for (int c = 0; c < d.source().rank(); ++c) entries.push_back(d.entry(r, c));
        sdiffs.emplace(i, FreeModuleMap(smods[static_cast<size_t>(i)],
                                        smods[static_cast<size_t>(i - 1)], std::move(entries),
                                        -1, 0));
    }
    GradedComplex overS(ex.S, 0, std::move(smods), std::move(sdiffs));
    ComplexValidation v = validate_complex(overS);
    CHECK_FALSE(v.ok);
    bool mentions = false;
    for (const std::string& s : v.violations)
        if (s.find("y^2*t") != std::string::npos && s.find("y^2*z^2") != std::string::npos)
            mentions = true;
    CHECK(mentions);

    // Zero complex.
    GradedComplex zero(ex.R, 0,
                       {GradedFreeModule{ex.R, {}}, GradedFreeModule{ex.R, {}}},
                       {{1, FreeModuleMap::zero(GradedFreeModule{ex.R, {}},
                                                GradedFreeModule{ex.R, {}}, -1, 0)}});
    CHECK(validate_complex(zero).ok);
}

TEST_CASE("composition: resolution squares to zero, identity neutral, associative") {
    WorkedExample ex = make_worked_example();
    CHECK(FreeModuleMap::compose(ex.F->diff(1), ex.F->diff(2)).is_zero());
    CHECK(FreeModuleMap::compose(ex.F->diff(2), ex.F->diff(3)).is_zero());

    ComplexMap id = ComplexMap::identity(ex.F);
    ComplexMap d_as_map(ex.F, ex.F, -1, 0,
                        std::map<int, FreeModuleMap>(ex.F->diffs().begin(),
                                                     ex.F->diffs().end()));
    ComplexMap left = ComplexMap::compose(id, d_as_map);
    for (const auto& [i, c] : d_as_map.components())
        CHECK(left.component(i).equal_entries(c));

    std::mt19937_64 rng(401);
    GradedFreeModule A{ex.R, {0, -1}};
    GradedFreeModule B{ex.R, {-1, -2, -2}};
    GradedFreeModule C{ex.R, {-2, -3}};
    GradedFreeModule D{ex.R, {-4}};
    for (int trial = 0; trial < 10; ++trial) {
        FreeModuleMap h = random_graded_map(B, A, 0, 0, rng);
        FreeModuleMap g = random_graded_map(C, B, 0, 0, rng);
        FreeModuleMap k = random_graded_map(D, C, 0, 0, rng);
        FreeModuleMap lhs = FreeModuleMap::compose(FreeModuleMap::compose(h, g), k);
        FreeModuleMap rhs = FreeModuleMap::compose(h, FreeModuleMap::compose(g, k));
        CHECK(lhs.equal_entries(rhs));
    }
}

TEST_CASE("chain map verification follows the parity convention") {
    WorkedExample ex = make_worked_example();
    ResolutionResult res = minimal_resolution(ex.R, ex.M, 4, 11);
    OperatorBundle B = operator_pipeline(res.complex, ex.S, ex.f, ex.g, {ex.t},
                                         LiftPolicy::Canonical);
    CHECK(is_chain_map(B.psi_z[0].second).ok);   // even degree: commutes
    REQUIRE(B.phi.has_value());
    CHECK(is_chain_map(*B.phi).ok);              // odd degree: anticommutes

    // Perturbing one entry breaks the identity.
    ComplexMap phi = *B.phi;
    std::map<int, FreeModuleMap> comps(phi.components().begin(), phi.components().end());
    const FreeModuleMap c4 = comps.at(4);
    std::vector<Polynomial> entries;
    for (int r = 0; r < c4.target().rank(); ++r)
        for (int c = 0; c < c4.source().rank(); ++c) entries.push_back(c4.entry(r, c));
    entries[0] = entries[0] + Polynomial::parse(ex.R->ambient(), "t^2");
    comps.erase(4);
    comps.emplace(4, FreeModuleMap(c4.source(), c4.target(), std::move(entries), -3, -4));
    ComplexMap perturbed(res.complex, res.complex, -3, -4, std::move(comps));
    CHECK_FALSE(is_chain_map(perturbed).ok);

    // A window with no evaluable equation throws.
    std::map<int, FreeModuleMap> single;
    single.emplace(3, B.phi->component(3));
    ComplexMap lone(res.complex, res.complex, -3, -4, std::move(single));
    CHECK_THROWS_AS(is_chain_map(lone), std::invalid_argument);
}

TEST_CASE("degreewise matrices in standard-monomial bases") {
    WorkedExample ex = make_worked_example();
    // d_1 = [y] : R(-1) -> R; source degree 2 restricts to R_1 -> R_2.
    DegreewisePiece piece = degreewise_matrix(ex.F->diff(1), 2);
    CHECK(piece.source_basis.dimension() == 5);
    CHECK(piece.target_basis.dimension() == 11);
    // The column of a basis monomial m is the coordinate vector of nf(y*m).
    for (int c = 0; c < 5; ++c) {
        const Monomial& m = piece.source_basis.items[static_cast<size_t>(c)].second;
        Polynomial img = ex.R->normal_form(
            Polynomial::parse(ex.R->ambient(), "y").mul_term(Rational(1), m));
        linalg::QVec expect(11, Rational(0));
        for (const Term& t : img.terms()) {
            int row = piece.target_basis.index_of(0, t.mono);
            REQUIRE(row >= 0);
            expect[row] = t.coeff;
        }
        for (int r = 0; r < 11; ++r) CHECK(piece.mat.at(r, c) == expect[r]);
    }

    // Zero map gives the zero matrix.
    FreeModuleMap zero = FreeModuleMap::zero(ex.F->module(2), ex.F->module(0), -2, -2);
    CHECK(degreewise_matrix(zero, 4).mat.is_zero());

    // Functoriality: the degreewise matrix of a composite is the product.
    std::mt19937_64 rng(409);
    GradedFreeModule A{ex.R, {0, -1}};
    GradedFreeModule B2{ex.R, {-1, -2}};
    GradedFreeModule C{ex.R, {-2, -2, -3}};
    for (int trial = 0; trial < 8; ++trial) {
        FreeModuleMap g = random_graded_map(B2, A, 0, 0, rng);
        FreeModuleMap h = random_graded_map(C, B2, 0, -1, rng);
        FreeModuleMap gh = FreeModuleMap::compose(g, h);
        for (int64_t d = 2; d <= 6; ++d) {
            DegreewisePiece pg = degreewise_matrix(g, d + h.ideg());
            DegreewisePiece ph = degreewise_matrix(h, d);
            DegreewisePiece pgh = degreewise_matrix(gh, d);
            CHECK(pg.mat * ph.mat == pgh.mat);
        }
    }
}

TEST_CASE("module coordinates round-trip") {
    WorkedExample ex = make_worked_example();
    const GradedFreeModule& M = ex.F->module(2);
    std::mt19937_64 rng(419);
    for (int64_t d = 3; d <= 7; ++d) {
        ModuleBasis basis = module_graded_basis(M, d);
        std::vector<Polynomial> column;
        for (int j = 0; j < M.rank(); ++j) {
            int64_t entry_deg = d - M.gen_degree(j);
            column.push_back(entry_deg < 0
                                 ? Polynomial::zero(ex.R->ambient())
                                 : oracle::random_homogeneous_elem(ex.R, entry_deg, rng).rep());
        }
        linalg::QVec v = module_coordinates(M, basis, column);
        std::vector<Polynomial> back = module_from_coordinates(M, basis, v);
        for (int j = 0; j < M.rank(); ++j) CHECK(back[j] == column[j]);
    }
}

TEST_CASE("graded entry degrees follow the twist difference formula") {
    WorkedExample ex = make_worked_example();
    for (const auto& [i, d] : ex.F->diffs()) {
        CHECK(d.check_graded().empty());
        for (int r = 0; r < d.target().rank(); ++r)
            for (int c = 0; c < d.source().rank(); ++c)
                if (!d.entry(r, c).is_zero())
                    CHECK(*d.entry(r, c).homogeneous_degree() == d.entry_degree(r, c));
    }
    // An inhomogeneous entry is reported, not silently accepted.
    GradedFreeModule A{ex.R, {0}};
    GradedFreeModule B{ex.R, {-2}};
    FreeModuleMap bad(B, A, {Polynomial::parse(ex.R->ambient(), "x+y^2")}, -1, 0);
    CHECK_FALSE(bad.check_graded().empty());
}

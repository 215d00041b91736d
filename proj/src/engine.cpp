#include "ezdop/engine.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ezdop/homotopy.hpp"
#include "ezdop/operators.hpp"
#include "ezdop/resolution.hpp"
#include "ezdop/worked_example.hpp"

namespace ezdop {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

json matrix_json(const FreeModuleMap& m) {
    json rows = json::array();
    for (int i = 0; i < m.target().rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.source().rank(); ++j) row.push_back(m.entry(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json map_family_json(const std::map<int, FreeModuleMap>& maps) {
    json out = json::object();
    for (const auto& [i, m] : maps) {
        out[std::to_string(i)] = {{"matrix", matrix_json(m)},
                                  {"homological_degree", m.hdeg()},
                                  {"internal_degree", m.ideg()},
                                  {"source_twists", m.source().twists},
                                  {"target_twists", m.target().twists}};
    }
    return out;
}

json complex_map_json(const ComplexMap& g) {
    json out;
    out["homological_degree"] = g.hdeg();
    out["internal_degree"] = g.ideg();
    out["components"] = map_family_json(g.components());
    return out;
}

json ideal_json(const IdealPresentation& I) {
    json gens = json::array();
    for (const Polynomial& p : I.generators) gens.push_back(p.str());
    return gens;
}

json monomial_json(const PolyRingPtr& ring, const Monomial& m) {
    return Polynomial::monomial(ring, Rational(1), m).str();
}

json homotopy_outcome_json(const HomotopyOutcome& outcome) {
    json out;
    if (homotopy_found(outcome)) {
        const auto& cert = std::get<HomotopyCertificate>(outcome);
        out["verdict"] = "homotopy-found";
        out["equations"] = cert.equations;
        out["theta"] = complex_map_json(cert.theta);
    } else {
        const auto& cert = std::get<InfeasibilityCertificate>(outcome);
        out["verdict"] = cert.bounded_only ? "infeasible-at-bound" : "infeasible";
        json rows = json::array();
        for (size_t r = 0; r < cert.row_labels.size(); ++r) {
            if (cert.witness[r] == 0) continue;
            const SystemRowLabel& lb = cert.row_labels[r];
            rows.push_back({{"equation_index", lb.equation_index},
                            {"target_row", lb.target_row},
                            {"source_col", lb.source_col},
                            {"monomial", monomial_json(cert.ambient, lb.mono)},
                            {"coefficient", to_string(cert.witness[r])}});
        }
        out["witness"] = std::move(rows);
        json triplets = json::array();
        for (int r = 0; r < cert.system.rows(); ++r)
            for (int c = 0; c < cert.system.cols(); ++c)
                if (cert.system.at(r, c) != 0)
                    triplets.push_back({r, c, to_string(cert.system.at(r, c))});
        out["system"] = {{"rows", cert.system.rows()},
                         {"cols", cert.system.cols()},
                         {"entries", std::move(triplets)}};
        json rhs = json::array();
        for (size_t r = 0; r < cert.rhs.size(); ++r)
            if (cert.rhs[r] != 0) rhs.push_back({static_cast<int>(r), to_string(cert.rhs[r])});
        out["rhs"] = std::move(rhs);
    }
    return out;
}

struct Env {
    std::map<std::string, RingPtr> rings;
    std::map<std::string, RingElem> elems;
    std::map<std::string, ComplexPtr> complexes;
    std::map<std::string, ComplexMap> maps;
    uint64_t seed = 0;

    RingPtr ring(const std::string& name) const {
        auto it = rings.find(name);
        if (it == rings.end()) throw std::invalid_argument("undefined ring '" + name + "'");
        return it->second;
    }
    RingElem elem(const std::string& name) const {
        auto it = elems.find(name);
        if (it == elems.end()) throw std::invalid_argument("undefined element '" + name + "'");
        return it->second;
    }
    ComplexPtr complex(const std::string& name) const {
        auto it = complexes.find(name);
        if (it == complexes.end())
            throw std::invalid_argument("undefined complex '" + name + "'");
        return it->second;
    }
    const ComplexMap& map(const std::string& name) const {
        auto it = maps.find(name);
        if (it == maps.end())
            throw std::invalid_argument("undefined map '" + name +
                                        "' (run an operators build first)");
        return it->second;
    }
};

struct Executor {
    Env env;
    json items = json::array();
    bool failed = false;

    void operator()(const RingDecl& d) {
        std::vector<std::string> names;
        std::vector<int> degs;
        for (const auto& [n, deg] : d.vars) {
            names.push_back(n);
            degs.push_back(deg);
        }
        env.rings[d.name] = PresentedRing::make(names, degs, d.relations);
    }

    void operator()(const ElemDecl& d) {
        env.elems[d.name] = RingElem::parse(env.ring(d.ring), d.poly);
    }

    void operator()(const QuotientDecl& d) {
        env.rings[d.name] = quotient_by(env.ring(d.base), env.elem(d.elem));
    }

    void operator()(const ComplexDecl& d) {
        RingPtr R = env.ring(d.ring);
        if (d.modules.empty()) throw std::invalid_argument("complex with no modules");
        int lo = d.modules.front().first, hi = lo;
        for (const auto& [i, tw] : d.modules) {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
        std::vector<GradedFreeModule> modules(static_cast<size_t>(hi - lo + 1));
        std::vector<bool> seen(modules.size(), false);
        for (const auto& [i, tw] : d.modules) {
            modules[static_cast<size_t>(i - lo)] = GradedFreeModule{R, tw};
            seen[static_cast<size_t>(i - lo)] = true;
        }
        for (size_t k = 0; k < seen.size(); ++k)
            if (!seen[k])
                throw std::invalid_argument("complex window has a gap at index " +
                                            std::to_string(lo + static_cast<int>(k)));
        std::map<int, FreeModuleMap> diffs;
        for (const auto& [i, rows] : d.maps) {
            if (i <= lo || i > hi)
                throw std::invalid_argument("map d" + std::to_string(i) + " outside window");
            const GradedFreeModule& src = modules[static_cast<size_t>(i - lo)];
            const GradedFreeModule& tgt = modules[static_cast<size_t>(i - 1 - lo)];
            if (static_cast<int>(rows.size()) != tgt.rank())
                throw std::invalid_argument("map d" + std::to_string(i) + " has wrong row count");
            std::vector<Polynomial> entries;
            for (const auto& row : rows) {
                if (static_cast<int>(row.size()) != src.rank())
                    throw std::invalid_argument("map d" + std::to_string(i) +
                                                " has wrong column count");
                for (const std::string& s : row)
                    entries.push_back(Polynomial::parse(R->ambient(), s));
            }
            diffs.emplace(i, FreeModuleMap(src, tgt, std::move(entries), -1, 0));
        }
        ComplexPtr F = GradedComplex::create(R, lo, std::move(modules), std::move(diffs));
        ComplexValidation v = validate_complex(*F);
        if (!v.ok)
            throw std::invalid_argument("complex '" + d.name +
                                        "' is not a complex: " + v.violations.front());
        env.complexes[d.name] = F;
    }

    void operator()(const CheckEzdCmd& c) {
        auto start = Clock::now();
        RingPtr S = env.ring(c.ring);
        ExactPairReport rep = check_exact_pair(S, env.elem(c.x), env.elem(c.y));
        items.push_back({{"command", "check ezd"},
                         {"ring", c.ring},
                         {"x", c.x},
                         {"y", c.y},
                         {"verdict", rep.ok},
                         {"product_zero", rep.product_zero},
                         {"ann_x_in_y", rep.ann_x_in_y},
                         {"ann_y_in_x", rep.ann_y_in_x},
                         {"ann_x_generators", ideal_json(rep.ann_x)},
                         {"ann_y_generators", ideal_json(rep.ann_y)},
                         {"elapsed_ms", ms_since(start)}});
    }

    void operator()(const AnnCmd& c) {
        auto start = Clock::now();
        RingPtr R = env.ring(c.ring);
        IdealPresentation ann = annihilator(R, env.elem(c.elem));
        items.push_back({{"command", "ann"},
                         {"element", c.elem},
                         {"ring", c.ring},
                         {"generators", ideal_json(ann)},
                         {"elapsed_ms", ms_since(start)}});
    }

    void operator()(const ResolveCmd& c) {
        auto start = Clock::now();
        RingPtr R = env.ring(c.ring);
        std::vector<RingElem> gens;
        for (const std::string& s : c.gens)
            gens.push_back(c.inline_polys ? RingElem::parse(R, s) : env.elem(s));
        ModulePresentation M = ModulePresentation::cyclic(R, gens);
        ResolutionResult res = minimal_resolution(R, M, c.hmax, c.dmax);
        json betti = json::object();
        for (const auto& [i, tw] : res.betti) betti[std::to_string(i)] = tw;
        json steps = json::object();
        for (const auto& [i, info] : res.steps)
            steps[std::to_string(i)] = {{"certified_degree", info.certified_degree},
                                        {"generators", info.generators_found}};
        json diffs = json::object();
        for (const auto& [i, m] : res.complex->diffs())
            diffs[std::to_string(i)] = matrix_json(m);
        items.push_back({{"command", "resolve"},
                         {"ring", c.ring},
                         {"hmax", c.hmax},
                         {"dmax", c.dmax},
                         {"betti", std::move(betti)},
                         {"steps", std::move(steps)},
                         {"differentials", std::move(diffs)},
                         {"truncated", res.truncated},
                         {"warnings", res.warnings},
                         {"elapsed_ms", ms_since(start)}});
    }

    void operator()(const OperatorsCmd& c) {
        auto start = Clock::now();
        ComplexPtr F = env.complex(c.complex);
        RingPtr R = F->ring();
        if (!R->parent())
            throw std::invalid_argument("complex ring is not a quotient; cannot build operators");
        RingPtr S = R->parent();
        RingElem x = env.elem(c.x);
        RingElem y = env.elem(c.y);
        std::vector<RingElem> zs;
        for (const std::string& zn : c.zs) zs.push_back(env.elem(zn));
        OperatorBundle B = operator_pipeline(F, S, x, y, zs, LiftPolicy::Canonical, env.seed);

        json psis = json::array();
        for (size_t k = 0; k < B.psi_z.size(); ++k) {
            const auto& [z, psi] = B.psi_z[k];
            env.maps["psi_" + c.zs[k]] = psi;
            env.maps[c.complex + ".psi_" + c.zs[k]] = psi;
            psis.push_back({{"z", c.zs[k]}, {"map", complex_map_json(psi)}});
        }
        json phi;
        if (B.phi) {
            env.maps["phi"] = *B.phi;
            env.maps[c.complex + ".phi"] = *B.phi;
            phi = complex_map_json(*B.phi);
        }
        items.push_back({{"command", "operators build"},
                         {"complex", c.complex},
                         {"pair", {c.x, c.y}},
                         {"psi_tilde", map_family_json(B.psi_tilde)},
                         {"phi_tilde", map_family_json(B.phi_tilde)},
                         {"psi_z", std::move(psis)},
                         {"phi", std::move(phi)},
                         {"contracts_verified", true},
                         {"notes", B.notes},
                         {"elapsed_ms", ms_since(start)}});
    }

    void operator()(const HomotopyCmd& c) {
        auto start = Clock::now();
        const ComplexMap& g = env.map(c.map);
        HomotopyProblem p;
        p.g = g;
        p.window_lo = c.window_lo;
        p.window_hi = c.window_hi;
        HomotopyOutcome outcome = null_homotopy(p);
        json out = homotopy_outcome_json(outcome);
        out["command"] = "homotopy check";
        out["map"] = c.map;
        out["window"] = {c.window_lo, c.window_hi};
        out["elapsed_ms"] = ms_since(start);
        items.push_back(std::move(out));
    }

    void operator()(const ReproduceCmd&) {
        Report rep = run_reproduce_example();
        items.push_back(rep.doc);
        if (rep.exit_code != 0) failed = true;
    }
};

}  // namespace

Report run_jobfile(const JobFile& job, uint64_t seed) {
    Report report;
    Executor exec;
    exec.env.seed = seed;
    auto start = Clock::now();
    report.doc = {{"schema", report_schema()},
                  {"tool", {{"name", "ezdop"}, {"version", version_string()}}},
                  {"seed", seed}};
    try {
        for (const Statement& s : job.statements) std::visit(exec, s);
        report.doc["items"] = std::move(exec.items);
        report.doc["elapsed_ms"] = ms_since(start);
        report.exit_code = exec.failed ? 2 : 0;
        std::ostringstream os;
        os << "ok: " << report.doc["items"].size() << " command(s) completed";
        report.human_summary = os.str();
    } catch (const ParseError& e) {
        report.doc["items"] = std::move(exec.items);
        report.doc["error"] = {{"message", e.what()}, {"line", e.line}, {"col", e.col}};
        report.exit_code = 1;
        report.human_summary = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
        report.doc["items"] = std::move(exec.items);
        report.doc["error"] = {{"message", e.what()}};
        report.exit_code = 1;
        report.human_summary = std::string("error: ") + e.what();
    }
    return report;
}

Report run_job_text(const std::string& text, uint64_t seed) {
    try {
        JobFile job = parse_jobfile(text);
        return run_jobfile(job, seed);
    } catch (const ParseError& e) {
        Report report;
        report.doc = {{"schema", report_schema()},
                      {"tool", {{"name", "ezdop"}, {"version", version_string()}}},
                      {"error", {{"message", e.what()}, {"line", e.line}, {"col", e.col}}}};
        report.exit_code = 1;
        std::ostringstream os;
        os << "parse error at " << e.line << ":" << e.col << ": " << e.what();
        report.human_summary = os.str();
        return report;
    }
}

Report run_reproduce_example() {
    Report report;
    json items = json::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back({{"item", name}, {"pass", pass}, {"detail", detail}});
        all_pass = all_pass && pass;
    };
    auto start = Clock::now();

    WorkedExample ex = make_worked_example();

    // 1. Exact pair.
    ExactPairReport pair = check_exact_pair(ex.S, ex.f, ex.g);
    add("exact pair (f, g)", pair.ok, pair.summary());

    // 2. ann_R(g) equals (t, y^2, z^2, w^2) by mutual membership.
    RingElem gR = project(ex.R, ex.g);
    IdealPresentation ann = annihilator(ex.R, gR);
    std::vector<Polynomial> expected;
    for (const char* s : {"t", "y^2", "z^2", "w^2"})
        expected.push_back(Polynomial::parse(ex.R->ambient(), s));
    bool fwd = ideal_contained_mod(ex.R, ann.generators, expected);
    bool bwd = ideal_contained_mod(ex.R, expected, ann.generators);
    add("ann_R(g) = (t, y^2, z^2, w^2)", fwd && bwd);

    // 3. Graded dimensions and spans.
    {
        const GradedPieceBasis& r1 = ex.R->graded_basis(1);
        bool dims = r1.dimension() == 5 && ex.R->graded_dimension(2) == 11;
        std::vector<std::string> r1_names;
        for (const Monomial& m : r1.monomials)
            r1_names.push_back(Polynomial::monomial(ex.R->ambient(), Rational(1), m).str());
        std::sort(r1_names.begin(), r1_names.end());
        bool basis1 = r1_names == std::vector<std::string>({"t", "w", "x", "y", "z"});

        // Reference degree-2 monomials span R_2: their normal forms have rank 11.
        const GradedPieceBasis& r2 = ex.R->graded_basis(2);
        linalg::QMat coords(r2.dimension(), static_cast<int>(ex.r2_reference_span.size()));
        for (size_t k = 0; k < ex.r2_reference_span.size(); ++k) {
            Polynomial nf = ex.R->normal_form(ex.r2_reference_span[k]);
            for (const Term& term : nf.terms()) {
                int row = r2.index_of(term.mono);
                if (row >= 0) coords.at(row, static_cast<int>(k)) = term.coeff;
            }
        }
        bool span = linalg::rank(coords) == 11;

        // Brute-force standard monomial count for the ambient quotient.
        int count = 0;
        for (const Monomial& m : ex.S->ambient()->monomials_of_degree(2)) {
            bool divisible = false;
            for (const Polynomial& rel : ex.S->ideal().generators)
                if (rel.terms().size() == 1 && rel.leading().mono.divides(m)) divisible = true;
            if (!divisible) ++count;
        }
        bool s2 = count == 12 && ex.S->graded_dimension(2) == 12;
        add("graded pieces: dim R_1 = 5 {x,y,z,w,t}, dim R_2 = 11 (span match), dim S_2 = 12",
            dims && basis1 && span && s2);
    }

    // 4. Resolution betti numbers and window verification.
    {
        ResolutionResult res = minimal_resolution(ex.R, ex.M, 3, 10);
        bool betti = true;
        for (const auto& [i, tw] : ex.expected_betti)
            betti = betti && res.betti.count(i) && res.betti.at(i) == tw;
        ResolutionCheck window = verify_resolution_window(*ex.F, ex.M, 8);
        add("resolution betti steps 1-3 and window verification (degrees <= 8)",
            betti && window.ok,
            window.ok ? "" : window.failures.front());
    }

    // 5. Operator contracts for the canonical lift and the reference matrices.
    {
        std::vector<std::string> details;
        bool ok = true;
        OperatorBundle B =
            operator_pipeline(ex.F, ex.S, ex.f, ex.g, {ex.t}, LiftPolicy::Canonical);
        // x psi = d^2 and y phi = d psi - psi d hold by construction; re-verify.
        for (const auto& [i, psi] : B.psi_tilde) {
            FreeModuleMap dd = FreeModuleMap::compose(B.lifted.dtilde.at(i - 1),
                                                      B.lifted.dtilde.at(i));
            for (int r = 0; r < psi.target().rank(); ++r)
                for (int c = 0; c < psi.source().rank(); ++c)
                    if (!ex.S->normal_form(ex.f.rep() * psi.entry(r, c) - dd.entry(r, c))
                             .is_zero())
                        ok = false;
        }
        // Reference psi entries satisfy the same identity.
        for (const auto& [i, psi] : ex.psi_reference) {
            FreeModuleMap dd = FreeModuleMap::compose(B.lifted.dtilde.at(i - 1),
                                                      B.lifted.dtilde.at(i));
            for (int r = 0; r < psi.target().rank(); ++r)
                for (int c = 0; c < psi.source().rank(); ++c)
                    if (!ex.S->normal_form(ex.f.rep() * psi.entry(r, c) - dd.entry(r, c))
                             .is_zero()) {
                        ok = false;
                        details.push_back("reference psi fails at index " + std::to_string(i));
                    }
        }
        // Reference phi_3 against the reference psi choices.
        {
            const FreeModuleMap& psi3 = ex.psi_reference.at(3);
            const FreeModuleMap& psi2 = ex.psi_reference.at(2);
            FreeModuleMap lhs = FreeModuleMap::compose(B.lifted.dtilde.at(1), psi3) -
                                FreeModuleMap::compose(psi2, B.lifted.dtilde.at(3));
            const FreeModuleMap& phi3 = ex.phi_reference.at(3);
            for (int c = 0; c < phi3.source().rank(); ++c)
                if (!ex.S->normal_form(ex.g.rep() * phi3.entry(0, c) - lhs.entry(0, c))
                         .is_zero()) {
                    ok = false;
                    details.push_back("reference phi fails at column " + std::to_string(c));
                }
        }
        // Chain-map identities over R on a window long enough to pose them.
        ResolutionResult res4 = minimal_resolution(ex.R, ex.M, 4, 11);
        OperatorBundle B4 =
            operator_pipeline(res4.complex, ex.S, ex.f, ex.g, {ex.t}, LiftPolicy::Canonical);
        ChainMapCheck psi_chain = is_chain_map(B4.psi_z[0].second);
        ChainMapCheck phi_chain = is_chain_map(*B4.phi);
        ok = ok && psi_chain.ok && phi_chain.ok;
        add("operator contracts (canonical lift, reference matrices, chain maps over R)", ok,
            details.empty() ? "" : details.front());
    }

    // 6. Nonvanishing witnesses.
    {
        OperatorBundle B =
            operator_pipeline(ex.F, ex.S, ex.f, ex.g, {ex.t}, LiftPolicy::Canonical);
        ExtClassResult phi_cls = ext_class_nonzero(*B.phi, 0, 3);
        ExtClassResult psi_cls = ext_class_nonzero(B.psi_z[0].second, 0, 2);
        add("phi not null-homotopic (window 0:3)", phi_cls.nonzero);
        add("psi_t not null-homotopic (window 0:2)", psi_cls.nonzero);
    }

    report.doc = {{"schema", report_schema()},
                  {"tool", {{"name", "ezdop"}, {"version", version_string()}}},
                  {"command", "reproduce-example"},
                  {"items", std::move(items)},
                  {"all_pass", all_pass},
                  {"elapsed_ms", ms_since(start)}};
    report.exit_code = all_pass ? 0 : 2;
    std::ostringstream os;
    os << (all_pass ? "reproduce-example: all items pass"
                    : "reproduce-example: at least one item FAILED");
    report.human_summary = os.str();
    return report;
}

}  // namespace ezdop

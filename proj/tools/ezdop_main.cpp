// ezdop: exact computer algebra for cohomological operators over quotients
// by exact zero divisors. JSON reports go to stdout, a one-line human
// summary to stderr. Exit codes: 0 = verdict reached (including
// "infeasible"), 1 = error, 2 = reproduce-example item failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ezdop/engine.hpp"
#include "ezdop/worked_example.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open job file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

uint64_t default_seed() {
    if (const char* env = std::getenv("EZDOP_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring malformed EZDOP_SEED\n";
        }
    }
    return 0;
}

int emit(const ezdop::Report& report, bool pretty) {
    std::cout << report.doc.dump(pretty ? 2 : -1) << "\n";
    std::cerr << report.human_summary << "\n";
    return report.exit_code;
}

// Appends the requested command to the job's definitions and runs the lot.
int run_amended(const std::string& job_path, const std::string& extra, uint64_t seed,
                bool pretty) {
    std::string text = job_path.empty() ? std::string() : read_file(job_path);
    ezdop::JobFile job = ezdop::parse_jobfile(text);
    // Keep definitions and operator builds; drop other commands so the
    // report contains only the requested one.
    ezdop::JobFile pruned;
    for (ezdop::Statement& s : job.statements) {
        bool keep = std::holds_alternative<ezdop::RingDecl>(s) ||
                    std::holds_alternative<ezdop::ElemDecl>(s) ||
                    std::holds_alternative<ezdop::QuotientDecl>(s) ||
                    std::holds_alternative<ezdop::ComplexDecl>(s) ||
                    std::holds_alternative<ezdop::OperatorsCmd>(s);
        if (keep) pruned.statements.push_back(std::move(s));
    }
    ezdop::JobFile extra_job = ezdop::parse_jobfile(extra);
    for (ezdop::Statement& s : extra_job.statements) pruned.statements.push_back(std::move(s));
    return emit(ezdop::run_jobfile(pruned, seed), pretty);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomological-operator computations over quotients by exact zero divisors"};
    app.require_subcommand(1);

    uint64_t seed = default_seed();
    bool pretty = false;
    std::string job_path;
    app.add_option("--seed", seed, "seed for randomized policies (default: EZDOP_SEED or 0)");
    app.add_flag("--pretty", pretty, "indent JSON output");

    auto* run = app.add_subcommand("run", "execute every statement of a job file");
    std::string run_file;
    run->add_option("jobfile", run_file, "job file path")->required();

    auto* check = app.add_subcommand("check", "verification commands");
    auto* check_ezd = check->add_subcommand("ezd", "check that two elements form an exact pair");
    std::string cr, cx, cy;
    check_ezd->add_option("ring", cr)->required();
    check_ezd->add_option("x", cx)->required();
    check_ezd->add_option("y", cy)->required();
    check_ezd->add_option("--job", job_path, "job file with the definitions")->required();

    auto* ann = app.add_subcommand("ann", "annihilator ideal of an element");
    std::string ae, ar;
    ann->add_option("elem", ae)->required();
    ann->add_option("ring", ar)->required();
    ann->add_option("--job", job_path)->required();

    auto* resolve = app.add_subcommand("resolve", "minimal graded free resolution of R/(a)");
    std::string rr, relem;
    int hmax = 3;
    int64_t dmax = 8;
    resolve->add_option("ring", rr)->required();
    resolve->add_option("elem", relem)->required();
    resolve->add_option("--hmax", hmax);
    resolve->add_option("--dmax", dmax);
    resolve->add_option("--job", job_path)->required();

    auto* ops = app.add_subcommand("operators", "operator construction");
    auto* ops_build = ops->add_subcommand("build", "build psi/phi operators on a complex");
    std::string oc, opair, ozs;
    ops_build->add_option("complex", oc)->required();
    ops_build->add_option("--pair", opair, "x,y element names")->required();
    ops_build->add_option("--z", ozs, "comma-separated z element names");
    ops_build->add_option("--job", job_path)->required();

    auto* hom = app.add_subcommand("homotopy", "homotopy decisions");
    auto* hom_check = hom->add_subcommand("check", "decide null-homotopy of an operator map");
    std::string hmap, hwindow;
    hom_check->add_option("map", hmap, "map name registered by operators build (psi_<z>, phi)")
        ->required();
    hom_check->add_option("--window", hwindow, "equation window a:b")->required();
    hom_check->add_option("--job", job_path)->required();

    app.add_subcommand("reproduce-example",
                       "run the bundled end-to-end worked example and verify every step");

    auto* print_ex = app.add_subcommand("print-example", "print the bundled example job file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            std::string text = read_file(run_file);
            return emit(ezdop::run_job_text(text, seed), pretty);
        }
        if (check_ezd->parsed()) {
            std::ostringstream cmd;
            cmd << "check ezd " << cr << " " << cx << " " << cy << "\n";
            return run_amended(job_path, cmd.str(), seed, pretty);
        }
        if (ann->parsed()) {
            std::ostringstream cmd;
            cmd << "ann " << ae << " in " << ar << "\n";
            return run_amended(job_path, cmd.str(), seed, pretty);
        }
        if (resolve->parsed()) {
            std::ostringstream cmd;
            cmd << "resolve " << rr << " / " << relem << " --hmax " << hmax << " --dmax " << dmax
                << "\n";
            return run_amended(job_path, cmd.str(), seed, pretty);
        }
        if (ops_build->parsed()) {
            auto comma = opair.find(',');
            if (comma == std::string::npos) {
                std::cerr << "error: --pair needs x,y\n";
                return 1;
            }
            std::ostringstream cmd;
            cmd << "operators build " << oc << " pair " << opair.substr(0, comma) << ","
                << opair.substr(comma + 1);
            if (!ozs.empty()) cmd << " z " << ozs;
            cmd << "\n";
            return run_amended(job_path, cmd.str(), seed, pretty);
        }
        if (hom_check->parsed()) {
            std::ostringstream cmd;
            cmd << "homotopy check " << hmap << " --window " << hwindow << "\n";
            return run_amended(job_path, cmd.str(), seed, pretty);
        }
        if (app.get_subcommand("reproduce-example")->parsed()) {
            return emit(ezdop::run_reproduce_example(), pretty);
        }
        if (print_ex->parsed()) {
            std::cout << ezdop::worked_example_job_text();
            return 0;
        }
    } catch (const ezdop::ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

#include "newstein/algebra_io.hpp"
#include "newstein/algebras.hpp"
#include "newstein/cohomology.hpp"
#include "newstein/extensions.hpp"
#include "newstein/group_law.hpp"
#include "newstein/induced_rep.hpp"
#include "newstein/oscillator.hpp"
#include "newstein/reduction.hpp"
#include "newstein/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>

using namespace newstein;
using Json = nlohmann::ordered_json;

namespace {

enum Exit : int {
    ok = 0,
    check_failed = 1,
    usage = 2,
    unknown_algebra = 3,
    invalid_parameter = 4,
    io_failure = 5,
    internal_failure = 6,
};

struct UnknownAlgebra : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LieAlgebra select_algebra(const std::string& sel) {
    if (sel == "newstein") return build_newstein();
    if (sel == "newstein2") return build_newstein2();
    if (sel == "h3") return build_heisenberg3();
    if (sel == "sl2") return build_sl2();
    if (sel.rfind("newstein-ext:", 0) == 0) {
        int id = 0;
        try {
            id = std::stoi(sel.substr(13));
        } catch (const std::exception&) {
            throw UnknownAlgebra("bad extension case in '" + sel + "'");
        }
        if (id < 1 || id > 9) throw UnknownAlgebra("extension case must be in 1..9");
        return build_extended(representative_class(id));
    }
    if (sel.rfind("file:", 0) == 0) {
        const std::string path = sel.substr(5);
        if (!std::filesystem::exists(path)) throw IoFailure("cannot open " + path);
        return read_algebra_file(path);
    }
    throw UnknownAlgebra("unknown algebra '" + sel + "'");
}

Json vec(const Eigen::Ref<const Eigen::VectorXd>& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Json mat(const Eigen::Ref<const Eigen::MatrixXd>& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vec(m.row(i).transpose()));
    return out;
}

Json cmat(const Mat2c& m) { return Json{{"re", mat(m.real())}, {"im", mat(m.imag())}}; }

Json element_record(const GroupElement& g) {
    return Json{{"t", vec(g.t)}, {"tp", vec(g.tp)}, {"c", mat(g.c)}, {"a", mat(g.a)},
                {"q", mat(g.q)}, {"lambda", cmat(g.lambda)}, {"r", cmat(g.r)}};
}

Json element_record(const ExtendedGroupElement& g) {
    Json out = element_record(g.g);
    out["k"] = g.k;
    return out;
}

Json criterion_record(const CriterionResult& r) {
    Json out{{"id", r.id},           {"claim", r.key},          {"title", r.title},
             {"expected", r.expected}, {"computed", r.computed}, {"method", r.method},
             {"status", r.status()}};
    if (!r.detail.empty()) out["note"] = r.detail;
    if (!r.pass) out["command"] = r.command;
    return out;
}

Json cohomology_record(const CohomologyReport& r) {
    return Json{{"algebra", r.algebra},
                {"module", r.module},
                {"degree", r.degree},
                {"dim_prev", r.dim_prev},
                {"dim_k", r.dim_k},
                {"dim_next", r.dim_next},
                {"rank_prev", r.rank_prev},
                {"rank_k", r.rank_k},
                {"betti", r.betti},
                {"method", method_name(r.method)},
                {"dd_zero_verified", r.dd_zero_verified},
                {"route", r.route},
                {"note", r.note}};
}

// Rationals "p/q" or terminating decimals, both read exactly.
Scalar parse_entry(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return parse_scalar(s);
    const std::string frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("not a number: " + s);
    return parse_scalar(s.substr(0, dot) + frac + "/1" + std::string(frac.size(), '0'));
}

RepParams rep_params(double m0, double alpha, double lambda, double ell, int two_s, int two_j) {
    RepParams p{m0, alpha, lambda, ell, two_s, two_j};
    p.validate();
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"newstein: algebra, cohomology and representation checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI file with default flag values (flags win)");
    std::string output;
    app.add_option("-o,--output", output, "write the JSON report here instead of stdout");
    int workers = 0;
    app.add_option("--workers", workers, "worker threads (default: NEWSTEIN_WORKERS or 1)")->envname("NEWSTEIN_WORKERS");
    unsigned seed = VerifyOptions{}.seed;
    app.add_option("--seed", seed, "random seed");

    std::string algebra = "newstein";
    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", algebra, "newstein | newstein-ext:<case> | newstein2 | h3 | sl2 | file:<path>");
    };

    auto* jacobi = app.add_subcommand("jacobi", "check the Jacobi identity");
    add_algebra(jacobi);

    auto* coh = app.add_subcommand("cohomology", "Betti number of the Chevalley-Eilenberg complex");
    add_algebra(coh);
    std::string coeffs = "trivial", method = "exact", route = "direct";
    int degree = 1;
    coh->add_option("--coeffs", coeffs)->check(CLI::IsMember({"trivial", "adjoint"}));
    coh->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
    coh->add_option("--method", method)->check(CLI::IsMember({"exact", "modular"}));
    coh->add_option("--route", route, "direct | reduction (newstein adjoint only)")
        ->check(CLI::IsMember({"direct", "reduction"}));
    int primes = 3;
    coh->add_option("--primes", primes)->check(CLI::PositiveNumber);

    auto* ext = app.add_subcommand("extensions", "extension classification");
    ext->require_subcommand(1);
    auto* classify_cmd = ext->add_subcommand("classify", "classify ad(K) on an (A, Q) plane");
    std::vector<std::string> entries;
    classify_cmd->add_option("--matrix", entries, "beta beta' gamma gamma'")->expected(4)->required();

    auto* gl = app.add_subcommand("grouplaw", "group-law checks");
    gl->require_subcommand(1);
    auto* gl_check = gl->add_subcommand("check", "associativity, inverses and derivative at the identity");
    int samples = 1000;
    gl_check->add_option("--samples", samples)->check(CLI::PositiveNumber);

    double m0 = 1, alpha = 1, lambda = 1, ell = 0, tau = 1;
    int two_s = 0, two_j = 0, cutoff = 8, levels = 6;
    auto add_rep = [&](CLI::App* sub) {
        sub->add_option("--m0", m0);
        sub->add_option("--alpha", alpha);
        sub->add_option("--ell", ell);
        sub->add_option("--cutoff", cutoff)->check(CLI::Range(1, 40));
    };
    auto* spec = app.add_subcommand("spectrum", "spectrum of the internal Hamiltonian");
    add_rep(spec);
    spec->add_option("--levels", levels)->check(CLI::PositiveNumber);

    auto* evo = app.add_subcommand("evolve", "evolve a state in the internal time");
    add_rep(evo);
    evo->add_option("--tau", tau);
    std::string initial = "ground";
    evo->add_option("--initial", initial, "ground | random")->check(CLI::IsMember({"ground", "random"}));

    auto* oracle = app.add_subcommand("oracle", "representation oracles");
    oracle->require_subcommand(1);
    auto* gens = oracle->add_subcommand("generators", "compare the printed generators with the group action");
    gens->add_option("--m0", m0);
    gens->add_option("--alpha", alpha);
    gens->add_option("--lambda", lambda);
    gens->add_option("--ell", ell);
    gens->add_option("--two-s", two_s);
    gens->add_option("--two-j", two_j)->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify-all", "run every acceptance claim");
    int only = 0;
    verify->add_option("--criterion", only)->check(CLI::Range(1, criterion_count));

    auto* exp = app.add_subcommand("export", "write an algebra definition file");
    add_algebra(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    Json report;
    int code = Exit::ok;
    try {
        if (*jacobi) {
            const LieAlgebra g = select_algebra(algebra);
            const auto v = jacobi_check(g, workers);
            report = {{"algebra", g.name()}, {"dimension", g.dimension()}, {"violations", v.size()}};
            Json list = Json::array();
            for (std::size_t i = 0; i < std::min<std::size_t>(v.size(), 20); ++i)
                list.push_back({g.label(v[i].i).name(), g.label(v[i].j).name(), g.label(v[i].k).name()});
            if (!v.empty()) report["first_violations"] = list;
            std::cerr << g.dimension() << "-dim, " << v.size() << " violations\n";
            code = v.empty() ? Exit::ok : Exit::check_failed;
        } else if (*coh) {
            const LieAlgebra g = select_algebra(algebra);
            CohomologyReport r;
            if (route == "reduction") {
                if (coeffs != "adjoint" || (g.dimension() != 51 && g.dimension() != 41))
                    throw std::invalid_argument("the reduction route needs the 51- or 41-dim algebra, adjoint coefficients");
                r = IdealReduction::newstein(g).cohomology(degree);
            } else {
                BettiOptions o;
                o.rank.method = method == "modular" ? RankMethod::Modular : RankMethod::Exact;
                o.rank.prime_count = primes;
                o.rank.workers = workers;
                r = betti(g, coeffs == "adjoint" ? CoefficientModule::adjoint(g) : CoefficientModule::trivial(g), degree,
                          o);
            }
            report = cohomology_record(r);
            std::cerr << "H^" << degree << " = " << r.betti << "\n";
        } else if (*classify_cmd) {
            ExactExtensionMatrix m{parse_entry(entries[0]), parse_entry(entries[1]), parse_entry(entries[2]),
                                   parse_entry(entries[3])};
            const Classification c = classify(m);
            report = {{"case", c.case_id}, {"jordan", jordan_name(c.jordan)}, {"rescale", c.rescale}};
            Json params = Json::object();
            if (c.zeta2) params["zeta2"] = *c.zeta2;
            if (c.phi) params["phi"] = *c.phi;
            if (c.case_id == 8) params["jordan_sign"] = c.jordan_sign;
            report["parameters"] = params;
            report["canonical"] = mat(c.canonical);
            report["printed_match"] = c.printed_match;
            report["description"] = c.describe();
            std::cerr << c.describe() << "\n";
        } else if (*gl_check) {
            std::mt19937 rng(seed);
            double assoc = 0, inv = 0, assoc_ext = 0, inv_ext = 0;
            GroupElement first;
            ExtendedGroupElement first_ext;
            for (int t = 0; t < samples; ++t) {
                const auto a = random_group_element(rng), b = random_group_element(rng),
                           c = random_group_element(rng);
                if (t == 0) first = a;
                assoc = std::max(assoc, deviation(compose(compose(a, b), c), compose(a, compose(b, c))));
                inv = std::max(inv, deviation(compose(a, inverse(a)), identity_element()));
                const auto x = random_extended_element(rng), y = random_extended_element(rng),
                           z = random_extended_element(rng);
                if (t == 0) first_ext = x;
                assoc_ext = std::max(assoc_ext, deviation(compose_extended(compose_extended(x, y), z),
                                                          compose_extended(x, compose_extended(y, z))));
                inv_ext = std::max(inv_ext,
                                   deviation(compose_extended(x, inverse_extended(x)), ExtendedGroupElement{}));
            }
            const double d = structure_constant_defect(build_newstein());
            const double d7 = structure_constant_defect(build_extended(ExtensionClass{7}));
            report = {{"seed", seed},
                      {"samples", samples},
                      {"associativity", assoc},
                      {"inverse", inv},
                      {"extended_associativity", assoc_ext},
                      {"extended_inverse", inv_ext},
                      {"derivative_defect", d},
                      {"extended_derivative_defect", d7},
                      {"sample_element", element_record(first)},
                      {"sample_extended_element", element_record(first_ext)}};
            const bool pass = std::max({assoc, inv, assoc_ext, inv_ext}) <= 1e-9 && std::max(d, d7) <= 1e-5;
            std::cerr << "max deviation " << std::max({assoc, inv, assoc_ext, inv_ext}) << "\n";
            code = pass ? Exit::ok : Exit::check_failed;
        } else if (*spec) {
            const RepParams p = rep_params(m0, alpha, 1, ell, 0, 0);
            const FockBasis basis(cutoff);
            Json rows = Json::array();
            int n = 0;
            for (const auto& l : spectrum(p, basis)) {
                if (!l.interior || n++ >= levels) continue;
                // snap -0.0 so the report is byte-stable
                const double e = std::abs(l.eigenvalue) < 1e-12 ? 0.0 : l.eigenvalue;
                rows.push_back({{"eigenvalue", e}, {"multiplicity", l.multiplicity}});
                std::cerr << e << "\t" << l.multiplicity << "\n";
            }
            report = {{"m0", m0}, {"alpha", alpha}, {"ell", ell}, {"cutoff", cutoff}, {"levels", rows}};
        } else if (*evo) {
            const RepParams p = rep_params(m0, alpha, 1, ell, 0, 0);
            const FockBasis basis(cutoff);
            WaveFunction psi = ground_state(basis);
            if (initial == "random") {
                std::mt19937 rng(seed);
                std::normal_distribution<double> n(0, 1);
                for (int i = 0; i < basis.size(); ++i) psi(i) = {n(rng), n(rng)};
                psi.normalize();
            }
            const Eigen::MatrixXcd h = hamiltonian_K(p, basis).matrix;
            const WaveFunction out = evolve(psi, tau, p, basis);
            const double e0 = psi.dot(h * psi).real(), e1 = out.dot(h * out).real();
            report = {{"tau", tau},
                      {"initial", initial},
                      {"norm", out.norm()},
                      {"energy_initial", e0},
                      {"energy_final", e1},
                      {"overlap_abs", std::abs(psi.dot(out))}};
            code = std::abs(out.norm() - 1) <= 1e-10 && std::abs(e1 - e0) <= 1e-10 ? Exit::ok : Exit::check_failed;
        } else if (*gens) {
            const RepParams p = rep_params(m0, alpha, lambda, ell, two_s, two_j);
            const GeneratorReport r = generator_oracle(p, seed);
            Json rows = Json::array();
            for (const auto& row : r.rows) {
                Json j{{"generator", row.label},
                       {"printed_deviation", row.printed_deviation},
                       {"corrected_deviation", row.corrected_deviation},
                       {"status", row.flagged ? "flagged" : (row.consistent ? "match" : "mismatch")}};
                if (!row.correction.empty()) j["correction"] = row.correction;
                rows.push_back(j);
            }
            report = {{"tolerance", r.tolerance}, {"consistent", r.all_consistent()}, {"generators", rows}};
            code = r.all_consistent() ? Exit::ok : Exit::check_failed;
        } else if (*verify) {
            VerifyOptions o;
            o.seed = seed;
            o.workers = workers;
            Json claims = Json::array();
            bool all = true;
            for (int id = 1; id <= criterion_count; ++id) {
                if (only != 0 && id != only) continue;
                const CriterionResult r = run_criterion(id, o);
                if (!r.pass && !r.conditional) all = false;
                claims.push_back(criterion_record(r));
                std::cerr << (r.pass ? "PASS " : (r.conditional ? "COND " : "FAIL ")) << r.key << ": " << r.computed
                          << "\n";
            }
            report = {{"claims", claims}, {"all_nonconditional_match", all}};
            code = all ? Exit::ok : Exit::check_failed;
        } else if (*exp) {
            const LieAlgebra g = select_algebra(algebra);
            if (output.empty()) {
                std::cout << algebra_to_json(g);
            } else {
                try {
                    write_algebra_file(output, g);
                } catch (const std::runtime_error& e) {
                    throw IoFailure(e.what());
                }
            }
            return Exit::ok;
        }
    } catch (const UnknownAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::unknown_algebra;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::io_failure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::invalid_parameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::internal_failure;
    }

    const std::string text = report.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output);
        if (!(f << text)) {
            std::cerr << "error: cannot write " << output << "\n";
            return Exit::io_failure;
        }
    }
    return code;
}

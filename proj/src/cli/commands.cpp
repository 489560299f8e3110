#include "bergex/cli.hpp"

#include "bergex/certify.hpp"
#include "bergex/errors.hpp"
#include "bergex/jackson.hpp"
#include "bergex/json_io.hpp"
#include "bergex/quadrature.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace bergex::cli {

namespace {

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void emit(const json& j, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << j.dump(2) << '\n';
}

struct SolveFlags {
    std::string input;
    std::string output;
    int degree = 20;
    double tol = 1e-9;
    int max_iter = 100000;
    std::size_t quad_radial = 0;
    std::size_t quad_angular = 0;
    bool real_coeffs = false;
};

int cmd_solve(const SolveFlags& f, std::ostream& out, std::ostream& err)
{
    SolutionRecord rec{problem_from_json(read_json_file(f.input)), f.degree, {}, true, {}};
    rec.options.kkt_tol = f.tol;
    rec.options.max_iterations = f.max_iter;
    rec.options.quad_radial = f.quad_radial;
    rec.options.quad_angular = f.quad_angular;
    rec.options.real_coefficients = f.real_coeffs;
    try {
        rec.solution = solve_extremal(rec.problem.kernel, rec.problem.params, f.degree, rec.options);
    } catch (const ConvergenceError& e) {
        rec.converged = false;
        rec.solution = {e.best, e.value, e.residual, e.iterations};
        emit(to_json(rec), f.output, out);
        err << "bergex: " << e.what() << " (residual " << e.residual << " after " << e.iterations
            << " iterations)\n";
        return not_converged;
    }
    emit(to_json(rec), f.output, out);
    return ok;
}

struct CertifyFlags {
    std::string input;
    std::string output;
    std::string scaling = "first-coeff";
    bool uniform = false;
    std::optional<double> eta;
};

int cmd_certify(const CertifyFlags& f, std::ostream& out, std::ostream& err)
{
    const SolutionRecord rec = solution_from_json(read_json_file(f.input));
    const SpaceParams& params = rec.problem.params;
    if (params.p() == 2.0) {
        err << "bergex: p = 2 is closed-form (F = k / ||k||); no residual certificate is issued\n";
        return hypothesis_failure;
    }
    if (!params.even_p()) throw InputError("field 'p': certification needs an even integer exponent");
    const Scaling scaling = parse_scaling(f.scaling);
    const Polynomial& G = rec.solution.F;
    if (G.is_zero()) throw InputError("field 'F' must be a nonzero polynomial");
    const int kdeg = params.half_p() * std::max(G.degree(), 0);
    const DiskRule rule = default_rule(params.alpha(), std::max(kdeg, rec.problem.kernel.degree()));
    const KernelResidual res = kernel_residual(G, rec.problem.kernel, params, rule, scaling);
    const BergmanCertificate cert = BergmanCertificate::issue(params, res.c_hat, res.delta, scaling);

    const Polynomial k_hat = rec.problem.kernel * cplx(res.c_hat);
    const double pairing_value = std::real(pairing(G * cplx(1.0 / res.g_norm), k_hat, params.alpha()));
    std::optional<UniformCertificate> uni;
    if (f.uniform) {
        if (!params.holder_range_ok()) {
            err << "bergex: uniform certificate needs -1 < alpha < 0 for p >= 2 or -1 < alpha < p - 2 for 1 < p < 2"
                << " (got p = " << params.p() << ", alpha = " << params.alpha() << ")\n";
            return hypothesis_failure;
        }
        const double B = sup_modulus(theta_derivative(k_hat, 2), std::size_t{1} << 18, true);
        uni = uniform_certificate(cert, B, params, f.eta.value_or(default_eta(params.p(), params.alpha())));
    }
    json j = to_json(cert, &res, uni ? &*uni : nullptr);
    j["constants"]["pairing_F_khat"] = pairing_value;
    if (pairing_value < 1.0)
        j["warnings"].push_back("pairing of the normalized F_n with c_hat k is below 1; scale k_hat up before "
                                "relying on the uniform bound");
    emit(j, f.output, out);
    return ok;
}

struct ConstantsFlags {
    std::optional<double> beta;
    std::optional<int> K;
    std::vector<double> holder;
    std::string output;
};

int cmd_constants(const ConstantsFlags& f, std::ostream& out)
{
    json j = json::object();
    if (!f.beta && !f.K && f.holder.empty()) throw InputError("constants: give --beta, --K or --holder");
    if (f.beta) {
        const auto a = const_A_beta(*f.beta);
        j["beta"] = *f.beta;
        j["A_beta"] = {{"value", a.value}, {"error", a.error}};
    }
    if (f.K) {
        const int K = *f.K;
        if (K < 0 || K > 3) throw InputError("field '--K' must lie in 0..3");
        const auto c = jackson_constants();
        j["K"] = K;
        j["C_K"] = {{"value", c.C[K].value}, {"error", c.C[K].error}};
        if (K <= 2) j["B_K"] = c.B[K];
        if (K <= 1) j["Btilde_K"] = c.Btilde[K];
    }
    if (!f.holder.empty()) {
        if (f.holder.size() != 4) throw InputError("--holder takes p alpha eta B");
        const double p = f.holder[0], alpha = f.holder[1], eta = f.holder[2], B = f.holder[3];
        (void)SpaceParams::make(p, alpha);
        const double beta = holder_exponent(p, alpha, eta);
        const auto hc = holder_constant(B, p, alpha, eta);
        j["holder"] = {{"p", p}, {"alpha", alpha}, {"eta", eta}, {"B", B},
                       {"exponent", beta}, {"constant", hc.value}, {"rectified", hc.rectified}};
    }
    emit(j, f.output, out);
    return ok;
}

ReproduceRow within(std::string name, double reference, double computed, double tol)
{
    std::ostringstream ref, crit;
    ref << std::setprecision(8) << reference;
    crit << "|diff| <= " << tol;
    return {std::move(name), ref.str(), computed, crit.str(), std::abs(computed - reference) <= tol};
}

ReproduceRow below(std::string name, std::string reference, double computed, double limit)
{
    std::ostringstream crit;
    crit << "< " << limit;
    return {std::move(name), std::move(reference), computed, crit.str(), computed < limit};
}

} // namespace

std::vector<ReproduceRow> reproduce_example()
{
    const auto params = SpaceParams::make(4.0, -0.5);
    const Polynomial k{1.0, 1.5, 1.875};
    const auto s20 = solve_extremal(k, params, 20);
    const auto s25 = solve_extremal(k, params, 25);

    std::vector<ReproduceRow> rows;
    rows.push_back(within("functional value (n=20)", 1.78785, s20.value, 5e-3));
    const std::pair<int, double> coeffs[] = {{0, 0.431458},  {1, 0.496144},   {2, 0.860246},
                                             {3, -0.341597}, {4, -0.0225992}, {5, 0.110915},
                                             {6, -0.0520239}, {7, -0.00952809}, {8, 0.0235908},
                                             {15, -0.000599527}};
    for (const auto& [j, ref] : coeffs)
        rows.push_back(within("F_20 coefficient z^" + std::to_string(j), ref, std::real(s20.F[j]), 5e-3));

    const DiskRule rule = default_rule(params.alpha(), 40);
    const auto res = kernel_residual(s20.F, k, params, rule);
    rows.push_back(within("k~ coefficient z^0", 0.559332, std::real(res.k_tilde[0]), 2e-3));
    rows.push_back(within("k~ coefficient z^1", 0.838998, std::real(res.k_tilde[1]), 2e-3));
    rows.push_back(within("k~ coefficient z^2", 1.04875, std::real(res.k_tilde[2]), 2e-3));
    rows.push_back(below("|k~ coefficient z^40|", "1.55e-9", std::abs(res.k_tilde[40]), 1e-8));
    rows.push_back(within("c_hat", 0.559332, res.c_hat, 2e-3));
    {
        ReproduceRow r{"delta = ||k~ - c_hat k||_{4/3,-1/2}", "1.8e-5", res.delta, "in [0.9e-5, 3.6e-5]",
                       res.delta >= 0.9e-5 && res.delta <= 3.6e-5};
        rows.push_back(r);
    }
    const auto cert = BergmanCertificate::issue(params, res.c_hat, res.delta);
    rows.push_back(within("Bergman bound ||F - F_20||", 0.185, cert.bound, 0.01));
    const double B = sup_modulus(theta_derivative(k * cplx(res.c_hat), 2), std::size_t{1} << 18, true);
    rows.push_back(within("sup |D_theta^2 k_hat|", 5.034, B, 1e-3));
    const auto uni = uniform_certificate(cert, B, params, 0.0);
    rows.push_back(within("uniform bound ||F - F_20||_inf", 5181.0, uni.eps, 518.1));
    const Polynomial diff = s25.F - s20.F;
    rows.push_back(below("||F_25 - F_20||_{4,-1/2}", "1.85e-5", norm_even_p(diff, params), 1e-4));
    rows.push_back(below("||F_25 - F_20||_inf (grid)", "6e-5", sup_modulus(diff), 1e-3));
    return rows;
}

void print_rows(const std::vector<ReproduceRow>& rows, bool csv, std::ostream& out)
{
    if (csv) {
        out << "quantity,reference,computed,criterion,status\n";
        for (const auto& r : rows)
            out << '"' << r.quantity << "\"," << r.reference << ',' << std::setprecision(10) << r.computed << ",\""
                << r.criterion << "\"," << (r.pass ? "PASS" : "FAIL") << '\n';
        return;
    }
    out << std::left << std::setw(40) << "quantity" << std::setw(13) << "reference" << std::setw(18) << "computed"
        << std::setw(24) << "criterion" << "status\n";
    for (const auto& r : rows)
        out << std::left << std::setw(40) << r.quantity << std::setw(13) << r.reference << std::setw(18)
            << std::setprecision(10) << r.computed << std::setw(24) << r.criterion << (r.pass ? "PASS" : "FAIL")
            << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Extremal problems in weighted Bergman spaces: solver and error certificates", "bergex"};
    app.require_subcommand(1);

    SolveFlags solve;
    auto* s = app.add_subcommand("solve", "compute the degree-n extremal polynomial");
    s->add_option("problem", solve.input, "problem JSON {\"p\", \"alpha\", \"kernel\": {\"coeffs\"}}")->required();
    s->add_option("-o,--out", solve.output, "output file (default stdout)");
    s->add_option("-n,--degree", solve.degree, "polynomial degree")->check(CLI::NonNegativeNumber);
    s->add_option("--tol", solve.tol, "KKT residual tolerance")->check(CLI::PositiveNumber);
    s->add_option("--max-iter", solve.max_iter, "iteration budget")->check(CLI::PositiveNumber);
    s->add_option("--quad-radial", solve.quad_radial, "radial nodes for non-even p");
    s->add_option("--quad-angular", solve.quad_angular, "angular nodes for non-even p");
    s->add_flag("--real-coeffs", solve.real_coeffs, "restrict to real coefficients");

    CertifyFlags cert;
    auto* c = app.add_subcommand("certify", "issue a posteriori error certificates for a solution");
    c->add_option("solution", cert.input, "solution JSON written by `solve`")->required();
    c->add_option("-o,--out", cert.output, "output file (default stdout)");
    c->add_option("--scaling", cert.scaling, "first-coeff or least-squares")
        ->check(CLI::IsMember({"first-coeff", "least-squares"}));
    c->add_flag("--uniform", cert.uniform, "also issue the sup-norm certificate");
    c->add_option("--eta", cert.eta, "Hölder exponent slack for p < 2");

    ConstantsFlags consts;
    auto* k = app.add_subcommand("constants", "evaluate Jackson and Hölder constants");
    k->add_option("--beta", consts.beta, "A_beta for 0 < beta < 1");
    k->add_option("--K", consts.K, "C_K, B_K, Btilde_K for K in 0..3");
    k->add_option("--holder", consts.holder, "p alpha eta B")->expected(4);
    k->add_option("-o,--out", consts.output, "output file (default stdout)");

    bool csv = false;
    auto* r = app.add_subcommand("reproduce", "rerun the p = 4, alpha = -1/2 worked example");
    r->add_flag("--csv", csv, "emit CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*s) return cmd_solve(solve, out, err);
        if (*c) return cmd_certify(cert, out, err);
        if (*k) return cmd_constants(consts, out);
        const auto rows = reproduce_example();
        print_rows(rows, csv, out);
        return ok;
    } catch (const HypothesisError& e) {
        err << "bergex: " << e.what() << '\n';
        return hypothesis_failure;
    } catch (const CertificateError& e) {
        err << "bergex: certificate failure: " << e.what() << '\n';
        return hypothesis_failure;
    } catch (const ConvergenceError& e) {
        err << "bergex: " << e.what() << '\n';
        return not_converged;
    } catch (const Error& e) {
        err << "bergex: " << e.what() << '\n';
        return input_error;
    } catch (const json::exception& e) {
        err << "bergex: malformed input: " << e.what() << '\n';
        return input_error;
    }
}

} // namespace bergex::cli

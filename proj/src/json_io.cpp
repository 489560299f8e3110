#include "bergex/json_io.hpp"

#include "bergex/errors.hpp"

#include <cmath>

namespace bergex {

namespace {

const json& require(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) throw InputError("field '" + where + "' must be an object");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError("missing field '" + (where.empty() ? "" : where + ".") + key + "'");
    return *it;
}

double number(const json& j, const std::string& field)
{
    if (!j.is_number()) throw InputError("field '" + field + "' must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError("field '" + field + "' must be finite");
    return v;
}

json coeff_array(const Polynomial& f)
{
    json arr = json::array();
    for (const cplx c : f.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

} // namespace

json to_json(const Polynomial& f)
{
    return {{"coeffs", coeff_array(f)}};
}

Polynomial polynomial_from_json(const json& j, const std::string& field)
{
    const json& arr = require(j, "coeffs", field);
    const std::string base = field + ".coeffs";
    if (!arr.is_array()) throw InputError("field '" + base + "' must be an array");
    std::vector<cplx> c;
    c.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = base + "[" + std::to_string(i) + "]";
        const json& e = arr[i];
        if (e.is_number()) {
            c.emplace_back(number(e, at), 0.0);
        } else if (e.is_array() && e.size() == 2) {
            c.emplace_back(number(e[0], at + "[0]"), number(e[1], at + "[1]"));
        } else {
            throw InputError("field '" + at + "' must be a number or a [re, im] pair");
        }
    }
    return Polynomial(std::move(c));
}

json to_json(const Problem& pb)
{
    return {{"p", pb.params.p()}, {"alpha", pb.params.alpha()}, {"kernel", to_json(pb.kernel)}};
}

Problem problem_from_json(const json& j)
{
    if (!j.is_object()) throw InputError("problem must be a JSON object");
    const double p = number(require(j, "p", ""), "p");
    const double alpha = number(require(j, "alpha", ""), "alpha");
    SpaceParams params = [&] {
        try {
            return SpaceParams::make(p, alpha);
        } catch (const DomainError& e) {
            throw InputError(std::string("fields 'p'/'alpha': ") + e.what());
        }
    }();
    Polynomial kernel = polynomial_from_json(require(j, "kernel", ""), "kernel");
    if (kernel.is_zero()) throw InputError("field 'kernel' must be a nonzero polynomial");
    return {params, std::move(kernel)};
}

json to_json(const SolutionRecord& s)
{
    json j = to_json(s.problem);
    j["type"] = "solution";
    j["degree"] = s.degree;
    j["F"] = to_json(s.solution.F);
    j["value"] = s.solution.value;
    j["kkt_residual"] = s.solution.kkt_residual;
    j["iterations"] = s.solution.iterations;
    j["converged"] = s.converged;
    j["options"] = {{"kkt_tol", s.options.kkt_tol},
                    {"max_iterations", s.options.max_iterations},
                    {"real_coefficients", s.options.real_coefficients},
                    {"quad_radial", s.options.quad_radial},
                    {"quad_angular", s.options.quad_angular}};
    return j;
}

SolutionRecord solution_from_json(const json& j)
{
    SolutionRecord s{problem_from_json(j), 0, {}, true, {}};
    const json& deg = require(j, "degree", "");
    if (!deg.is_number_integer() || deg.get<int>() < 0) throw InputError("field 'degree' must be a nonnegative integer");
    s.degree = deg.get<int>();
    s.solution.F = polynomial_from_json(require(j, "F", ""), "F");
    s.solution.value = number(require(j, "value", ""), "value");
    s.solution.kkt_residual = number(require(j, "kkt_residual", ""), "kkt_residual");
    if (auto it = j.find("iterations"); it != j.end() && it->is_number_integer()) s.solution.iterations = it->get<int>();
    if (auto it = j.find("converged"); it != j.end()) {
        if (!it->is_boolean()) throw InputError("field 'converged' must be a boolean");
        s.converged = it->get<bool>();
    }
    if (auto it = j.find("options"); it != j.end() && it->is_object()) {
        s.options.kkt_tol = it->value("kkt_tol", s.options.kkt_tol);
        s.options.max_iterations = it->value("max_iterations", s.options.max_iterations);
        s.options.real_coefficients = it->value("real_coefficients", s.options.real_coefficients);
        s.options.quad_radial = it->value("quad_radial", s.options.quad_radial);
        s.options.quad_angular = it->value("quad_angular", s.options.quad_angular);
    }
    return s;
}

json to_json(const BergmanCertificate& c, const KernelResidual* residual, const UniformCertificate* uniform)
{
    json constants = {{"scaling", std::string(to_string(c.scaling))},
                      {"branch", c.above_two() ? "p>2" : "p<2"}};
    if (residual) {
        constants["g_norm"] = residual->g_norm;
        constants["k_tilde"] = to_json(residual->k_tilde);
    }
    json warnings = c.warnings;
    if (uniform) {
        constants["beta"] = uniform->beta;
        constants["eta"] = uniform->eta;
        constants["B"] = uniform->B;
        constants["C_first"] = uniform->C_first;
        constants["C_second"] = uniform->C_second;
        constants["C_total"] = uniform->C_total;
        constants["eps"] = uniform->eps;
        constants["valid"] = uniform->valid;
        for (const auto& w : uniform->warnings) warnings.push_back(w);
    }
    return {{"type", uniform ? "uniform" : "bergman"},
            {"p", c.p},
            {"alpha", c.alpha},
            {"c_hat", c.c_hat},
            {"delta", c.delta},
            {"bound", c.bound},
            {"constants", constants},
            {"warnings", warnings}};
}

json to_json(const SectorCertificate& c)
{
    return {{"type", "sector"},
            {"p", c.p},
            {"alpha", c.alpha},
            {"bound", c.bergman_bound},
            {"constants",
             {{"theta", c.theta},
              {"d", c.d},
              {"eta", c.eta},
              {"C_p_alpha", c.C_p_alpha},
              {"C_theta", c.C_theta},
              {"B", c.B},
              {"beta", c.beta},
              {"holder_C", c.holder_C},
              {"holder_D", c.holder_D},
              {"holder_samples", c.holder_samples},
              {"eps_inf", c.eps_inf},
              {"eps_valid", c.eps_valid},
              {"lambda", c.lambda},
              {"arg_margin", c.range.arg_margin},
              {"modulus_margin", c.range.modulus_margin},
              {"range_samples", c.range.samples}}},
            {"nonvanishing", c.nonvanishing},
            {"warnings", c.warnings}};
}

json to_json(const JacksonConstants& c)
{
    auto est = [](const EstimatedValue& v) { return json{{"value", v.value}, {"error", v.error}}; };
    json j = {{"C", json::array()}, {"B", c.B}, {"Btilde", c.Btilde}};
    for (const auto& v : c.C) j["C"].push_back(est(v));
    if (c.beta && c.A_beta) {
        j["beta"] = *c.beta;
        j["A_beta"] = est(*c.A_beta);
    }
    return j;
}

} // namespace bergex

#include "bergex/certify.hpp"
#include "bergex/cli.hpp"
#include "bergex/errors.hpp"
#include "bergex/json_io.hpp"
#include "support.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bergex;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run bergex_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "bergex");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "bergex_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("polynomial and problem JSON")
{
    const Polynomial f{cplx(0.1, -0.3), 1.0 / 3.0};
    CHECK(polynomial_from_json(json::parse(to_json(f).dump()), "f") == f);
    CHECK(polynomial_from_json(json::parse(R"({"coeffs": [1, [2, 0.5]]})"), "f") == Polynomial{1.0, cplx(2.0, 0.5)});

    const auto pb = problem_from_json(json::parse(R"({"p": 4, "alpha": -0.5, "kernel": {"coeffs": [1, 1.5, 1.875]}})"));
    CHECK(pb.params.p() == 4.0);
    CHECK(pb.kernel == test::example_kernel());

    auto fails_on = [](const char* text, const char* field) {
        try {
            problem_from_json(json::parse(text));
        } catch (const InputError& e) {
            return std::string(e.what()).find(field) != std::string::npos;
        }
        return false;
    };
    CHECK(fails_on(R"({"alpha": 0, "kernel": {"coeffs": [1]}})", "'p'"));
    CHECK(fails_on(R"({"p": "four", "alpha": 0, "kernel": {"coeffs": [1]}})", "'p'"));
    CHECK(fails_on(R"({"p": 4, "alpha": 0, "kernel": {"coeffs": [1, [2]]}})", "kernel.coeffs[1]"));
    CHECK(fails_on(R"({"p": 4, "alpha": 0, "kernel": {}})", "kernel.coeffs"));
    CHECK(fails_on(R"({"p": 4, "alpha": -3, "kernel": {"coeffs": [1]}})", "alpha"));
}

TEST_CASE("solve then certify from files matches the in-process pipeline")
{
    const auto problem = scratch("problem.json");
    const auto solution = scratch("solution.json");
    const auto certificate = scratch("certificate.json");
    write(problem, R"({"p": 4, "alpha": -0.5, "kernel": {"coeffs": [1, 1.5, 1.875]}})");

    auto r = bergex_cli({"solve", problem.string(), "--degree", "20", "-o", solution.string()});
    REQUIRE(r.code == 0);
    const auto rec = solution_from_json(json::parse(std::ifstream(solution)));
    CHECK(std::abs(rec.solution.value - 1.78785) < 5e-3);

    const auto direct = solve_extremal(test::example_kernel(), test::example_params(), 20);
    CHECK(rec.solution.F == direct.F);
    CHECK(rec.solution.value == direct.value);

    r = bergex_cli({"certify", solution.string(), "--uniform", "-o", certificate.string()});
    REQUIRE(r.code == 0);
    const json cert = json::parse(std::ifstream(certificate));
    CHECK(cert["type"] == "uniform");
    const auto res = kernel_residual(direct.F, test::example_kernel(), test::example_params(),
                                     default_rule(-0.5, 40));
    CHECK(cert["delta"].get<double>() == res.delta);
    CHECK(cert["c_hat"].get<double>() == res.c_hat);
    CHECK(std::abs(cert["bound"].get<double>() - 0.185) < 0.01);
    CHECK(cert["constants"]["beta"].get<double>() == 0.125);

    BergmanCertificate b;
    b.p = cert["p"];
    b.alpha = cert["alpha"];
    b.c_hat = cert["c_hat"];
    b.delta = cert["delta"];
    b.bound = cert["bound"];
    CHECK(b.revalidate());

    r = bergex_cli({"certify", solution.string(), "--scaling", "least-squares"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["constants"]["scaling"] == "least-squares");
}

TEST_CASE("exit codes")
{
    const auto p2 = scratch("p2.json");
    const auto p2sol = scratch("p2sol.json");
    write(p2, R"({"p": 2, "alpha": 0, "kernel": {"coeffs": [1, 2]}})");
    auto r = bergex_cli({"solve", p2.string(), "-n", "4", "-o", p2sol.string()});
    CHECK(r.code == 0);
    CHECK(solution_from_json(json::parse(std::ifstream(p2sol))).solution.iterations == 1);
    r = bergex_cli({"certify", p2sol.string()});
    CHECK(r.code == 3);
    CHECK(r.err.find("p = 2 is closed-form") != std::string::npos);

    const auto bad = scratch("bad.json");
    write(bad, R"({"p": 4, "alpha": 0, "kernel": {"coeffs": "x"}})");
    r = bergex_cli({"solve", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("kernel.coeffs") != std::string::npos);
    write(bad, "{not json");
    CHECK(bergex_cli({"solve", bad.string()}).code == 1);
    CHECK(bergex_cli({"solve", scratch("missing.json").string()}).code == 1);
    CHECK(bergex_cli({"frobnicate"}).code == 1);

    const auto pos = scratch("positive_alpha.json");
    const auto possol = scratch("positive_alpha_sol.json");
    write(pos, R"({"p": 4, "alpha": 0.5, "kernel": {"coeffs": [1, 0.5]}})");
    REQUIRE(bergex_cli({"solve", pos.string(), "-n", "6", "-o", possol.string()}).code == 0);
    CHECK(bergex_cli({"certify", possol.string()}).code == 0);
    r = bergex_cli({"certify", possol.string(), "--uniform"});
    CHECK(r.code == 3);
    CHECK(r.err.find("alpha") != std::string::npos);

    const auto hard = scratch("hard.json");
    write(hard, R"({"p": 4, "alpha": -0.5, "kernel": {"coeffs": [1, 1.5, 1.875]}})");
    const auto partial = scratch("partial.json");
    r = bergex_cli({"solve", hard.string(), "-n", "20", "--max-iter", "3", "-o", partial.string()});
    CHECK(r.code == 2);
    CHECK(solution_from_json(json::parse(std::ifstream(partial))).converged == false);
}

TEST_CASE("constants command")
{
    auto r = bergex_cli({"constants", "--beta", "0.5"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(json::parse(r.out)["A_beta"]["value"].get<double>() - 2.3886292429983) < 1e-10);
    r = bergex_cli({"constants", "--K", "0"});
    REQUIRE(r.code == 0);
    const json k0 = json::parse(r.out);
    CHECK(k0.contains("B_K"));
    CHECK(k0.contains("Btilde_K"));
    r = bergex_cli({"constants", "--holder", "4", "-0.5", "0", "5.034"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["holder"]["exponent"].get<double>() == 0.125);
    CHECK(bergex_cli({"constants", "--beta", "1.5"}).code == 1);
    CHECK(bergex_cli({"constants", "--K", "7"}).code == 1);
    CHECK(bergex_cli({"constants", "--holder", "4", "0.5", "0", "1"}).code == 3);
}

TEST_CASE("reproduce command")
{
    auto r = bergex_cli({"reproduce", "--csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("quantity,reference,computed,criterion,status", 0) == 0);
    CHECK(r.out.find("functional value") != std::string::npos);
}

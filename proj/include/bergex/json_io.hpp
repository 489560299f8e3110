#pragma once

#include "bergex/certify.hpp"
#include "bergex/sector.hpp"
#include "bergex/solver.hpp"

#include "bergex/jackson.hpp"

#include "json.hpp"

#include <optional>

namespace bergex {

using json = nlohmann::json;

// Reals are written by nlohmann::json with 17 significant digits, so every
// double read back is bit-identical to the one written.

/// {"coeffs": [[re, im], ...]}; a bare number is accepted for a real coefficient.
json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const json& j, const std::string& field);

struct Problem {
    SpaceParams params;
    Polynomial kernel;
};
json to_json(const Problem& pb);
/// Throws InputError naming the first missing or malformed field.
Problem problem_from_json(const json& j);

struct SolutionRecord {
    Problem problem;
    int degree = 0;
    ExtremalSolution solution;
    bool converged = true;
    SolverOptions options;
};
json to_json(const SolutionRecord& s);
SolutionRecord solution_from_json(const json& j);

json to_json(const BergmanCertificate& c, const KernelResidual* residual = nullptr,
             const UniformCertificate* uniform = nullptr);
json to_json(const SectorCertificate& c);
json to_json(const JacksonConstants& c);

} // namespace bergex

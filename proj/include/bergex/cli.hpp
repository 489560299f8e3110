#pragma once

#include "bergex/solver.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bergex::cli {

enum ExitCode : int { ok = 0, input_error = 1, not_converged = 2, hypothesis_failure = 3 };

/// Entry point of the `bergex` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct ReproduceRow {
    std::string quantity;
    std::string reference;
    double computed;
    std::string criterion;
    bool pass;
};

/// The p = 4, alpha = -1/2, k = 1 + 1.5z + 1.875z^2 pipeline at degrees 20 and 25,
/// compared against the published figures.
std::vector<ReproduceRow> reproduce_example();

void print_rows(const std::vector<ReproduceRow>& rows, bool csv, std::ostream& out);

} // namespace bergex::cli

#pragma once

#include "qsp/verma.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qsp {

// Exit codes of run().
enum ExitCode : int { kExitOk = 0, kExitVerifyFail = 1, kExitUsage = 2 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "q^n", "i*q^n" or "mu"
Scalar parse_mu_spec(const std::string& s);
// "dominant:i" needs mu and kappa; anything else is parsed as a scalar expression
Scalar parse_zeta_spec(const std::string& s, const Scalar& mu, int kappa);

}  // namespace qsp

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hstar/io.hpp"

namespace hstar {

PolytopeInfo describe(const Polytope& p);

/// hstar, boundary and interior numerators against hstar_from_counts.
VerifyReport verify_against_oracle(const Polytope& p);

/// Exit codes: 0 success, 1 computation error or oracle mismatch, 2 usage error.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hstar

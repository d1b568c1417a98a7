#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace qd {

/// "re" or "re,im" in the C locale. Throws std::invalid_argument.
std::complex<double> parse_complex(const std::string& text);

/// Comma-separated reals. Throws std::invalid_argument.
std::vector<double> parse_real_list(const std::string& text);

/// Runs a qdyn subcommand; `args` excludes the program name. Returns 0 on
/// success, 1 on a failed verification or numeric error, 2 on a flag error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace qd

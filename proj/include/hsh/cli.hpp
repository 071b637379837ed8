#ifndef HSH_CLI_HPP
#define HSH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

/// Command-line front end.
///
///   hsh eval        --index JSON --point t1,...,tN [--point ...] [--normalized]
///                   [--basis complex|real] [--format csv|json] [--output PATH]
///   hsh verify      --N N --lmax L [--orders o1,...,oN] [--h STEP] [--stencil 3|5]
///                   [--eigen-tol T] [--ortho-tol T] [--norm-tol T]
///                   [--max-N 5] [--max-lmax 6] [--force] [--format json|csv] [--output PATH]
///   hsh table       --N N --lmax L [--lmin L0] [--format csv|json] [--output PATH]
///   hsh pt-spectrum (--symmetric | --general) --mu MU [--kappa K] [--c C] --nmax N
///                   [--samples K --samples-output PATH] [--format csv|json] [--output PATH]
///
/// HSH_THREADS caps the number of verification worker threads.

namespace hsh::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 12 significant digits; integral values keep a trailing ".0"; -0 prints as 0.0.
std::string format_csv_number(double value);

}  // namespace hsh::cli

#endif  // HSH_CLI_HPP

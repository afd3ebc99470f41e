#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "surd/decimal.hpp"
#include "surd/interval.hpp"
#include "surd/rational.hpp"

namespace surd::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Replays the 1886 fourth-root problem: N = 10, x = 1.
struct TriposVerification {
  Rational approximation;
  Interval true_error;
  Interval formula_enclosure;
  /// |E| bound from the X = 0 end of the closed-form error.
  Rational bound;
  std::vector<Check> checks;

  bool passed() const;
};

TriposVerification verify_tripos();

struct SweepRow {
  Rational t;
  DecimalString taylor_error;
  DecimalString surd_error;
  /// Empty when the Taylor error is zero.
  std::string ratio;
  /// "true"/"false" for k = 4, empty otherwise.
  std::string in_window;
};

struct SweepOptions {
  int root = 4;
  Rational n = 1;
  Rational t_min = 0;
  Rational t_max{1, 20};
  int steps = 10;
  int digits = 24;
  int ratio_places = 12;
};

/// Rows at t_min + i*(t_max - t_min)/steps, i = 0..steps, with errors
/// normalized by the chosen N.
std::vector<SweepRow> sweep(const SweepOptions& options);

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 verification failure, 2 argument/domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surd::cli

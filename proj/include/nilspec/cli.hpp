// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_CLI_HPP
#define NILSPEC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nilspec/manifold.hpp"

namespace nilspec {

// Fully parsed batch-run description.  The manifold fields are shared by
// every command; family additionally reads b1/b2/r_values (it derives its
// own A, r, w2 from them) and example5d reads b2/g1/g2 for the band
// operator plus aX/aY1/aY2 for the constant block.
struct RunConfig {
  std::string command;       // spectrum | eta | verify | family | example5d
  Heisenberg3 manifold;
  double window = 1.0;       // halfwidth about the spectral symmetry point
  std::int64_t p_cap = -1;   // ladder depth; -1 = per-command default
  std::string output;        // write here when nonempty, else to the stream
  std::string format = "csv";  // csv | json
  bool float_mode = false;

  // family: A = b1 r and w2 = b2 sqrt(r) over r_values.
  double b1 = 1.0;
  double b2 = 1.0;
  std::vector<double> r_values;

  // example5d: band invariants (g1, g2) and constant-block parameters.
  double g1 = 1.0;
  double g2 = 0.0;
  double aX = 0.0;
  double aY1 = 0.0;
  double aY2 = 0.0;
};

// Parses a flat key=value document, or a JSON object when the first
// non-space byte is '{'.  Keys: command, A, r, w2, m_v, m_w, eps, window,
// p_cap, output, format, float_mode, b1, b2, r_values, g1, g2, aX, aY1,
// aY2.  Unknown or duplicate keys are rejected.  Exact manifold fields
// take rational strings ("3/2"); a decimal literal denotes the exact
// dyadic value of its double reading; with float_mode=true they are kept
// as plain doubles and downstream membership tests switch to tolerance
// bands.  eps is three comma-separated signs, e.g. "+,+,-".  r_values is
// a comma-separated list (or a JSON array).  The command key may be
// omitted (the binary supplies it positionally); when present it must be
// valid.  The manifold is validated before returning.
RunConfig parse_config(const std::string& text);

// Config-format serialization of a manifold record; parse_config applied
// to the result (plus a command line) reproduces the record exactly.
std::string manifold_to_config(const Heisenberg3& h);

// Converts the manifold parameters to plain doubles, as the --float flag
// of the binary does after the config has already been parsed.
void force_float_mode(RunConfig& config);

// Executes the configured command, writing the result table to `out` (or
// to config.output when set) in the configured format:
//   spectrum  -> rows eigenvalue, multiplicity, orbit_kind, orbit_params,
//                sorted ascending; eigenvalues carry 17 significant digits
//   eta       -> the eta report with its count breakdown
//   verify    -> "N_formula=.. N_oracle=.." plus a comparison table;
//                returns 1 when the two routes disagree
//   family    -> one row (r, eta0, N, lambda_bar) per requested r
//   example5d -> the four constant-block eigenvalues, then the truncated
//                band spectrum with a drift column against the 10-level
//                shallower truncation
// Failures print a one-line JSON error object {"error", "message"} to
// `err` and return 2.  Identical configs produce byte-identical output.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nilspec

#endif  // NILSPEC_CLI_HPP

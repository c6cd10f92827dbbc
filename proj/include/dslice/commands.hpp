#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dslice/expression.hpp"
#include "dslice/json_io.hpp"

namespace dslice {

/// Process exit codes shared by the CLI and batch error objects.
enum ExitCode { kOk = 0, kParseFailure = 1, kPreconditionFailure = 2, kInternalFailure = 3 };

Json run_sfs(const SeifertInvariants& y);
Json run_montesinos(const MontesinosLink& link);
Json run_pretzel(const PretzelParams& p);
/// Dispatches on the expression kind.
Json run_expression(const Expression& e);

struct LatticeRequest {
  /// Either a matrix document or an S2 expression.
  std::optional<IntMatrix> matrix;
  std::optional<SeifertInvariants> space;
  std::optional<std::size_t> m;
  unsigned threads = 1;
};
Json run_lattice_search(const LatticeRequest& request);

Json run_partitions(const LinkData& data);

/// One batch line: an expression string or {"verb": …, "input": …}.
Json run_batch_line(const std::string& line);
/// Results in input order. Sfs results are shared between homeomorphic inputs.
std::vector<Json> run_batch(const std::vector<std::string>& lines, unsigned jobs = 1);

/// {"error": {"kind", "message"[, "position"]}} plus the exit code for the
/// exception currently being handled.
std::pair<Json, ExitCode> describe_current_exception();

/// Indented key/value rendering for --human.
std::string render_human(const Json& doc);

}  // namespace dslice

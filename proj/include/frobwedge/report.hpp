#pragma once

// Report documents produced by the command-line front end. A document has
// the top-level keys command, parameters, results, failures, schema_version,
// and renders as a JSON document, a JSON summary, or CSV rows.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "frobwedge/sweep.hpp"

namespace frobwedge::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailure = 1,
  kExitArgumentError = 2,
  kExitIoError = 3,
  kExitInternalError = 4,
};

enum class Format { document, summary, rows };

Format parse_format(std::string_view name);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReportDocument {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::array();
  Json failures = Json::array();  // objects with at least "check" and "detail"

  void add_failure(std::string check, std::string detail, Json where = nullptr);

  Json to_json() const;
  Json summary() const;
  /// CSV: header from the union of result keys in first-seen order.
  std::string to_rows() const;
  std::string render(Format format) const;

  int exit_code() const { return failures.empty() ? kExitOk : kExitCheckFailure; }
};

struct VerifyLocalOptions {
  std::uint64_t p = 3;
  std::size_t rank = 2;
  std::size_t trunc = 2;
  std::uint64_t seed = 20240901;
  std::uint64_t max_p = 13;
};

struct SlopesOptions {
  std::uint64_t p = 5;
  std::int64_t g = 2;
  std::uint64_t n = 1;
  std::uint64_t rank = 2;
  std::int64_t degree = 0;
};

struct CohomOptions {
  std::uint64_t p = 3;
  std::int64_t g = 2;
  std::uint64_t n = 2;
};

// Argument problems surface as PreconditionError.
ReportDocument cmd_verify_local(const VerifyLocalOptions& opts);
ReportDocument cmd_slopes(const SlopesOptions& opts);
ReportDocument cmd_sweep(const SweepBounds& bounds);
ReportDocument cmd_cohom_cert(const CohomOptions& opts);

/// Writes text to path, throwing IoError naming the path on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace frobwedge::report

#pragma once

/**
 * @file report_io.hpp
 * @brief Input documents, command dispatch and JSON/text reports.
 *
 * Input is a JSON object with exactly the keys "matrix", "group" and
 * (optionally) "characteristic":
 *
 *     {"matrix": [[2,1,0,0],[0,2,1,0],[0,0,6,1],[0,0,0,7]],
 *      "group": "J", "characteristic": 0}
 *
 * "group" is "J", "SL" or {"generators": [[48,72,24,24], ...]}.
 * Reports are nlohmann::json objects, whose keys are always sorted.
 */

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bhk/duality.hpp"
#include "bhk/picard.hpp"

namespace bhk::io {

inline constexpr std::string_view kToolVersion = "1.0.0";

using Json = nlohmann::json;

struct GroupSpec {
  enum class Kind { J, SL, Generators };
  Kind kind = Kind::J;
  /// Raw coordinates as written; reduced mod d during resolution.
  std::vector<std::array<Integer, 4>> generators;
  bool operator==(const GroupSpec&) const = default;
};

struct InputSpec {
  IntMatrix4 matrix;
  GroupSpec group;
  Integer characteristic = 0;
  bool operator==(const InputSpec&) const = default;
};

/// Everything the commands need, built from an InputSpec.
struct ResolvedInput {
  InputSpec spec;
  DelsarteMatrix matrix;
  Characteristic characteristic;
  SymmetryData symmetries;
  SymmetrySubgroup group;
};

/// Syntax only. Throws ParseError carrying line/column or the offending field.
InputSpec parse_input_syntax(std::string_view text);

/// Builds the Delsarte data and the group. Core errors other than internal
/// ones are rethrown as SemanticError, keeping the original code name in the message.
ResolvedInput resolve(const InputSpec& spec);

/// parse_input_syntax followed by resolve.
InputSpec parse_input(std::string_view text);

/// Canonical serialization; parse_input(echo(s).dump()) == s.
Json echo(const InputSpec& spec);

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
Json to_json(const Integer& n);
Json to_json(const GroupElement& g);
Json to_json(const SymmetrySubgroup& g);

Json delsarte_json(const DelsarteMatrix& m);
Json adequacy_json(const AdequacyReport& rep);
Json atoms_json(const DelsarteMatrix& m);
Json picard_json(const PicardReport& rep);
Json scan_json(const ScanReport& rep);
Json error_json(const BhkError& e);

enum class Command { Validate, Analyze, Mirror, Subgroups, Picard, Scan, Batch };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct CommandOptions {
  PicardMethod method = PicardMethod::All;
  std::int64_t primes_up_to = 0;  // scan only
};

struct CommandResult {
  std::vector<Json> documents;
  /// 0 success, 1 input or adequacy failure, 2 internal cross-check failure.
  int exit_status = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

/// Runs a single-input command on a document held in memory.
CommandResult run_on_text(Command command, std::string_view text, const CommandOptions& options);

/**
 * Runs `command` on a file, or on a directory for Batch. File runs add an
 * "input_file" key with the file name; batch runs `picard` on every *.json in
 * sorted name order, so its output is the concatenation of per-file runs.
 */
CommandResult run_command(Command command, const std::filesystem::path& target,
                          const CommandOptions& options);

enum class Format { Json, Text };

/// One document as a single line of JSON, or as "path: value" lines.
std::string render(const Json& document, Format format);

}  // namespace bhk::io

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fnhol/spin.hpp"
#include "fnhol/surface.hpp"

namespace fnhol {

inline constexpr double kMinLength = 1e-6;
inline constexpr double kMaxLength = 50.0;

struct SpinBlock {
  SignMap epsilon;
  SignMap crossing;
};

struct SurfaceDocument {
  SurfaceSpec spec;
  FNPoint fn;
  std::optional<SpinBlock> spin;
};

// Throws Errc::Syntax (with line and column), Errc::Validation or
// Errc::Range (with a JSON pointer to the offending field).
SurfaceDocument parse_document(std::string_view text);

// Canonical JSON text; parse_document(serialize_document(d)) reproduces it.
std::string serialize_document(const SurfaceDocument& doc);

enum class OutputFormat { Text, Json };

struct CommandOptions {
  std::string command;
  std::optional<std::string> word;
  std::optional<double> tolerance;
  OutputFormat format = OutputFormat::Text;
  bool list = false;
};

struct Report {
  int exit_code = 0;  // 0 ok, 1 verification failure, 2 input or usage error
  std::string output;
};

double default_tolerance(std::string_view command);

Report run_command(const SurfaceDocument& doc, const CommandOptions& opt);

// Parses the document text first; parse failures give exit code 2.
Report run_text(std::string_view text, const CommandOptions& opt);

std::string format_number(double x);

}  // namespace fnhol

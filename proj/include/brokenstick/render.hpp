#pragma once

#include "brokenstick/exact.hpp"
#include "brokenstick/monte_carlo.hpp"
#include "brokenstick/verify.hpp"

#include <string>

namespace brokenstick {

enum class OutputFormat { text, json, csv };

/// Parses "text" | "json" | "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Fixed-significant-digit decimal rendering ("%.*g", C locale).
std::string format_significant(double value, int digits = 15);

/// Rationals appear as exact "p/q" strings; fields carrying a "decimal"
/// label are double approximations. CSV column orders are fixed and
/// documented in the README; JSON layouts match the schemas under schema/.
std::string render_exact(const ExactTable& table, bool per_k, OutputFormat format);
std::string render_mc(const McReport& report, OutputFormat format);
std::string render_verify(const VerifyReport& report, OutputFormat format);

}  // namespace brokenstick

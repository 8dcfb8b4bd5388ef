#pragma once

// Deterministic CSV and JSON writers for the experiment reports. Column
// names and JSON keys are a public contract (see README). Exact quantities
// are written as rational strings; decimal quantities use a fixed
// 12-significant-digit format.

#include <iosfwd>

#include <json.hpp>

#include "reccf/experiments.hpp"

namespace reccf {

using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const ScanReport& report);
OrderedJson to_json(const ThueReport& report);
OrderedJson to_json(const DenomReport& report);

void write_csv(const ScanReport& report, std::ostream& out);
void write_csv(const ThueReport& report, std::ostream& out);
void write_csv(const DenomReport& report, std::ostream& out);

void write_text(const ScanReport& report, std::ostream& out);
void write_text(const ThueReport& report, std::ostream& out);
void write_text(const DenomReport& report, std::ostream& out);

// RFC 4180 quoting: wraps the field when it contains a comma, quote or
// newline, doubling embedded quotes.
std::string csv_field(const std::string& value);

}  // namespace reccf

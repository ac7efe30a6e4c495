// csv.hpp - SweepTable serialization
//
// Comment lines start with '#', then one header row, then data rows. Numbers
// use 17 significant digits, absent values are empty fields, and the last
// column is "error".

#pragma once

#include <iosfwd>
#include <string>

#include "qbw/sweep.hpp"

namespace qbw {

std::string format_number(double v);

// energy_scale multiplies every energy column (omega0 rescaling).
void write_csv(const SweepTable& table, std::ostream& out, double energy_scale = 1.0);
std::string to_csv(const SweepTable& table, double energy_scale = 1.0);

// Throws UsageError on malformed input.
SweepTable read_csv(std::istream& in);
SweepTable read_csv_file(const std::string& path);

} // namespace qbw

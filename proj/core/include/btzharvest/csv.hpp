#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "btzharvest/sweep.hpp"

namespace btzharvest {

/// Column names in output order: the parameters, then the observables, then status.
const std::vector<std::string>& csv_columns();

/// Shortest decimal that reads back to the same double ("nan"/"inf" for non-finite).
std::string format_double(double value);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepRow& row);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace btzharvest

#pragma once

#include <iosfwd>
#include <string>

#include "mwd/design.hpp"
#include "mwd/gf.hpp"

namespace mwd {

// One point per line ("010", or "11,0,12" for p > 10).  Blank lines and
// lines starting with '#' are skipped.  Errors carry line numbers.
InputSet read_points(std::istream& in, const PrimeField& field);
InputSet read_points_file(const std::string& path, const PrimeField& field);

// Point, whitespace, output value per line; same conventions.
DataSet read_data(std::istream& in, const PrimeField& field);
DataSet read_data_file(const std::string& path, const PrimeField& field);

} // namespace mwd

#pragma once

#include <iosfwd>

namespace idcodes {

// Runs the 11-row acceptance table, one pass/fail line per criterion.
// Returns the number of failed criteria.
int run_acceptance(std::ostream& out);

}  // namespace idcodes

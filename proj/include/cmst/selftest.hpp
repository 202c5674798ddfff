#pragma once

#include <ostream>

namespace cmst {

// Runs the invariant suite at reduced scale; prints one line per check.
// Returns the number of failed checks.
int run_selftest(std::ostream& out);

} // namespace cmst

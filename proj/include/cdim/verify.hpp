#pragma once

#include <iosfwd>

namespace cdim {

// Run the release-gate battery, one line per criterion. Returns the number
// of failed criteria. In strict mode the battery stops at the first failure.
int run_acceptance_suite(std::ostream& out, bool strict = false);

} // namespace cdim

#pragma once

#include <ostream>

namespace patlab {

/// Recomputes every value of the bundled worked examples (the five-transaction
/// dataset, its quantitative variant, and the two reference reduction
/// instances) and prints one PASS/FAIL line each. Returns the number of
/// failing lines.
int run_reference_demo(std::ostream& out);

}  // namespace patlab

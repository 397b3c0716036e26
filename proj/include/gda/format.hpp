#pragma once

#include <string>

namespace gda {

// Shortest decimal form that round-trips the exact double. Used for every
// number we write to CSV/JSON-adjacent text so that identical values always
// produce identical bytes, independent of locale.
std::string format_double(double value);

}  // namespace gda

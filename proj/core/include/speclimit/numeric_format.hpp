#pragma once

#include <string>

namespace speclimit {

/// Every number written to CSV/JSON goes through these so that outputs are
/// byte-stable: 12 significant digits.
std::string fmt12(double value);
double round12(double value);

}  // namespace speclimit

#ifndef TURAN_FORMAT_HPP
#define TURAN_FORMAT_HPP

#include <string>

namespace turan {

/// Shortest decimal that round-trips to the same binary64 value
/// (at most 17 significant digits). "nan", "inf" and "-inf" for non-finite values.
std::string format_real(double v);

} // namespace turan

#endif

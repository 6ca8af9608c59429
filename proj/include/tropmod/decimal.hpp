#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>

namespace tropmod {

// Fixed-precision decimal reals for the tropicalization map. The working
// precision is set globally (default 50 digits) so runs are reproducible.
using Decimal = boost::multiprecision::mpfr_float;

inline void set_decimal_precision(unsigned digits) {
    Decimal::default_precision(digits);
}

inline unsigned decimal_precision() { return Decimal::default_precision(); }

inline std::string to_decimal_string(const Decimal& d) {
    return d.str(static_cast<std::streamsize>(decimal_precision()));
}

}  // namespace tropmod

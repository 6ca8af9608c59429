#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tropmod {

// Exact rational arithmetic. Edge lengths, chain-complex entries and rank
// computations all run over these so that equality and canonical forms are
// decidable.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "num/den" or a plain integer string.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::runtime_error("rational with zero denominator: " + s);
    return Rational(num, den);
}

}  // namespace tropmod

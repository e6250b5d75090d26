#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace weylwt {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << "/" << denominator(r);
    return os.str();
}

// Parses "n" or "n/d". Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("bad rational '") + s + "': " + e.what());
    }
}

}  // namespace weylwt

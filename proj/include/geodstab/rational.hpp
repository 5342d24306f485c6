#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace geodstab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dynkin labels are small integers; multiplicities stay well inside 64 bits
// at the ranks this library targets.
using Label = long long;

// Single exception type for every domain error; the message carries the
// diagnostic the caller is required to surface.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat parse_rational(const std::string& s) {
    auto bad = [&]() -> error {
        return error("not a rational literal: '" + s + "' (expected p or p/q)");
    };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

// Prints "p" when integral, "p/q" otherwise; the exact inverse of
// parse_rational on canonical forms.
inline std::string rational_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw error("expected an integer, got " + rational_str(r));
    return numerator(r);
}

}  // namespace geodstab

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace brieskorn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised for bad user input (CLI exit code 1).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal cross-check fails (CLI exit code 2).
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int to_int(const Rat& r, const char* what) {
    if (!is_integer(r))
        throw consistency_error(std::string(what) + ": expected an integer, got " + r.str());
    return num(r);
}

inline long long to_ll(const Int& v, const char* what) {
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
        throw validation_error(std::string(what) + ": value out of 64-bit range");
    return static_cast<long long>(v);
}

// Renders "p/q", or just "p" when q == 1.
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

Rat parse_rational(const std::string& text);

}  // namespace brieskorn

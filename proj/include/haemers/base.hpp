#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace haemers {

inline constexpr const char* kVersion = "0.1.0";

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy shared by all modules.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadParameter : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct GraphMismatch : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct BudgetExhausted : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Global cap on matrix cells; tensor ambients grow fast and must fail
// loudly instead of thrashing. Overridable via HAEMERS_MAX_CELLS.
inline std::size_t max_cells() {
    static const std::size_t cap = [] {
        if (const char* s = std::getenv("HAEMERS_MAX_CELLS")) {
            const unsigned long long v = std::strtoull(s, nullptr, 10);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1000000);
    }();
    return cap;
}

inline void check_cells(std::size_t rows, std::size_t cols) {
    if (cols != 0 && rows > max_cells() / cols) {
        throw TooLarge("matrix of " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " entries exceeds cell cap " +
                       std::to_string(max_cells()));
    }
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational '" + s + "': " + e.what());
    }
}

inline BigInt bigint_pow(const BigInt& b, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Sum_{k=0}^{r-1} x^k, exactly.
inline Rational geometric_sum(const Rational& x, int r) {
    Rational acc = 0, pw = 1;
    for (int k = 0; k < r; ++k) {
        acc += pw;
        pw *= x;
    }
    return acc;
}

}  // namespace haemers

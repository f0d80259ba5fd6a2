#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace atb {

/// Exact scalars. All geometry in this library is rational; nothing is
/// ever rounded. Rationals normalize eagerly on construction (lowest
/// terms, positive denominator), so equality is structural.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Vec2Z = Eigen::Matrix<Int, 2, 1>;
using Mat2Z = Eigen::Matrix<Int, 2, 2>;
using Vec2Q = Eigen::Matrix<Rat, 2, 1>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

/// Thrown on malformed input files; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation's precondition fails; CLI exit code 1.
class SemanticError : public std::runtime_error {
public:
    explicit SemanticError(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd_int(const Int& a, const Int& b) {
    Int aa = abs(a), bb = abs(b);
    return boost::multiprecision::gcd(aa, bb);
}

/// Strict rational literal: `-?p` or `-?p/q` with canonical digits
/// (no leading zeros, q > 0) and gcd(p, q) = 1. Anything else is rejected,
/// including un-reduced fractions like `4/6`.
Rat parse_rational(std::string_view token);

/// Canonical form: `p` when the denominator is 1, else `p/q`.
std::string format_rational(const Rat& r);

/// Decimal rendering for SVG consumers: truncated toward zero at
/// `max_digits` fractional digits, trailing zeros trimmed.
std::string decimal_string(const Rat& r, int max_digits = 12);

/// FNV-1a over bytes; used for content digests of canonical serializations.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

}  // namespace atb

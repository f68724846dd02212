#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace padicmech {

// Expression templates are disabled so that results of arithmetic are plain
// values (std::max, auto and lambdas then behave as expected).
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Default number of p-adic digits carried by a computation.
inline constexpr int kDefaultPrecision = 12;
/// Default truncation degree for power series.
inline constexpr int kDefaultDegree = 24;

bool is_prime(std::uint64_t n);
/// Throws InvalidArgument unless `p` is a prime below 2^31.
void require_prime(std::uint64_t p);

BigInt ipow(const BigInt& base, unsigned exponent);
Rational rpow(const Rational& base, int exponent);

/// Exponent of p in a nonzero integer.
int valuation_of(const BigInt& n, std::uint32_t p);
/// Representative of a mod m in [0, m).
BigInt mod_floor(const BigInt& a, const BigInt& m);
/// floor(log_p(n)) for n >= 1.
int floor_log(const BigInt& n, std::uint32_t p);

BigInt factorial(unsigned n);

std::string to_string(const BigInt& n);
/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);
/// Accepts "n", "-n", "n/d". Throws ParseError.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

}  // namespace padicmech

#ifndef HFT_RATIONAL_HPP
#define HFT_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hft
{

using Rational = mpq_class;
using Integer = mpz_class;

// "p" or "p/q" in lowest terms.
std::string to_string(const Rational &q);

// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

} // namespace hft

#endif

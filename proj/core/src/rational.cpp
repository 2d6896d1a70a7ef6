#include <hft/error.hpp>
#include <hft/rational.hpp>

#include <cctype>

namespace hft
{

std::string to_string(const Rational &q)
{
    return q.get_str();
}

namespace
{

bool is_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    auto slash = body.find('/');
    bool ok = slash == std::string_view::npos
                  ? is_digits(body)
                  : is_digits(body.substr(0, slash)) && is_digits(body.substr(slash + 1));
    if (!ok)
        throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(text) + "'");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    Rational q;
    q.set_str(s, 10);
    if (q.get_den() == 0)
        throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

} // namespace hft

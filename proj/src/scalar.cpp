#include "newstein/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace newstein {

namespace {

bool valid_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Scalar x(mpz_class(num), d);
    x.canonicalize();
    return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace newstein

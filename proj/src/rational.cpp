#include "abelorb/rational.hpp"

#include <cctype>

#include "abelorb/errors.hpp"

namespace abelorb {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    std::size_t start = 0;
    if (!s.empty() && s[0] == '+') start = 1;
    std::string body = s.substr(start);
    const auto slash = body.find('/');
    auto digits_ok = [](std::string_view d, bool allow_sign) {
        if (allow_sign && !d.empty() && d[0] == '-') d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const std::string_view view(body);
    bool ok = slash == std::string::npos
                  ? digits_ok(view, true)
                  : digits_ok(view.substr(0, slash), true) && digits_ok(view.substr(slash + 1), false);
    require(ok, "bad rational '" + s + "'");
    Rational q;
    require(q.set_str(body, 10) == 0, "bad rational '" + s + "'");
    require(q.get_den() != 0, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace abelorb

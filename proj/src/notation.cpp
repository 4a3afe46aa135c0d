#include "abelorb/notation.hpp"

#include <cctype>
#include <charconv>

#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"

namespace abelorb {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s, const std::string& what) {
    std::string t = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    require(ec == std::errc{} && ptr == t.data() + t.size() && !t.empty(), "bad integer in " + what);
    return value;
}

// sum of [sign][coef]e<k> terms
std::vector<int> parse_eps(const RootSystem& rs, std::string_view text) {
    const std::string s = trim(text);
    std::vector<int> e(static_cast<std::size_t>(rs.eps_dimension()), 0);
    std::size_t i = 0;
    bool first = true;
    require(!s.empty(), "empty root");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else {
            require(first, "bad root '" + s + "'");
        }
        int coef = 1;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) coef = parse_int(std::string_view(s).substr(i, j - i), "'" + s + "'");
        require(j < s.size() && (s[j] == 'e' || s[j] == 'E'), "bad root '" + s + "'");
        std::size_t k = j + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        require(k > j + 1, "bad root '" + s + "'");
        int idx = parse_int(std::string_view(s).substr(j + 1, k - j - 1), "'" + s + "'");
        require(idx >= 1 && idx <= rs.eps_dimension(), "epsilon index out of range in '" + s + "'");
        e[static_cast<std::size_t>(idx - 1)] += sign * coef;
        i = k;
        first = false;
    }
    return e;
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        require(depth >= 0, "unbalanced brackets");
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    require(depth == 0, "unbalanced brackets");
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    for (const auto& item : out) require(!item.empty(), "empty list item");
    return out;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (const auto& item : split_top_level(text)) out.push_back(parse_int(item, "'" + std::string(text) + "'"));
    return out;
}

std::string format_tuple(const RootSystem& rs, const Coeffs& c, Numbering numbering) {
    std::string out = "[";
    for (int node = 1; node <= rs.rank(); ++node) {
        if (node > 1) out += ",";
        out += std::to_string(c[static_cast<std::size_t>(node_to_internal(rs.type(), numbering, node))]);
    }
    return out + "]";
}

std::optional<std::string> eps_string(const RootSystem& rs, const Coeffs& c) {
    if (!rs.has_eps()) return std::nullopt;
    const auto e = rs.to_eps(c);
    std::string out;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (e[k] < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        const int mag = e[k] < 0 ? -e[k] : e[k];
        if (mag != 1) out += std::to_string(mag);
        out += "e" + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

std::string format_coeffs(const RootSystem& rs, const Coeffs& c, Numbering numbering) {
    auto eps = eps_string(rs, c);
    return eps ? *eps : format_tuple(rs, c, numbering);
}

std::string format_root(const RootSystem& rs, int root, Numbering numbering) {
    return format_coeffs(rs, rs.coeffs(root), numbering);
}

std::string format_root_set(const RootSystem& rs, const RootSet& s, Numbering numbering) {
    std::string out;
    s.for_each([&](int g) {
        if (!out.empty()) out += ",";
        out += format_root(rs, g, numbering);
    });
    return out;
}

int parse_root(const RootSystem& rs, std::string_view text, Numbering numbering) {
    const std::string s = trim(text);
    Coeffs c(static_cast<std::size_t>(rs.rank()), 0);
    if (!s.empty() && s.front() == '[') {
        require(s.back() == ']', "bad coefficient tuple '" + s + "'");
        auto items = split_top_level(std::string_view(s).substr(1, s.size() - 2));
        require(static_cast<int>(items.size()) == rs.rank(),
                "tuple '" + s + "' has the wrong length for " + rs.type().name());
        for (int node = 1; node <= rs.rank(); ++node)
            c[static_cast<std::size_t>(node_to_internal(rs.type(), numbering, node))] =
                parse_int(items[static_cast<std::size_t>(node - 1)], "'" + s + "'");
    } else {
        require(rs.has_eps(), "epsilon notation is only available for classical types; use [..] tuples");
        auto coeffs = rs.from_eps(parse_eps(rs, s));
        require(coeffs.has_value(), "'" + s + "' is not in the root lattice of " + rs.type().name());
        c = *coeffs;
    }
    auto idx = rs.find_positive(c);
    require(idx.has_value(), "'" + s + "' is not a positive root of " + rs.type().name());
    return *idx;
}

RootSet parse_root_list(const RootSystem& rs, std::string_view text, Numbering numbering) {
    RootSet out;
    if (trim(text).empty()) return out;
    for (const auto& item : split_top_level(text)) out.insert(parse_root(rs, item, numbering));
    return out;
}

IdealVector parse_vector(const RootSystem& rs, const RootSet& ambient, std::string_view text, Numbering numbering) {
    IdealVector v(rs, ambient);
    if (trim(text).empty()) return v;
    for (const auto& item : split_top_level(text)) {
        // the separator is the last ':' (tuples contain none)
        const auto colon = item.rfind(':');
        require(colon != std::string::npos, "vector entry '" + item + "' needs root:coefficient");
        const int root = parse_root(rs, std::string_view(item).substr(0, colon), numbering);
        require(ambient.contains(root), "root '" + item.substr(0, colon) + "' is not in the ideal");
        v.add(root, parse_rational(trim(std::string_view(item).substr(colon + 1))));
    }
    return v;
}

std::string format_vector(const RootSystem& rs, const IdealVector& v, Numbering numbering) {
    std::string out;
    v.support().for_each([&](int g) {
        if (!out.empty()) out += ",";
        out += format_root(rs, g, numbering) + ":" + to_string(v.at(g));
    });
    return out;
}

RootSet resolve_ideal(const RootSystem& rs, const IdealSpec& spec, Numbering numbering) {
    RootSet a;
    switch (spec.kind) {
        case IdealSpec::Kind::Generators:
            a = ideal_generated(rs, parse_root_list(rs, spec.generators, numbering));
            break;
        case IdealSpec::Kind::Shape:
            a = young_shape_ideal(rs, spec.shape);
            break;
        case IdealSpec::Kind::MaxAbelian: {
            auto all = maximal_abelian_ideals(rs);
            require(spec.index >= 1 && spec.index <= static_cast<int>(all.size()),
                    "maximal abelian ideal index out of range (1.." + std::to_string(all.size()) + ")");
            a = all[static_cast<std::size_t>(spec.index - 1)];
            break;
        }
        case IdealSpec::Kind::Nilradical:
            require(spec.index >= 1 && spec.index <= rs.rank(), "node out of range");
            a = abelian_nilradical(rs, node_to_internal(rs.type(), numbering, spec.index));
            break;
    }
    require(is_abelian(rs, a), "ideal is not abelian");
    return a;
}

}  // namespace abelorb

#include "reference.hpp"

#include <deque>

namespace reference {

namespace {

Coeffs plus(const Coeffs& a, const Coeffs& b) {
    Coeffs c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Coeffs minus(const Coeffs& a, const Coeffs& b) {
    Coeffs c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

Coeffs negate(Coeffs a) {
    for (int& x : a) x = -x;
    return a;
}

bool is_root(const std::set<Coeffs>& pos, const Coeffs& c) { return pos.count(c) || pos.count(negate(c)); }

}  // namespace

std::set<Coeffs> positive_roots(const abelorb::RootSystem& rs) {
    std::set<Coeffs> out;
    for (const auto& r : rs.positive_roots()) out.insert(r.coeffs);
    return out;
}

std::set<Ideal> abelian_ideals(const abelorb::RootSystem& rs) {
    const auto pos = positive_roots(rs);
    const int n = rs.rank();
    std::vector<Coeffs> simple;
    for (int i = 0; i < n; ++i) {
        Coeffs e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        simple.push_back(e);
    }
    std::set<Ideal> seen{Ideal{}};
    std::deque<Ideal> queue{Ideal{}};
    while (!queue.empty()) {
        Ideal cur = queue.front();
        queue.pop_front();
        for (const auto& r : pos) {
            if (cur.count(r)) continue;
            // r may join if every root directly above it is already present
            bool closed = true;
            for (const auto& s : simple) {
                Coeffs up = plus(r, s);
                if (pos.count(up) && !cur.count(up)) closed = false;
            }
            if (!closed) continue;
            bool abelian = !is_root(pos, plus(r, r));
            for (const auto& g : cur) abelian = abelian && !is_root(pos, plus(r, g));
            if (!abelian) continue;
            Ideal next = cur;
            next.insert(r);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

long count_strongly_orthogonal_subsets(const abelorb::RootSystem& rs, const abelorb::RootSet& a) {
    const auto pos = positive_roots(rs);
    std::vector<Coeffs> members;
    a.for_each([&](int g) { members.push_back(rs.coeffs(g)); });
    const std::size_t m = members.size();
    long count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            for (std::size_t j = i + 1; j < m && ok; ++j)
                if ((mask >> i & 1) && (mask >> j & 1))
                    ok = !is_root(pos, plus(members[i], members[j])) && !is_root(pos, minus(members[i], members[j]));
        count += ok;
    }
    return count;
}

abelorb::RootSet shift_up(const abelorb::RootSystem& rs, const abelorb::RootSet& s) {
    abelorb::RootSet out;
    s.for_each([&](int g) {
        for (const auto& d : rs.positive_roots())
            if (auto idx = rs.find_positive(plus(rs.coeffs(g), d.coeffs))) out.insert(*idx);
    });
    return out;
}

abelorb::RootSet shift_down(const abelorb::RootSystem& rs, const abelorb::RootSet& a, const abelorb::RootSet& s) {
    abelorb::RootSet out;
    s.for_each([&](int g) {
        for (const auto& d : rs.positive_roots())
            if (auto idx = rs.find_positive(minus(rs.coeffs(g), d.coeffs)); idx && a.contains(*idx)) out.insert(*idx);
    });
    return out;
}

}  // namespace reference

#include "abelorb/weyl.hpp"

#include <algorithm>

#include "abelorb/errors.hpp"
#include "abelorb/linalg.hpp"

namespace abelorb {

WeylElement WeylElement::identity(int rank) {
    WeylElement w;
    w.rank_ = rank;
    w.m_.assign(static_cast<std::size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i) w.m_[static_cast<std::size_t>(i) * rank + i] = 1;
    return w;
}

WeylElement WeylElement::reflection(const RootSystem& rs, const Coeffs& gamma) {
    require(std::any_of(gamma.begin(), gamma.end(), [](int c) { return c != 0; }),
            "reflection in the zero vector");
    const int n = rs.rank();
    WeylElement w = identity(n);
    Coeffs alpha(n, 0);
    for (int j = 0; j < n; ++j) {
        std::fill(alpha.begin(), alpha.end(), 0);
        alpha[j] = 1;
        Coeffs img = reflect(rs, gamma, alpha);
        for (int i = 0; i < n; ++i) w.m_[static_cast<std::size_t>(i) * n + j] = img[i];
    }
    return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int s) {
    return identity(rs.rank()).times_simple(rs, s);
}

Coeffs WeylElement::apply(const Coeffs& v) const {
    Coeffs out(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        int s = 0;
        for (int j = 0; j < rank_; ++j) s += at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

bool WeylElement::has_right_descent(int s) const {
    // w(alpha_s) is a root, so its coordinates share one sign.
    for (int i = 0; i < rank_; ++i) {
        int c = at(i, s);
        if (c != 0) return c < 0;
    }
    throw InvariantViolation("Weyl element maps a simple root to zero");
}

WeylElement WeylElement::times_simple(const RootSystem& rs, int s) const {
    // (w s)(alpha_j) = w(alpha_j) - <alpha_j, alpha_s^vee> w(alpha_s)
    WeylElement out = *this;
    const auto& cartan = rs.cartan();
    for (int j = 0; j < rank_; ++j) {
        int a = cartan[j][s];
        if (a == 0) continue;
        for (int i = 0; i < rank_; ++i)
            out.m_[static_cast<std::size_t>(i) * rank_ + j] -= a * at(i, s);
    }
    return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    const int n = a.rank_;
    WeylElement c = WeylElement::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            c.m_[static_cast<std::size_t>(i) * n + j] = s;
        }
    return c;
}

std::size_t WeylElement::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : m_) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
        h *= 0x100000001b3ULL;
    }
    return h;
}

Coeffs reflect(const RootSystem& rs, const Coeffs& gamma, const Coeffs& mu) {
    require(std::any_of(gamma.begin(), gamma.end(), [](int c) { return c != 0; }),
            "reflection in the zero vector");
    int k = rs.pairing(mu, gamma);
    Coeffs out = mu;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * gamma[i];
    return out;
}

Involution sigma_of_orth_set(const RootSystem& rs, const RootSet& orth_set) {
    auto members = orth_set.indices();
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            require(rs.strongly_orthogonal(members[a], members[b]),
                    "set is not strongly orthogonal");
    WeylElement w = WeylElement::identity(rs.rank());
    for (int g : members) w = w * WeylElement::reflection(rs, rs.coeffs(g));
    return {w, orth_set};
}

int length(const RootSystem& rs, const WeylElement& w) {
    int count = 0;
    for (const auto& r : rs.positive_roots()) {
        Coeffs img = w.apply(r.coeffs);
        for (int c : img) {
            if (c != 0) {
                if (c < 0) ++count;
                break;
            }
        }
    }
    return count;
}

int absolute_length(const WeylElement& w) {
    const int n = w.rank();
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (i == j ? 1 : 0) - w.at(i, j);
    return exact_rank(std::move(m));
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
    return bruhat_leq(rs, u, length(rs, u), w, length(rs, w));
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u_in, int length_u,
                const WeylElement& w_in, int length_w) {
    int lu = length_u;
    int lw = length_w;
    if (lu > lw) return false;
    if (lu == lw) return u_in == w_in;
    WeylElement u = u_in;
    WeylElement w = w_in;
    while (true) {
        if (lu > lw) return false;
        if (lu == lw) return u == w;
        int s = 0;
        while (!w.has_right_descent(s)) ++s;
        w = w.times_simple(rs, s);
        --lw;
        if (u.has_right_descent(s)) {
            u = u.times_simple(rs, s);
            --lu;
        }
    }
}

bool BruhatOracle::leq(const WeylElement& u, const WeylElement& w) {
    auto key = std::make_pair(u, w);
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    bool result = bruhat_leq(*rs_, u, w);
    std::unique_lock lock(mutex_);
    cache_.emplace(std::move(key), result);
    return result;
}

std::size_t BruhatOracle::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& simple_subset) {
    WeylElement w = WeylElement::identity(rs.rank());
    while (true) {
        auto it = std::find_if(simple_subset.begin(), simple_subset.end(),
                               [&](int s) { return !w.has_right_descent(s); });
        if (it == simple_subset.end()) return w;
        w = w.times_simple(rs, *it);
    }
}

}  // namespace abelorb

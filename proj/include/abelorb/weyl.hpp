#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "abelorb/root_system.hpp"

namespace abelorb {

/// Element of W, stored as its action on simple-root coordinates:
/// column j holds the coordinates of w(alpha_j).
class WeylElement {
public:
    WeylElement() = default;
    static WeylElement identity(int rank);
    /// The reflection sigma_gamma for a root given by coefficients.
    static WeylElement reflection(const RootSystem& rs, const Coeffs& gamma);
    static WeylElement simple_reflection(const RootSystem& rs, int s);

    [[nodiscard]] int rank() const { return rank_; }
    [[nodiscard]] int at(int row, int col) const { return m_[static_cast<std::size_t>(row) * rank_ + col]; }

    [[nodiscard]] Coeffs apply(const Coeffs& v) const;
    /// True iff w(alpha_s) is a negative root, i.e. l(ws) < l(w).
    [[nodiscard]] bool has_right_descent(int s) const;
    /// w * s_s, using the Cartan integers for the column update.
    [[nodiscard]] WeylElement times_simple(const RootSystem& rs, int s) const;

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement&, const WeylElement&) = default;

    [[nodiscard]] std::size_t hash() const;

private:
    int rank_ = 0;
    std::vector<int> m_;
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

/// sigma_S together with the strongly orthogonal set it came from.
struct Involution {
    WeylElement element;
    RootSet orth_set;
};

/// mu - <mu, gamma^vee> gamma
Coeffs reflect(const RootSystem& rs, const Coeffs& gamma, const Coeffs& mu);

/// Commuting product of the reflections in S. Throws DomainError if S is not
/// strongly orthogonal.
Involution sigma_of_orth_set(const RootSystem& rs, const RootSet& orth_set);

/// Number of positive roots sent to negative roots.
int length(const RootSystem& rs, const WeylElement& w);

/// rank(1 - w) over Q.
int absolute_length(const WeylElement& w);

/// u <= w in the Bruhat order, by the descent recursion: pick s with
/// l(ws) < l(w); then u <= w iff min(u, us) <= ws.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);
/// Same, with l(u) and l(w) supplied by the caller.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, int length_u, const WeylElement& w,
                int length_w);

/// Memoised Bruhat comparisons, safe to share between threads.
class BruhatOracle {
public:
    explicit BruhatOracle(const RootSystem& rs) : rs_(&rs) {}
    bool leq(const WeylElement& u, const WeylElement& w);
    [[nodiscard]] std::size_t cache_size() const;

private:
    struct PairHash {
        std::size_t operator()(const std::pair<WeylElement, WeylElement>& p) const noexcept {
            return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
        }
    };
    const RootSystem* rs_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::pair<WeylElement, WeylElement>, bool, PairHash> cache_;
};

/// Longest element of the parabolic subgroup generated by the given simple
/// reflections (0-based indices).
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& simple_subset);

}  // namespace abelorb

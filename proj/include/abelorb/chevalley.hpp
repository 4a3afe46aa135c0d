#pragma once

#include <utility>
#include <vector>

#include "abelorb/ideal_vector.hpp"
#include "abelorb/rational.hpp"
#include "abelorb/root_system.hpp"

namespace abelorb {

/// Signed root code: k >= 0 is the positive root k, k < 0 is the negative
/// of root -k-1.
constexpr int negative(int code) { return -code - 1; }
constexpr bool is_negative(int code) { return code < 0; }
constexpr int root_of(int code) { return code < 0 ? -code - 1 : code; }

/// Integral structure constants of a Chevalley basis {h_i, e_alpha}:
/// [e_a, e_b] = N(a,b) e_{a+b}, [e_a, e_{-a}] = h_a (the coroot of a).
/// Signs follow the extraspecial-pair convention for the fixed root order.
class StructureTable {
public:
    explicit StructureTable(const RootSystem& rs);

    [[nodiscard]] const RootSystem& roots() const { return *rs_; }
    /// N(a,b) for signed codes; 0 when a+b is not a root.
    [[nodiscard]] int n(int a, int b) const { return table_[slot(a) * width_ + slot(b)]; }
    /// Signed code of a+b, or nullopt-like sentinel kNone when a+b is not a root.
    [[nodiscard]] int sum_code(int a, int b) const { return sums_[slot(a) * width_ + slot(b)]; }
    static constexpr int kNone = 1 << 30;

    /// The table for the basis e_a -> -e_a; equally valid, opposite signs.
    [[nodiscard]] StructureTable negated() const;

    /// (dimension of g) basis: 0..rank-1 are the simple coroots h_i, then
    /// rank + slot(code) are the root vectors.
    [[nodiscard]] int dimension() const { return rs_->rank() + width_; }
    [[nodiscard]] int basis_of(int code) const { return rs_->rank() + static_cast<int>(slot(code)); }
    /// Integer bracket of two basis elements as (basis index, coefficient) pairs.
    [[nodiscard]] std::vector<std::pair<int, long>> bracket_basis(int x, int y) const;

private:
    StructureTable() = default;
    [[nodiscard]] std::size_t slot(int code) const {
        return code >= 0 ? static_cast<std::size_t>(code)
                         : static_cast<std::size_t>(rs_->num_positive() + root_of(code));
    }
    [[nodiscard]] int code_of_slot(std::size_t s) const {
        const auto p = static_cast<std::size_t>(rs_->num_positive());
        return s < p ? static_cast<int>(s) : negative(static_cast<int>(s - p));
    }
    void build();
    [[nodiscard]] int derived(int a, int b) const;

    const RootSystem* rs_ = nullptr;
    std::size_t width_ = 0;
    std::vector<int> table_;
    std::vector<int> sums_;
};

/// exp(t ad e_delta) applied to v in a.
IdealVector ad_exp_action(const StructureTable& table, int delta, const Rational& t, const IdealVector& v);

/// Coadjoint action of exp(t e_delta) on xi = sum c_gamma xi_{-gamma} in
/// a* = g / a^perp, with xi_{-gamma} the class of e_{-gamma}.
IdealVector coad_exp_action(const StructureTable& table, int delta, const Rational& t, const IdealVector& xi);

/// Largest power k of ad/coad e_delta that acted nontrivially in the last
/// exp series; exposed for the string-length checks.
struct SeriesDepth {
    int depth = 0;
};
IdealVector coad_exp_action(const StructureTable& table, int delta, const Rational& t, const IdealVector& xi,
                            SeriesDepth& depth);

/// Invariant pairing <xi, v> = sum c_gamma a_gamma w_gamma with w = 1 for
/// long and r for short gamma (the Killing form up to a constant).
Rational invariant_pairing(const RootSystem& rs, const IdealVector& xi, const IdealVector& v);

}  // namespace abelorb

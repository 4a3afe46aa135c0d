#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelorb/root_system.hpp"
#include "abelorb/weyl.hpp"

namespace abelorb {

/// Involutions in S_n with exactly k two-cycles on n points:
/// C(n, 2k) (2k)! / (k! 2^k). Zero for k > n/2. Throws DomainError on
/// negative input or uint64 overflow.
std::uint64_t d_count(int n, int k);

/// Sum over 0 <= t <= min(k, n-k) of C(n-2t, k-t) d(n, t). Zero for k > n.
std::uint64_t c_count(int n, int k);

/// k! C(m, k) C(n, k); zero for k > min(m, n). Requires m, n >= 1.
std::uint64_t rectangle_count(int m, int n, int k);

/// Orbit counts by #S for one abelian nilradical.
struct CountTable {
    SimpleType type;
    int node = 0;  // internal 0-based index
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
};

/// Counts by exhaustive enumeration of the strongly orthogonal subsets.
/// Throws DomainError if `node` is not an ANR node.
CountTable anr_statistic(const RootSystem& rs, int node);

/// Counts predicted without enumeration: the rectangle formula for A, the
/// B and D alpha_1 rows, d(n, k) for the D spinor nodes, c(n, k) for C, and
/// the E6/E7 tables. Empty when no prediction is on record. Throws
/// DomainError if `node` is not an ANR node.
std::optional<std::vector<std::uint64_t>> expected_anr_counts(const SimpleType& t, int node);

/// For C_n with the ANR at alpha_n: keep the short roots of S and replace its
/// long roots by 2e_i for every index i that S does not touch. A1 and B2 are
/// accepted through their C-type coordinates only when the type is C.
/// Throws DomainError for other types or for S outside the ANR's 𝔖.
RootSet symmetry_bijection(const RootSystem& rs, const RootSet& s);

/// Longest element of the Levi Weyl group W_L, L the Levi of the maximal
/// parabolic at `node`.
WeylElement levi_longest_element(const RootSystem& rs, int node);

/// Elementwise image of S under w_{0,L}. Throws InvariantViolation if a
/// root leaves the nilradical.
RootSet w0L_action(const RootSystem& rs, int node, const RootSet& s);

/// One orbit of the conjecture checker.
struct ConjectureRow {
    RootSet s;
    int sigma_length = 0;
    int sigma_abs_length = 0;
    int dim_in_a = 0;       // dim O_S
    int dim_actual = 0;     // dim O*_S
    int formula_twice = 0;  // l(sigma_S) + #S
    bool parity_ok = true;
    bool match = false;     // parity_ok and formula_twice / 2 == dim_actual
};

/// Pair of row indices (lower, upper).
struct RowPair {
    int lower = 0;
    int upper = 0;
    friend bool operator==(const RowPair&, const RowPair&) = default;
};

/// Consistency evidence on the Bruhat sub-poset {sigma_S}. Nothing here is a
/// proof: closure order is never computed.
struct ConjectureReport {
    SimpleType type;
    std::optional<int> node;  // set for ANRs
    RootSet ideal;
    RootSet top;  // C^u, the dense dual orbit
    std::vector<ConjectureRow> rows;  // 𝔖 in canonical order
    std::vector<int> formula_mismatches;
    std::vector<int> parity_failures;
    /// sigma_lower < sigma_upper yet dim O*_lower >= dim O*_upper.
    std::vector<RowPair> bruhat_violations;
    /// Bruhat covers in the sub-poset whose dual dimensions differ by != 1.
    std::vector<RowPair> cover_violations;
    /// S minus one root not strictly below S in Bruhat order.
    std::vector<RowPair> subset_violations;
    /// Rows whose sigma is not below sigma_{C^u}.
    std::vector<int> not_below_top;
    /// Distinct S with equal sigma_S.
    std::vector<RowPair> coincident_involutions;
    std::vector<RowPair> covers;
    /// The sub-poset is graded if every maximal chain from the bottom to a
    /// given element has the same length; reported, not asserted.
    bool graded = false;
    /// Graded with rank equal to (l + #S) / 2, the rank function of Inv(W).
    bool rank_is_formula = false;

    [[nodiscard]] bool consistent() const {
        return formula_mismatches.empty() && parity_failures.empty() &&
               bruhat_violations.empty() && cover_violations.empty() &&
               subset_violations.empty() && not_below_top.empty();
    }
};

/// Report for the ANR at `node`. Throws DomainError for other nodes
/// (non-ANR maximal ideals go through maximal_ideal_report).
ConjectureReport conjecture_check(const RootSystem& rs, int node);
/// Same, with the Bruhat comparison matrix filled serially.
ConjectureReport conjecture_check_serial(const RootSystem& rs, int node);

/// Report for a maximal abelian ideal that is not an ANR, where violations
/// are expected. Throws DomainError for ANRs (use conjecture_check) and for
/// ideals that are not maximal abelian.
ConjectureReport maximal_ideal_report(const RootSystem& rs, const RootSet& a);

/// Bruhat comparison matrix on a list of involutions: entry [i][j] is
/// sigma_i <= sigma_j. Row-major, size n*n.
std::vector<char> bruhat_matrix(const RootSystem& rs, const std::vector<Involution>& sigmas);
std::vector<char> bruhat_matrix_serial(const RootSystem& rs,
                                       const std::vector<Involution>& sigmas);

/// DOT digraph of the covers, edges from smaller to larger.
std::string hasse_dot(const RootSystem& rs, const ConjectureReport& report,
                      Numbering numbering = Numbering::Bourbaki);

}  // namespace abelorb

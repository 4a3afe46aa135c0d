#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "abelorb/root_set.hpp"

namespace abelorb {

enum class Family { A, B, C, D, E, F, G };

/// Cartan type of a finite simple root system, e.g. "D4".
struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    /// Throws DomainError on an unknown family or a rank outside the
    /// family's bounds (A n>=1, B/C n>=2, D n>=3, E 6..8, F 4, G 2).
    static SimpleType parse(std::string_view text);
    static SimpleType make(Family family, int rank);

    [[nodiscard]] std::string name() const;
    [[nodiscard]] bool is_classical() const { return family <= Family::D; }
    [[nodiscard]] bool simply_laced() const {
        return family == Family::A || family == Family::D || family == Family::E;
    }

    friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

enum class LengthClass { Long, Short };

/// Integer coordinates over the simple-root basis.
using Coeffs = std::vector<int>;

struct Root {
    Coeffs coeffs;
    int height = 0;
    LengthClass length = LengthClass::Long;
};

struct CoeffsHash {
    std::size_t operator()(const Coeffs& c) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : c) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ULL;
        }
        return h;
    }
};

/// Immutable table of the positive roots of a simple type.
///
/// Simple roots follow the Bourbaki numbering; index i (0-based) in every
/// API below refers to alpha_{i+1}. Positive roots are ordered by height and,
/// within a height, by decreasing coefficient vector, so the simple roots
/// occupy indices 0..rank-1 in their natural order.
///
/// The bilinear form is kept as integers scaled by the lacing number r
/// (1, 2 or 3): scaled (a,a) is 2r for long roots and 2 for short roots,
/// i.e. long roots have squared length 2 in the true normalisation.
class RootSystem {
public:
    explicit RootSystem(SimpleType type);

    [[nodiscard]] const SimpleType& type() const { return type_; }
    [[nodiscard]] int rank() const { return type_.rank; }
    [[nodiscard]] int num_positive() const { return static_cast<int>(roots_.size()); }
    [[nodiscard]] const std::vector<Root>& positive_roots() const { return roots_; }
    [[nodiscard]] const Root& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const Coeffs& coeffs(int i) const { return root(i).coeffs; }
    [[nodiscard]] int height(int i) const { return root(i).height; }
    [[nodiscard]] bool is_long(int i) const { return root(i).length == LengthClass::Long; }
    /// Index of alpha_{i+1}.
    [[nodiscard]] int simple(int i) const { return i; }
    [[nodiscard]] int theta() const { return num_positive() - 1; }

    /// Humphreys convention: cartan()[i][j] = <alpha_i, alpha_j^vee>.
    [[nodiscard]] const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    [[nodiscard]] int lacing() const { return lacing_; }
    /// r * (a, b) for coefficient vectors a, b.
    [[nodiscard]] long scaled_inner(const Coeffs& a, const Coeffs& b) const;
    [[nodiscard]] long scaled_inner(int i, int j) const { return gram_roots_[idx(i, j)]; }
    /// <a, b^vee> = 2(a,b)/(b,b); b must be a root.
    [[nodiscard]] int pairing(const Coeffs& a, const Coeffs& b) const;

    [[nodiscard]] std::optional<int> find_positive(const Coeffs& v) const;
    /// True iff +v or -v is a root. Throws DomainError on a dimension mismatch.
    [[nodiscard]] bool is_root(const Coeffs& v) const;

    /// Index of root(i) + root(j), or -1 if the sum is not a root.
    [[nodiscard]] int sum_index(int i, int j) const { return sum_[idx(i, j)]; }
    /// Index of root(i) - root(j), or -1 if the difference is not a positive root.
    [[nodiscard]] int diff_index(int i, int j) const { return diff_[idx(i, j)]; }

    /// Neither sum nor difference is a root. Throws DomainError if i == j.
    [[nodiscard]] bool strongly_orthogonal(int i, int j) const;
    /// root(i) <= root(j) in the dominance order.
    [[nodiscard]] bool dominance_leq(int i, int j) const { return above_[i].contains(j); }

    [[nodiscard]] RootSet min_elements(const RootSet& m) const;
    [[nodiscard]] RootSet max_elements(const RootSet& m) const;

    [[nodiscard]] RootSet all() const { return RootSet::first(num_positive()); }
    /// {mu : mu >= root(i)}
    [[nodiscard]] const RootSet& above(int i) const { return above_[i]; }
    /// {mu : mu <= root(i)}
    [[nodiscard]] const RootSet& below(int i) const { return below_[i]; }
    /// (root(i) + Delta+) cap Delta+
    [[nodiscard]] const RootSet& up_shift(int i) const { return up_shift_[i]; }
    /// (root(i) - Delta+) cap Delta+
    [[nodiscard]] const RootSet& down_shift(int i) const { return down_shift_[i]; }
    /// Roots strongly orthogonal to root(i).
    [[nodiscard]] const RootSet& strongly_orthogonal_to(int i) const { return so_[i]; }

    /// epsilon coordinates exist for families A-D only.
    [[nodiscard]] bool has_eps() const { return !eps_basis_.empty(); }
    [[nodiscard]] int eps_dimension() const;
    [[nodiscard]] std::vector<int> to_eps(const Coeffs& c) const;
    /// Inverse of to_eps; nullopt if the vector is not in the root lattice span.
    [[nodiscard]] std::optional<Coeffs> from_eps(const std::vector<int>& e) const;

private:
    [[nodiscard]] std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * roots_.size() + static_cast<std::size_t>(j);
    }
    void build_cartan();
    void generate_roots();
    void build_tables();

    SimpleType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<long>> gram_;  // scaled, simple-root basis
    int lacing_ = 1;
    std::vector<Root> roots_;
    std::unordered_map<Coeffs, int, CoeffsHash> index_;
    std::vector<long> gram_roots_;
    std::vector<int> sum_;
    std::vector<int> diff_;
    std::vector<RootSet> above_, below_, up_shift_, down_shift_, so_;
    std::vector<std::vector<int>> eps_basis_;  // eps_basis_[k][i] = eps_k-coordinate of alpha_i
};

/// Simple-root numbering used for node indices and coefficient tuples at
/// the user-facing boundary. Internally everything is Bourbaki.
enum class Numbering { Bourbaki, VinbergOnishchik };

Numbering parse_numbering(std::string_view text);
std::string to_string(Numbering n);

/// Internal (Bourbaki, 0-based) index of the external node `node` (1-based)
/// under the given convention. The two conventions differ only on E-types.
int node_to_internal(const SimpleType& t, Numbering n, int node);
int node_to_external(const SimpleType& t, Numbering n, int internal);

}  // namespace abelorb

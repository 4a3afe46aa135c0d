#pragma once

#include <vector>

#include "abelorb/rational.hpp"
#include "abelorb/root_system.hpp"

namespace abelorb {

/// Exact coefficients on the root vectors of an abelian ideal: either
/// sum a_gamma e_gamma in a, or sum c_gamma xi_{-gamma} in a*.
class IdealVector {
public:
    IdealVector() = default;
    IdealVector(const RootSystem& rs, RootSet ambient)
        : ambient_(ambient), coeffs_(static_cast<std::size_t>(rs.num_positive())) {}

    [[nodiscard]] const RootSet& ambient() const { return ambient_; }
    [[nodiscard]] const Rational& at(int root) const { return coeffs_[static_cast<std::size_t>(root)]; }
    /// Throws DomainError if root is outside the ambient ideal and q != 0.
    void set(int root, const Rational& q);
    void add(int root, const Rational& q) { set(root, at(root) + q); }

    [[nodiscard]] RootSet support() const;
    [[nodiscard]] bool is_zero() const { return support().empty(); }
    [[nodiscard]] std::size_t dimension() const { return coeffs_.size(); }

    /// sum over S of the basis vectors
    static IdealVector indicator(const RootSystem& rs, const RootSet& ambient, const RootSet& s);

    friend bool operator==(const IdealVector& a, const IdealVector& b) {
        return a.ambient_ == b.ambient_ && a.coeffs_ == b.coeffs_;
    }

private:
    RootSet ambient_;
    std::vector<Rational> coeffs_;
};

}  // namespace abelorb

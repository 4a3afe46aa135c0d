#include "abelorb/ideal_vector.hpp"

#include "abelorb/errors.hpp"

namespace abelorb {

void IdealVector::set(int root, const Rational& q) {
    require(root >= 0 && static_cast<std::size_t>(root) < coeffs_.size(), "root index out of range");
    require(q == 0 || ambient_.contains(root), "coefficient outside the ideal");
    coeffs_[static_cast<std::size_t>(root)] = q;
}

RootSet IdealVector::support() const {
    RootSet out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.insert(static_cast<int>(i));
    return out;
}

IdealVector IdealVector::indicator(const RootSystem& rs, const RootSet& ambient, const RootSet& s) {
    IdealVector v(rs, ambient);
    s.for_each([&](int g) { v.set(g, 1); });
    return v;
}

}  // namespace abelorb

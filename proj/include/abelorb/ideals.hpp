#pragma once

#include <vector>

#include "abelorb/root_system.hpp"

namespace abelorb {

/// {gamma in Delta+ : gamma >= nu for some nu in M}
RootSet ideal_generated(const RootSystem& rs, const RootSet& m);

/// Upward closed under adding positive roots.
bool is_ideal(const RootSystem& rs, const RootSet& s);

/// No two members (possibly equal) sum to a root.
bool is_abelian(const RootSystem& rs, const RootSet& s);

/// Roots whose sum with root(i) is a root.
std::vector<RootSet> sum_partners(const RootSystem& rs);

/// Every abelian ideal, ordered by canonical_less.
std::vector<RootSet> enumerate_abelian_ideals(const RootSystem& rs);

/// Same result, with the search split across threads by first generator.
std::vector<RootSet> enumerate_abelian_ideals_parallel(const RootSystem& rs);

/// Abelian ideals not properly contained in another abelian ideal.
std::vector<RootSet> maximal_abelian_ideals(const RootSystem& rs);

struct Nilradical {
    int node = 0;  // internal 0-based simple-root index
    RootSet roots;
};

/// Nilradicals {gamma : coefficient of alpha_i is 1} for every node i where
/// theta has coefficient 1; in increasing node order.
std::vector<Nilradical> abelian_nilradicals(const RootSystem& rs);

/// Nilradical at one node; throws DomainError if theta's coefficient there
/// is not 1.
RootSet abelian_nilradical(const RootSystem& rs, int node);

/// Type A_{n-1} ideal from right-justified row lengths: row i holds
/// e_i - e_j for the last rows[i] columns j. Throws DomainError on a bad shape.
RootSet young_shape_ideal(const RootSystem& rs, const std::vector<int>& rows);

}  // namespace abelorb

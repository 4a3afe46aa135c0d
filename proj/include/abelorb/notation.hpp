#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelorb/ideal_vector.hpp"
#include "abelorb/root_system.hpp"

namespace abelorb {

/// "e1-e4", "2e1", "e2+e3" for classical types; "[1,2,1,0]" otherwise, with
/// tuple positions in the requested numbering.
std::string format_root(const RootSystem& rs, int root, Numbering numbering = Numbering::Bourbaki);
std::string format_tuple(const RootSystem& rs, const Coeffs& c, Numbering numbering = Numbering::Bourbaki);
/// Epsilon form of any lattice vector; nullopt for exceptional types.
std::optional<std::string> eps_string(const RootSystem& rs, const Coeffs& c);
/// Epsilon form when available, otherwise the tuple.
std::string format_coeffs(const RootSystem& rs, const Coeffs& c, Numbering numbering = Numbering::Bourbaki);
/// Comma-separated, in root order.
std::string format_root_set(const RootSystem& rs, const RootSet& s, Numbering numbering = Numbering::Bourbaki);

/// Positive root from an epsilon string (classical types) or a bracketed
/// coefficient tuple. Throws DomainError.
int parse_root(const RootSystem& rs, std::string_view text, Numbering numbering = Numbering::Bourbaki);
/// Comma-separated roots; commas inside brackets do not split.
RootSet parse_root_list(const RootSystem& rs, std::string_view text, Numbering numbering = Numbering::Bourbaki);
/// "root:rational,root:rational,..."; coefficients outside `ambient` are rejected.
IdealVector parse_vector(const RootSystem& rs, const RootSet& ambient, std::string_view text,
                         Numbering numbering = Numbering::Bourbaki);
std::string format_vector(const RootSystem& rs, const IdealVector& v, Numbering numbering = Numbering::Bourbaki);

/// Splits on top-level commas.
std::vector<std::string> split_top_level(std::string_view text);

/// One way of naming an abelian ideal on the command line.
struct IdealSpec {
    enum class Kind { Generators, Shape, MaxAbelian, Nilradical };
    Kind kind = Kind::Generators;
    std::string generators;   // root list
    std::vector<int> shape;   // Young rows
    int index = 0;            // 1-based: maximal ideal index or node
};

/// Resolves a spec to its root set. Throws DomainError if the result is not
/// an abelian ideal.
RootSet resolve_ideal(const RootSystem& rs, const IdealSpec& spec, Numbering numbering = Numbering::Bourbaki);

std::vector<int> parse_int_list(std::string_view text);

}  // namespace abelorb

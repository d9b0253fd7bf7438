#ifndef ARRAYPROP_ORACLE_HPP
#define ARRAYPROP_ORACLE_HPP

// Ground truth by enumeration. Nothing here shares code with the
// propagation engines; it only relies on direct constraint evaluation.

#include "arrayprop/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace arrayprop {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

/// All solutions of the whole model, ordered lexicographically by
/// (variable id, value id). Throws SearchSpaceTooLarge when the product of
/// the domain sizes exceeds `limit`.
std::vector<Assignment> enumerate_solutions(const Model& model,
                                            std::uint64_t limit = kDefaultEnumerationLimit);
std::vector<Assignment> enumerate_solutions(const Model& model, const DomainTable& domains,
                                            std::uint64_t limit = kDefaultEnumerationLimit);

/// A solution of the single constraint `c` with var := value, if any.
/// Variables outside the constraint hold the minimum of their domain.
/// Throws SearchSpaceTooLarge when the search visits more than `limit` nodes.
std::optional<Assignment> find_support(const Model& model, const Constraint& c, const DomainTable& domains,
                                       VarId var, ValueId value,
                                       std::uint64_t limit = kDefaultEnumerationLimit);

bool constraint_satisfiable(const Model& model, const Constraint& c, const DomainTable& domains,
                            std::uint64_t limit = kDefaultEnumerationLimit);

/// Removes every value that has no support in some constraint, repeating
/// until nothing changes: the maximal arc-consistent domain table.
DomainTable ac_closure_oracle(const Model& model, std::uint64_t limit = kDefaultEnumerationLimit);
DomainTable ac_closure_oracle(const Model& model, DomainTable domains,
                              std::uint64_t limit = kDefaultEnumerationLimit);

/// True when some domain of the table is empty.
bool has_empty_domain(const DomainTable& domains);

} // namespace arrayprop

#endif

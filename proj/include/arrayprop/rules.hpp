#ifndef ARRAYPROP_RULES_HPP
#define ARRAYPROP_RULES_HPP

#include "arrayprop/model.hpp"
#include "arrayprop/stats.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace arrayprop {

enum class RuleTag { rarx, rary, rara, rara_prime, eq, neq, arrac };

const char* to_string(RuleTag tag);

/// One relevant rule application. Either `removed` is nonempty or the
/// application rewrote the constraint.
struct RuleApplication {
    RuleTag rule;
    std::size_t constraint;
    VarId var = kNoVar;
    Domain removed;
    std::optional<Constraint> rewrite;
};

struct ClosureResult {
    DomainTable domains;
    bool stable = false;
    bool failed = false;
    std::vector<RuleApplication> log;
    PropagationStats stats;
};

// The single-constraint rules below are pure: they read `domains` and
// return the new domain of the variable they reduce. Reads of cell
// domains are counted into `stats` when given.

/// D_x intersected with the union of all addressable cell domains.
Domain rule_rarx(const Model& model, const ArrayEq& c, const DomainTable& domains,
                 PropagationStats* stats = nullptr);

/// D_{y_k} without the values b for which no addressable cell with
/// b_k = b shares a value with D_x. `k` is zero-based.
Domain rule_rary(const Model& model, const ArrayEq& c, const DomainTable& domains, std::size_t k,
                 PropagationStats* stats = nullptr);

/// rule_rary for every dimension at once. One sweep over the addressable
/// cells accumulates the per-(dimension, value) unions.
std::vector<Domain> rule_rary_all(const Model& model, const ArrayEq& c, const DomainTable& domains,
                                  PropagationStats* stats = nullptr);

struct CellUpdate {
    VarId cell;
    Domain domain;
};

/// If the index product is a single tuple b, D_{a[b]} intersected with D_x.
/// Empty optional when that condition does not hold.
std::optional<CellUpdate> rule_rara(const Model& model, const ArrayEq& c, const DomainTable& domains,
                                    PropagationStats* stats = nullptr);

/// Rewrites x = a[y...] into x = a[b] once the index is fixed to b.
/// Throws ModelError(not_applicable) otherwise.
VarEq rule_rara_prime(const Model& model, const ArrayEq& c, const DomainTable& domains);

/// Both sides become D_x /\ D_y.
std::pair<Domain, Domain> rule_eq(const VarEq& c, const DomainTable& domains);

/// A singleton side {d} removes d from the other side.
std::pair<Domain, Domain> rule_neq(const VarNeq& c, const DomainTable& domains);

struct RuleSet {
    bool rarx = true;
    bool rary = true;
    bool rara = true;
    bool rara_prime = false; // replaces rara when set
    bool eq = true;
    bool neq = true;
};

struct ClosureOptions {
    RuleSet rules;
    bool record_log = true;
    // When set, the next worklist item is drawn at random instead of FIFO.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Applies the selected rules until none is relevantly applicable or some
/// domain empties. Starts from the model's initial domains unless given.
ClosureResult rsarr_closure(const Model& model, const ClosureOptions& opts = {});
ClosureResult rsarr_closure(const Model& model, DomainTable start, const ClosureOptions& opts);

} // namespace arrayprop

#endif

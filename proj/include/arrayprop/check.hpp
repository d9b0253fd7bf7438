#ifndef ARRAYPROP_CHECK_HPP
#define ARRAYPROP_CHECK_HPP

#include "arrayprop/engine.hpp"
#include "arrayprop/oracle.hpp"

#include <string>
#include <vector>

namespace arrayprop {

struct Divergence {
    EngineKind engine;
    VarId var = kNoVar; // kNoVar: the failure flags disagree
    Domain engine_domain;
    Domain oracle_domain;
};

/// Propagates with both engines and compares against ac_closure_oracle.
/// When the oracle empties a domain the engines must report failure;
/// otherwise the domain tables must be identical.
std::vector<Divergence> check_engines(const Model& model, std::uint64_t limit = kDefaultEnumerationLimit);

std::string describe(const Model& model, const Divergence& d);

} // namespace arrayprop

#endif

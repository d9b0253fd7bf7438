#ifndef ARRAYPROP_ENGINE_HPP
#define ARRAYPROP_ENGINE_HPP

#include "arrayprop/arrac.hpp"
#include "arrayprop/rules.hpp"

#include <optional>
#include <string_view>

namespace arrayprop {

/// naive: the rule set applied rule by rule. arrac: ARRAC runs plus Rara.
enum class EngineKind { naive, arrac };

const char* to_string(EngineKind kind);
std::optional<EngineKind> parse_engine(std::string_view name);

struct EngineOptions {
    EngineKind kind = EngineKind::arrac;
    bool use_rara_prime = false;
    bool record_log = false;
    std::optional<std::uint64_t> shuffle_seed;
    ArracOptions arrac;
};

ClosureResult propagate(const Model& model, DomainTable start, const EngineOptions& opts);

inline ClosureResult propagate(const Model& model, const EngineOptions& opts)
{
    return propagate(model, model.domains(), opts);
}

} // namespace arrayprop

#endif

#include "arrayprop/engine.hpp"

namespace arrayprop {

const char* to_string(EngineKind kind)
{
    return kind == EngineKind::naive ? "naive" : "arrac";
}

std::optional<EngineKind> parse_engine(std::string_view name)
{
    if (name == "naive")
        return EngineKind::naive;
    if (name == "arrac")
        return EngineKind::arrac;
    return std::nullopt;
}

ClosureResult propagate(const Model& model, DomainTable start, const EngineOptions& opts)
{
    if (opts.kind == EngineKind::naive) {
        ClosureOptions co;
        co.rules.rara_prime = opts.use_rara_prime;
        co.record_log = opts.record_log;
        co.shuffle_seed = opts.shuffle_seed;
        return rsarr_closure(model, std::move(start), co);
    }
    ArracFixpointOptions ao;
    ao.run = opts.arrac;
    ao.use_rara_prime = opts.use_rara_prime;
    ao.record_log = opts.record_log;
    ao.shuffle_seed = opts.shuffle_seed;
    return arrac_fixpoint(model, std::move(start), ao);
}

} // namespace arrayprop

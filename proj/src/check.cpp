#include "arrayprop/check.hpp"

namespace arrayprop {

std::vector<Divergence> check_engines(const Model& model, std::uint64_t limit)
{
    std::vector<Divergence> out;
    auto oracle = ac_closure_oracle(model, limit);
    bool oracle_failed = has_empty_domain(oracle);
    for (auto kind : {EngineKind::naive, EngineKind::arrac}) {
        EngineOptions opts;
        opts.kind = kind;
        auto r = propagate(model, opts);
        if (r.failed != oracle_failed) {
            out.push_back({kind, kNoVar, {}, {}});
            continue;
        }
        if (oracle_failed)
            continue;
        for (VarId v = 0; v < model.num_variables(); ++v)
            if (r.domains[v] != oracle[v])
                out.push_back({kind, v, r.domains[v], oracle[v]});
    }
    return out;
}

std::string describe(const Model& model, const Divergence& d)
{
    std::string engine = to_string(d.engine);
    if (d.var == kNoVar)
        return engine + ": failure flag differs from the oracle";
    return engine + ": " + model.name(d.var) + " engine " + d.engine_domain.to_string(model.values()) +
           " oracle " + d.oracle_domain.to_string(model.values());
}

} // namespace arrayprop

#include "arrayprop/solver.hpp"

namespace arrayprop {

namespace {

class Search {
public:
    Search(const Model& model, const SearchOptions& opts) : model_(model), opts_(opts)
    {
        engine_.kind = opts.engine;
    }

    SearchResult run()
    {
        descend(model_.domains(), 0);
        return std::move(result_);
    }

private:
    bool done() const
    {
        return opts_.solution_limit != 0 && result_.solutions.size() >= opts_.solution_limit;
    }

    VarId choose(const DomainTable& domains) const
    {
        VarId best = kNoVar;
        std::size_t best_size = 0;
        for (VarId v = 0; v < domains.size(); ++v) {
            auto size = domains[v].size();
            if (size <= 1)
                continue;
            if (opts_.var_order == VarOrder::first_unbound)
                return v;
            if (best == kNoVar || size < best_size) {
                best = v;
                best_size = size;
            }
        }
        return best;
    }

    void descend(DomainTable domains, std::size_t depth)
    {
        auto closure = propagate(model_, std::move(domains), engine_);
        result_.stats += closure.stats;
        if (closure.failed) {
            if (depth > 0)
                ++result_.stats.backtracks;
            return;
        }
        if (opts_.on_node)
            opts_.on_node(closure.domains);

        auto var = choose(closure.domains);
        if (var == kNoVar) {
            Assignment solution(closure.domains.size());
            for (VarId v = 0; v < solution.size(); ++v)
                solution[v] = closure.domains[v].min();
            for (const auto& c : model_.constraints()) {
                if (!satisfied(model_, c, solution)) {
                    // Only reachable for relaxed non-linear constraints.
                    if (depth > 0)
                        ++result_.stats.backtracks;
                    return;
                }
            }
            result_.solutions.push_back(std::move(solution));
            return;
        }

        for (auto value : closure.domains[var].values()) {
            if (done())
                return;
            ++result_.stats.decisions;
            DomainTable child = closure.domains;
            child[var] = Domain{value};
            descend(std::move(child), depth + 1);
        }
    }

    const Model& model_;
    const SearchOptions& opts_;
    EngineOptions engine_;
    SearchResult result_;
};

} // namespace

SearchResult solve(const Model& model, const SearchOptions& opts)
{
    return Search(model, opts).run();
}

} // namespace arrayprop

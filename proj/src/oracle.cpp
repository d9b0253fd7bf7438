#include "arrayprop/oracle.hpp"

#include <algorithm>
#include <limits>

namespace arrayprop {

namespace {

constexpr ValueId kUnset = std::numeric_limits<ValueId>::max();

enum class Truth { no, yes, open };

/// Partial evaluation of `c`. When the outcome is still open, `needed`
/// names the next variable whose value would decide more.
Truth evaluate(const Model& model, const Constraint& c, const Assignment& partial, VarId& needed)
{
    auto first_unset = [&](std::initializer_list<VarId> vars) {
        for (auto v : vars)
            if (partial[v] == kUnset)
                return v;
        return kNoVar;
    };
    if (const auto* eq = std::get_if<VarEq>(&c)) {
        needed = first_unset({eq->x, eq->y});
        if (needed != kNoVar)
            return Truth::open;
        return partial[eq->x] == partial[eq->y] ? Truth::yes : Truth::no;
    }
    if (const auto* ne = std::get_if<VarNeq>(&c)) {
        needed = first_unset({ne->x, ne->y});
        if (needed != kNoVar)
            return Truth::open;
        return partial[ne->x] != partial[ne->y] ? Truth::yes : Truth::no;
    }
    const auto& ae = std::get<ArrayEq>(c);
    if (partial[ae.x] == kUnset) {
        needed = ae.x;
        return Truth::open;
    }
    IndexTuple index;
    for (auto y : ae.index) {
        if (partial[y] == kUnset) {
            needed = y;
            return Truth::open;
        }
        index.push_back(partial[y]);
    }
    auto cell = model.array(ae.array).cell(index);
    if (cell == kNoVar)
        return Truth::no;
    if (partial[cell] == kUnset) {
        needed = cell;
        return Truth::open;
    }
    return partial[cell] == partial[ae.x] ? Truth::yes : Truth::no;
}

class SupportSearch {
public:
    SupportSearch(const Model& model, const Constraint& c, const DomainTable& domains, std::uint64_t limit)
        : model_(model), c_(c), domains_(domains), limit_(limit), partial_(model.num_variables(), kUnset)
    {
    }

    std::optional<Assignment> find(VarId var, ValueId value)
    {
        if (!domains_[var].contains(value))
            return std::nullopt;
        partial_[var] = value;
        if (!dfs())
            return std::nullopt;
        // The constraint no longer depends on the unassigned variables.
        for (VarId v = 0; v < partial_.size(); ++v) {
            if (partial_[v] != kUnset)
                continue;
            if (domains_[v].empty()) {
                if (in_scope(v))
                    return std::nullopt;
                partial_[v] = 0;
            } else {
                partial_[v] = domains_[v].min();
            }
        }
        return partial_;
    }

private:
    bool in_scope(VarId v) const
    {
        for (auto [w, role] : occurrences(model_, c_))
            if (w == v)
                return true;
        return false;
    }

    bool dfs()
    {
        if (++nodes_ > limit_)
            throw ModelError(ErrorKind::search_space_too_large,
                             "support search for `" + describe(model_, c_) + "` exceeded " +
                                 std::to_string(limit_) + " nodes");
        VarId needed = kNoVar;
        switch (evaluate(model_, c_, partial_, needed)) {
        case Truth::no: return false;
        case Truth::yes: return true;
        case Truth::open: break;
        }
        for (auto value : domains_[needed].values()) {
            partial_[needed] = value;
            if (dfs())
                return true;
        }
        partial_[needed] = kUnset;
        return false;
    }

    const Model& model_;
    const Constraint& c_;
    const DomainTable& domains_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    Assignment partial_;
};

} // namespace

bool has_empty_domain(const DomainTable& domains)
{
    return std::any_of(domains.begin(), domains.end(), [](const Domain& d) { return d.empty(); });
}

std::vector<Assignment> enumerate_solutions(const Model& model, std::uint64_t limit)
{
    return enumerate_solutions(model, model.domains(), limit);
}

std::vector<Assignment> enumerate_solutions(const Model& model, const DomainTable& domains, std::uint64_t limit)
{
    std::vector<Assignment> out;
    if (has_empty_domain(domains))
        return out;
    std::uint64_t space = 1;
    for (const auto& d : domains) {
        if (space > limit / d.size())
            throw ModelError(ErrorKind::search_space_too_large,
                             "more than " + std::to_string(limit) + " total assignments");
        space *= d.size();
    }

    const auto n = model.num_variables();
    std::vector<std::vector<ValueId>> values(n);
    for (VarId v = 0; v < n; ++v)
        values[v] = domains[v].values();
    Assignment partial(n, kUnset);

    auto consistent = [&] {
        VarId needed;
        for (const auto& c : model.constraints())
            if (evaluate(model, c, partial, needed) == Truth::no)
                return false;
        return true;
    };

    auto dfs = [&](auto&& self, VarId v) -> void {
        if (v == n) {
            out.push_back(partial);
            return;
        }
        for (auto value : values[v]) {
            partial[v] = value;
            if (consistent())
                self(self, v + 1);
        }
        partial[v] = kUnset;
    };
    dfs(dfs, 0);
    return out;
}

std::optional<Assignment> find_support(const Model& model, const Constraint& c, const DomainTable& domains,
                                       VarId var, ValueId value, std::uint64_t limit)
{
    return SupportSearch(model, c, domains, limit).find(var, value);
}

bool constraint_satisfiable(const Model& model, const Constraint& c, const DomainTable& domains,
                            std::uint64_t limit)
{
    auto vars = scope(model, c);
    if (vars.empty())
        return true;
    for (auto value : domains[vars.front()].values())
        if (find_support(model, c, domains, vars.front(), value, limit))
            return true;
    return false;
}

DomainTable ac_closure_oracle(const Model& model, std::uint64_t limit)
{
    return ac_closure_oracle(model, model.domains(), limit);
}

DomainTable ac_closure_oracle(const Model& model, DomainTable domains, std::uint64_t limit)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : model.constraints()) {
            for (auto v : scope(model, c)) {
                for (auto value : domains[v].values()) {
                    if (!find_support(model, c, domains, v, value, limit)) {
                        domains[v].erase(value);
                        changed = true;
                    }
                }
            }
        }
    }
    return domains;
}

} // namespace arrayprop

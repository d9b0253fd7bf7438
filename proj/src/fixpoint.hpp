#ifndef ARRAYPROP_SRC_FIXPOINT_HPP
#define ARRAYPROP_SRC_FIXPOINT_HPP

// Worklist machinery shared by the rule engine and the ARRAC engine.

#include "arrayprop/rules.hpp"

#include <deque>
#include <optional>
#include <random>

namespace arrayprop::detail {

struct Item {
    std::size_t constraint;
    RuleTag rule;
};

class FixpointDriver {
public:
    FixpointDriver(const Model& model, DomainTable domains, bool record_log,
                   std::optional<std::uint64_t> shuffle_seed)
        : model_(model), record_log_(record_log), watchers_(model.num_variables())
    {
        result_.domains = std::move(domains);
        if (shuffle_seed)
            rng_.emplace(*shuffle_seed);
        for (VarId v = 0; v < result_.domains.size(); ++v)
            if (result_.domains[v].empty())
                result_.failed = true;
    }

    const Model& model() const { return model_; }
    DomainTable& domains() { return result_.domains; }
    PropagationStats& stats() { return result_.stats; }
    const Constraint& constraint(std::size_t id) const { return constraints_[id]; }
    bool failed() const { return result_.failed; }

    std::size_t add_constraint(Constraint c)
    {
        constraints_.push_back(std::move(c));
        dead_.push_back(false);
        return constraints_.size() - 1;
    }

    /// Registers a rule item and queues it. The item is re-queued whenever
    /// a non-constant variable of its constraint changes.
    void add_item(std::size_t constraint, RuleTag rule)
    {
        auto id = items_.size();
        items_.push_back({constraint, rule});
        queued_.push_back(false);
        for (auto [v, role] : occurrences(model_, constraints_[constraint]))
            if (!model_.is_fixed(v))
                watchers_[v].push_back(id);
        push(id);
    }

    void kill(std::size_t constraint) { dead_[constraint] = true; }

    /// Replaces D_var by `next` (a subset). Records the application when
    /// something was removed. Returns false once a domain is empty.
    bool commit(VarId var, const Domain& next, RuleTag rule, std::size_t constraint)
    {
        auto& current = result_.domains[var];
        if (next == current)
            return true;
        Domain removed = current - next;
        current = next;
        ++result_.stats.rule_applications;
        result_.stats.values_pruned += removed.size();
        if (record_log_)
            result_.log.push_back({rule, constraint, var, std::move(removed), std::nullopt});
        if (current.empty()) {
            result_.failed = true;
            return false;
        }
        for (auto item : watchers_[var])
            push(item);
        return true;
    }

    void log_rewrite(RuleTag rule, std::size_t constraint, Constraint rewrite)
    {
        ++result_.stats.rule_applications;
        if (record_log_)
            result_.log.push_back({rule, constraint, kNoVar, Domain{}, std::move(rewrite)});
    }

    template <class Apply>
    ClosureResult run(Apply&& apply)
    {
        while (!result_.failed && !queue_.empty()) {
            auto id = pop();
            const auto item = items_[id];
            if (dead_[item.constraint])
                continue;
            apply(item, *this);
        }
        result_.stable = !result_.failed;
        return std::move(result_);
    }

private:
    void push(std::size_t id)
    {
        if (queued_[id])
            return;
        queued_[id] = true;
        queue_.push_back(id);
    }

    std::size_t pop()
    {
        std::size_t at = 0;
        if (rng_) {
            at = std::uniform_int_distribution<std::size_t>(0, queue_.size() - 1)(*rng_);
            std::swap(queue_[at], queue_.front());
        }
        auto id = queue_.front();
        queue_.pop_front();
        queued_[id] = false;
        return id;
    }

    const Model& model_;
    bool record_log_;
    ClosureResult result_;
    std::vector<Constraint> constraints_;
    std::vector<bool> dead_;
    std::vector<Item> items_;
    std::vector<bool> queued_;
    std::vector<std::vector<std::size_t>> watchers_;
    std::deque<std::size_t> queue_;
    std::optional<std::mt19937_64> rng_;
};

void apply_primitive(const Item& item, FixpointDriver& driver);
void apply_fixed_index(const Item& item, FixpointDriver& driver, bool rewrite);

} // namespace arrayprop::detail

#endif

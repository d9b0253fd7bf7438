#include "arrayprop/arrac.hpp"

#include "arrayprop/index_space.hpp"
#include "fixpoint.hpp"

#include <map>

namespace arrayprop {

namespace {

/// B: the explicit prefix from ArracOptions::order, then the rest of the
/// index product in lexicographic order.
class TupleStream {
public:
    TupleStream(const ArrayDef& array, std::span<const VarId> index, const DomainTable& domains,
                const std::optional<std::vector<IndexTuple>>& order)
        : array_(array), cursor_(array, index, domains)
    {
        if (!order)
            return;
        for (const auto& tuple : *order) {
            if (tuple.size() != index.size())
                continue;
            std::vector<std::uint32_t> pos(tuple.size());
            std::size_t offset = 0;
            bool addressable = true;
            for (std::size_t d = 0; d < tuple.size() && addressable; ++d) {
                auto p = array.position(d, tuple[d]);
                addressable = p && domains[index[d]].contains(tuple[d]);
                if (addressable) {
                    pos[d] = *p;
                    offset += *p * array.stride(d);
                }
            }
            if (addressable && listed_.insert(offset).second)
                prefix_.emplace_back(offset, std::move(pos));
        }
    }

    bool next()
    {
        if (at_ < prefix_.size()) {
            offset_ = prefix_[at_].first;
            positions_ = prefix_[at_].second;
            ++at_;
            return true;
        }
        if (started_)
            cursor_.next();
        started_ = true;
        while (!cursor_.done() && listed_.count(cursor_.offset()) != 0)
            cursor_.next();
        if (cursor_.done())
            return false;
        offset_ = cursor_.offset();
        auto p = cursor_.positions();
        positions_.assign(p.begin(), p.end());
        return true;
    }

    std::size_t offset() const { return offset_; }
    const std::vector<std::uint32_t>& positions() const { return positions_; }
    ValueId value(std::size_t dim) const { return array_.keys(dim)[positions_[dim]]; }

    IndexTuple tuple() const
    {
        IndexTuple t(positions_.size());
        for (std::size_t d = 0; d < t.size(); ++d)
            t[d] = value(d);
        return t;
    }

private:
    const ArrayDef& array_;
    IndexCursor cursor_;
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> prefix_;
    std::set<std::size_t> listed_;
    std::size_t at_ = 0;
    bool started_ = false;
    std::size_t offset_ = 0;
    std::vector<std::uint32_t> positions_;
};

/// Runs the two loops and returns the redundant values without touching
/// `domains`.
ArracRunResult arrac_core(const Model& model, const ArrayEq& c, const DomainTable& domains,
                          const ArracOptions& opts)
{
    ArracRunResult result;
    auto& stats = result.stats;
    auto& trace = result.trace;
    const auto& array = model.array(c.array);
    const auto n = c.index.size();
    const Domain& dx = domains[c.x];

    std::vector<Domain> redundant_y(n); // Y_i
    std::size_t nonempty_y = 0;
    for (std::size_t k = 0; k < n; ++k) {
        redundant_y[k] = domains[c.index[k]];
        if (!redundant_y[k].empty())
            ++nonempty_y;
    }
    Domain redundant_x = dx; // X
    std::vector<std::size_t> skipped; // S, as cell offsets
    std::vector<IndexTuple> skipped_tuples;

    // For early restart: unprocessed tuples per (dimension, key position).
    std::vector<std::map<std::uint32_t, std::size_t>> remaining;
    if (opts.early_restart) {
        std::vector<std::size_t> sizes(n, 0);
        std::size_t total = 1;
        for (std::size_t k = 0; k < n; ++k) {
            domains[c.index[k]].for_each([&](ValueId v) {
                if (array.position(k, v))
                    ++sizes[k];
            });
            total *= sizes[k];
        }
        remaining.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            domains[c.index[k]].for_each([&](ValueId v) {
                if (auto p = array.position(k, v))
                    remaining[k][*p] = total / sizes[k];
            });
    }

    TupleStream stream(array, c.index, domains, opts.order);
    bool more = n > 0 && stream.next();
    while (more && nonempty_y > 0) {
        const auto& pos = stream.positions();
        bool guard = false;
        for (std::size_t k = 0; k < n && !guard; ++k)
            guard = redundant_y[k].contains(stream.value(k));

        if (guard) {
            auto cell = array.cell_at(stream.offset());
            if (cell != kNoVar) {
                ++stats.t_computations;
                ++stats.cell_domain_reads;
                if (opts.trace)
                    trace.t_computations.push_back(stream.tuple());
                const Domain& dc = domains[cell];
                if (dx.intersects(dc)) {
                    for (std::size_t k = 0; k < n; ++k) {
                        auto& yk = redundant_y[k];
                        auto v = stream.value(k);
                        if (yk.contains(v)) {
                            yk.erase(v);
                            if (yk.empty())
                                --nonempty_y;
                        }
                    }
                    redundant_x -= dc; // X \ T, as X is a subset of D_x
                }
            }
        } else {
            skipped.push_back(stream.offset());
            ++stats.skipped_indices;
            if (opts.trace)
                trace.skipped.push_back(stream.tuple());
        }

        if (opts.early_restart) {
            std::vector<std::pair<std::size_t, ValueId>> definite;
            for (std::size_t k = 0; k < n; ++k) {
                if (--remaining[k][pos[k]] == 0 && redundant_y[k].contains(stream.value(k)))
                    definite.emplace_back(k, stream.value(k));
            }
            if (!definite.empty()) {
                std::map<VarId, Domain> cut;
                for (auto [k, v] : definite)
                    cut[c.index[k]].insert(v);
                for (auto& [var, values] : cut)
                    result.removed.emplace_back(var, std::move(values));
                result.restarted = true;
                return result;
            }
        }
        more = stream.next();
    }

    // Tuples still in B at first-loop exit.
    while (more) {
        if (opts.transfer_unprocessed) {
            skipped.push_back(stream.offset());
            ++stats.skipped_indices;
            if (opts.trace)
                trace.transferred.push_back(stream.tuple());
        } else if (opts.trace) {
            trace.dropped.push_back(stream.tuple());
        }
        more = stream.next();
    }

    for (std::size_t i = 0; i < skipped.size() && !redundant_x.empty(); ++i) {
        auto cell = array.cell_at(skipped[i]);
        if (cell == kNoVar)
            continue;
        ++stats.cell_domain_reads;
        if (opts.trace)
            trace.second_loop_reads.push_back(array.tuple_at(skipped[i]));
        redundant_x -= domains[cell];
    }

    std::map<VarId, Domain> cut;
    for (std::size_t k = 0; k < n; ++k)
        if (!redundant_y[k].empty())
            cut[c.index[k]] |= redundant_y[k];
    if (!redundant_x.empty())
        cut[c.x] |= redundant_x;
    for (auto& [var, values] : cut) {
        auto present = values & domains[var];
        if (!present.empty())
            result.removed.emplace_back(var, std::move(present));
    }
    return result;
}

} // namespace

ArracRunResult arrac_run(const Model& model, const ArrayEq& c, DomainTable& domains, const ArracOptions& opts)
{
    auto result = arrac_core(model, c, domains, opts);
    result.stats.runs = 1;
    for (const auto& [var, values] : result.removed) {
        domains[var] -= values;
        result.stats.values_pruned += values.size();
        result.changed = true;
        if (domains[var].empty())
            result.failed = true;
    }
    return result;
}

ClosureResult arrac_fixpoint(const Model& model, const ArracFixpointOptions& opts)
{
    return arrac_fixpoint(model, model.domains(), opts);
}

ClosureResult arrac_fixpoint(const Model& model, DomainTable start, const ArracFixpointOptions& opts)
{
    detail::FixpointDriver driver(model, std::move(start), opts.record_log, opts.shuffle_seed);
    for (const auto& c : model.constraints()) {
        auto id = driver.add_constraint(c);
        if (std::holds_alternative<ArrayEq>(c))
            driver.add_item(id, RuleTag::arrac);
        else
            driver.add_item(id, std::holds_alternative<VarEq>(c) ? RuleTag::eq : RuleTag::neq);
    }

    auto run_opts = opts.run;
    run_opts.trace = false;
    return driver.run([&](const detail::Item& item, detail::FixpointDriver& d) {
        if (item.rule != RuleTag::arrac) {
            detail::apply_primitive(item, d);
            return;
        }
        const auto& c = std::get<ArrayEq>(d.constraint(item.constraint));
        auto run = arrac_core(d.model(), c, d.domains(), run_opts);
        auto& stats = d.stats();
        ++stats.runs;
        stats.cell_domain_reads += run.stats.cell_domain_reads;
        stats.t_computations += run.stats.t_computations;
        stats.skipped_indices += run.stats.skipped_indices;
        for (const auto& [var, values] : run.removed)
            if (!d.commit(var, d.domains()[var] - values, RuleTag::arrac, item.constraint))
                return;
        detail::apply_fixed_index(item, d, opts.use_rara_prime);
    });
}

std::set<IndexTuple> supporting_cells(const Model& model, const ArrayEq& c, const DomainTable& domains)
{
    DomainTable probe = domains;
    auto run = arrac_run(model, c, probe, {});
    auto rara = rule_rara(model, c, domains);
    if (run.changed || (rara && rara->domain != domains[rara->cell]))
        throw ModelError(ErrorKind::not_arc_consistent,
                         "`" + describe(model, c) + "` is not closed; propagate first");

    const auto& array = model.array(c.array);
    const auto& dx = domains[c.x];
    std::set<IndexTuple> out;
    for (IndexCursor it(array, c.index, domains); !it.done(); it.next()) {
        auto cell = array.cell_at(it.offset());
        if (cell != kNoVar && dx.intersects(domains[cell]))
            out.insert(it.tuple());
    }
    return out;
}

} // namespace arrayprop

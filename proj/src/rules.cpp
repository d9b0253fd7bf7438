#include "arrayprop/rules.hpp"

#include "arrayprop/index_space.hpp"
#include "fixpoint.hpp"

namespace arrayprop {

const char* to_string(RuleTag tag)
{
    switch (tag) {
    case RuleTag::rarx: return "Rarx";
    case RuleTag::rary: return "Rary";
    case RuleTag::rara: return "Rara";
    case RuleTag::rara_prime: return "RaraPrime";
    case RuleTag::eq: return "Eq";
    case RuleTag::neq: return "Neq";
    case RuleTag::arrac: return "ARRAC";
    }
    return "?";
}

namespace {

void count_read(PropagationStats* stats)
{
    if (stats)
        ++stats->cell_domain_reads;
}

/// The single addressable cell when the index product is one tuple.
std::optional<VarId> selected_cell(const Model& model, const ArrayEq& c, const DomainTable& domains)
{
    const auto& array = model.array(c.array);
    IndexTuple b;
    for (auto y : c.index) {
        auto v = domains[y].singleton();
        if (!v)
            return std::nullopt;
        b.push_back(*v);
    }
    auto cell = array.cell(b);
    if (cell == kNoVar)
        return std::nullopt;
    return cell;
}

} // namespace

Domain rule_rarx(const Model& model, const ArrayEq& c, const DomainTable& domains, PropagationStats* stats)
{
    const auto& array = model.array(c.array);
    Domain reachable;
    for_each_addressable(array, c.index, domains, [&](std::size_t offset) {
        auto cell = array.cell_at(offset);
        if (cell == kNoVar)
            return;
        count_read(stats);
        reachable |= domains[cell];
    });
    return domains[c.x] & reachable;
}

std::vector<Domain> rule_rary_all(const Model& model, const ArrayEq& c, const DomainTable& domains,
                                  PropagationStats* stats)
{
    const auto& array = model.array(c.array);
    const auto n = c.index.size();
    // unions[k][p]: union of the cell domains addressable with key position p in dimension k
    std::vector<std::vector<Domain>> unions(n);
    for (std::size_t k = 0; k < n; ++k)
        unions[k].resize(array.keys(k).size());

    for (IndexCursor it(array, c.index, domains); !it.done(); it.next()) {
        auto cell = array.cell_at(it.offset());
        if (cell == kNoVar)
            continue;
        count_read(stats);
        const auto& cd = domains[cell];
        auto pos = it.positions();
        for (std::size_t k = 0; k < n; ++k)
            unions[k][pos[k]] |= cd;
    }

    std::vector<Domain> out(n);
    const auto& dx = domains[c.x];
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = domains[c.index[k]];
        domains[c.index[k]].for_each([&](ValueId b) {
            auto p = array.position(k, b);
            if (!p || !dx.intersects(unions[k][*p]))
                out[k].erase(b);
        });
    }
    return out;
}

Domain rule_rary(const Model& model, const ArrayEq& c, const DomainTable& domains, std::size_t k,
                 PropagationStats* stats)
{
    if (k >= c.index.size())
        throw std::out_of_range("rule_rary: dimension out of range");
    const auto& array = model.array(c.array);
    std::vector<Domain> unions(array.keys(k).size());
    for (IndexCursor it(array, c.index, domains); !it.done(); it.next()) {
        auto cell = array.cell_at(it.offset());
        if (cell == kNoVar)
            continue;
        count_read(stats);
        unions[it.positions()[k]] |= domains[cell];
    }
    const auto& dx = domains[c.x];
    Domain out = domains[c.index[k]];
    domains[c.index[k]].for_each([&](ValueId b) {
        auto p = array.position(k, b);
        if (!p || !dx.intersects(unions[*p]))
            out.erase(b);
    });
    return out;
}

std::optional<CellUpdate> rule_rara(const Model& model, const ArrayEq& c, const DomainTable& domains,
                                    PropagationStats* stats)
{
    auto cell = selected_cell(model, c, domains);
    if (!cell)
        return std::nullopt;
    count_read(stats);
    return CellUpdate{*cell, domains[*cell] & domains[c.x]};
}

VarEq rule_rara_prime(const Model& model, const ArrayEq& c, const DomainTable& domains)
{
    auto cell = selected_cell(model, c, domains);
    if (!cell)
        throw ModelError(ErrorKind::not_applicable,
                         "`" + describe(model, c) + "`: index is not fixed to a single tuple");
    return VarEq{c.x, *cell};
}

std::pair<Domain, Domain> rule_eq(const VarEq& c, const DomainTable& domains)
{
    auto both = domains[c.x] & domains[c.y];
    return {both, both};
}

std::pair<Domain, Domain> rule_neq(const VarNeq& c, const DomainTable& domains)
{
    Domain dx = domains[c.x];
    Domain dy = domains[c.y];
    if (c.x == c.y) {
        // x != x has no solution
        return {Domain{}, Domain{}};
    }
    if (auto v = dy.singleton())
        dx.erase(*v);
    if (auto v = dx.singleton())
        dy.erase(*v);
    return {dx, dy};
}

namespace detail {

/// Eq/Neq handling shared by both engines.
void apply_primitive(const Item& item, FixpointDriver& driver)
{
    const auto& c = driver.constraint(item.constraint);
    if (const auto* eq = std::get_if<VarEq>(&c)) {
        auto [dx, dy] = rule_eq(*eq, driver.domains());
        driver.commit(eq->x, dx, RuleTag::eq, item.constraint) &&
            driver.commit(eq->y, dy, RuleTag::eq, item.constraint);
    } else if (const auto* ne = std::get_if<VarNeq>(&c)) {
        auto [dx, dy] = rule_neq(*ne, driver.domains());
        driver.commit(ne->x, dx, RuleTag::neq, item.constraint) &&
            driver.commit(ne->y, dy, RuleTag::neq, item.constraint);
    }
}

/// Rara, or the Rara' rewrite followed by Eq propagation on the new constraint.
void apply_fixed_index(const Item& item, FixpointDriver& driver, bool rewrite)
{
    const auto& c = std::get<ArrayEq>(driver.constraint(item.constraint));
    if (!rewrite) {
        if (auto update = rule_rara(driver.model(), c, driver.domains(), &driver.stats()))
            driver.commit(update->cell, update->domain, RuleTag::rara, item.constraint);
        return;
    }
    auto cell = selected_cell(driver.model(), c, driver.domains());
    if (!cell)
        return;
    VarEq replacement{c.x, *cell};
    driver.kill(item.constraint);
    driver.log_rewrite(RuleTag::rara_prime, item.constraint, replacement);
    auto id = driver.add_constraint(replacement);
    driver.add_item(id, RuleTag::eq);
}

} // namespace detail

ClosureResult rsarr_closure(const Model& model, const ClosureOptions& opts)
{
    return rsarr_closure(model, model.domains(), opts);
}

ClosureResult rsarr_closure(const Model& model, DomainTable start, const ClosureOptions& opts)
{
    detail::FixpointDriver driver(model, std::move(start), opts.record_log, opts.shuffle_seed);
    const auto& rules = opts.rules;
    for (const auto& c : model.constraints()) {
        auto id = driver.add_constraint(c);
        if (std::holds_alternative<ArrayEq>(c)) {
            if (rules.rarx)
                driver.add_item(id, RuleTag::rarx);
            if (rules.rary)
                driver.add_item(id, RuleTag::rary);
            if (rules.rara_prime)
                driver.add_item(id, RuleTag::rara_prime);
            else if (rules.rara)
                driver.add_item(id, RuleTag::rara);
        } else if (std::holds_alternative<VarEq>(c)) {
            if (rules.eq)
                driver.add_item(id, RuleTag::eq);
        } else if (rules.neq) {
            driver.add_item(id, RuleTag::neq);
        }
    }

    return driver.run([](const detail::Item& item, detail::FixpointDriver& d) {
        ++d.stats().runs;
        switch (item.rule) {
        case RuleTag::rarx: {
            const auto& c = std::get<ArrayEq>(d.constraint(item.constraint));
            d.commit(c.x, rule_rarx(d.model(), c, d.domains(), &d.stats()), RuleTag::rarx, item.constraint);
            break;
        }
        case RuleTag::rary: {
            const auto& c = std::get<ArrayEq>(d.constraint(item.constraint));
            auto next = rule_rary_all(d.model(), c, d.domains(), &d.stats());
            for (std::size_t k = 0; k < next.size(); ++k) {
                // A repeated index variable gets the intersection of its dimensions.
                auto narrowed = d.domains()[c.index[k]] & next[k];
                if (!d.commit(c.index[k], narrowed, RuleTag::rary, item.constraint))
                    break;
            }
            break;
        }
        case RuleTag::rara:
            detail::apply_fixed_index(item, d, false);
            break;
        case RuleTag::rara_prime:
            detail::apply_fixed_index(item, d, true);
            break;
        case RuleTag::eq:
        case RuleTag::neq:
            detail::apply_primitive(item, d);
            break;
        case RuleTag::arrac:
            break;
        }
    });
}

} // namespace arrayprop

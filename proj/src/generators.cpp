#include "arrayprop/generators.hpp"

#include <algorithm>
#include <numeric>

namespace arrayprop {

namespace {

/// Nonempty random subset of `pool` with at most `max_size` elements.
Domain random_subset(std::mt19937_64& rng, const std::vector<ValueId>& pool, std::size_t max_size)
{
    auto limit = std::min(max_size, pool.size());
    auto size = std::uniform_int_distribution<std::size_t>(1, limit)(rng);
    std::vector<ValueId> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.resize(size);
    return Domain::from(shuffled);
}

} // namespace

Model random_array_model(std::mt19937_64& rng, const RandomModelOptions& opts)
{
    Model m;
    std::vector<ValueId> letters;
    for (std::size_t i = 0; i < opts.alphabet; ++i)
        letters.push_back(m.values().intern(std::string(1, static_cast<char>('A' + i))));

    auto arity = std::uniform_int_distribution<std::size_t>(1, opts.max_arity)(rng);
    std::vector<std::vector<ValueId>> keys(arity);
    std::size_t cells = 1;
    for (std::size_t d = 0; d < arity; ++d) {
        auto size = std::uniform_int_distribution<std::size_t>(1, opts.max_domain)(rng);
        while (size > 1 && cells * size > opts.max_cells)
            --size;
        for (std::size_t k = 1; k <= size; ++k)
            keys[d].push_back(m.values().intern(std::to_string(k)));
        cells *= size;
    }

    ArrayDef array("a", keys);
    std::bernoulli_distribution constant(opts.constant_cell_ratio);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    bool all_constant = true;
    for (std::size_t offset = 0; offset < array.cell_count(); ++offset) {
        VarId cell;
        if (constant(rng)) {
            cell = m.add_constant(letters[pick(rng)]);
        } else {
            std::string name = "a[";
            auto t = array.tuple_at(offset);
            for (std::size_t d = 0; d < t.size(); ++d)
                name += (d ? "," : "") + m.values().name(t[d]);
            cell = m.add_variable(name + "]", random_subset(rng, letters, opts.max_domain), VarKind::cell);
            all_constant = false;
        }
        array.set_at(offset, cell);
    }
    array.constant = all_constant;
    auto id = m.add_array(std::move(array));

    auto add_access = [&](const std::string& suffix) {
        auto x = m.add_variable("x" + suffix, random_subset(rng, letters, opts.max_domain));
        std::vector<VarId> index;
        for (std::size_t d = 0; d < arity; ++d)
            index.push_back(m.add_variable("y" + std::to_string(d + 1) + suffix,
                                           random_subset(rng, keys[d], opts.max_domain)));
        m.add_constraint(ArrayEq{x, id, index});
        return x;
    };
    auto x = add_access("");
    if (opts.extra_constraints) {
        auto x2 = add_access("_2");
        m.add_constraint(VarNeq{x, x2});
    }
    return validate_model(m);
}

Model latin_square_model(std::size_t d)
{
    Model m;
    std::vector<ValueId> results;
    for (std::size_t v = 0; v < d; ++v)
        results.push_back(m.values().intern("v" + std::to_string(v)));
    std::vector<ValueId> keys;
    for (std::size_t k = 1; k <= d; ++k)
        keys.push_back(m.values().intern(std::to_string(k)));

    ArrayDef array("a", {keys, keys});
    array.constant = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            array.set({keys[i], keys[j]}, m.add_constant(results[(i + j) % d]));
    auto id = m.add_array(std::move(array));

    auto x = m.add_variable("x", Domain::from(results));
    auto y1 = m.add_variable("y1", Domain::from(keys));
    auto y2 = m.add_variable("y2", Domain::from(keys));
    m.add_constraint(ArrayEq{x, id, {y1, y2}});
    return validate_model(m);
}

} // namespace arrayprop

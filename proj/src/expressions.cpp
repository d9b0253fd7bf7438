#include "arrayprop/expressions.hpp"

namespace arrayprop {

namespace {

class Flattener {
public:
    Flattener(Model& model, Decomposition& out) : model_(model), out_(out) {}

    VarId atom(const Expression& e)
    {
        if (e.kind == Expression::Kind::variable) {
            if (e.var >= model_.num_variables())
                throw ModelError(ErrorKind::unknown_reference, "unknown variable id " + std::to_string(e.var));
            return e.var;
        }
        return model_.add_constant(e.value);
    }

    /// Array id and flattened index of an access.
    std::pair<std::size_t, std::vector<VarId>> access(const Expression& e)
    {
        auto id = model_.find_array(e.array);
        if (!id)
            throw ModelError(ErrorKind::unknown_reference, "unknown array " + e.array);
        if (e.children.size() != model_.array(*id).arity())
            throw ModelError(ErrorKind::unknown_reference,
                             "array " + e.array + " has arity " + std::to_string(model_.array(*id).arity()) +
                                 ", accessed with " + std::to_string(e.children.size()) + " indices");
        std::vector<VarId> index;
        for (const auto& child : e.children)
            index.push_back(var(child));
        return {*id, std::move(index)};
    }

    VarId var(const Expression& e)
    {
        if (e.is_atom())
            return atom(e);
        // The fresh variable is created before anything its children need.
        auto known = model_.find_array(e.array);
        auto v = known ? fresh(cell_union(*known)) : kNoVar;
        auto [array, index] = access(e);
        out_.constraints.push_back(ArrayEq{v, array, std::move(index)});
        return v;
    }

    VarId fresh(Domain d)
    {
        auto v = model_.add_auxiliary(std::move(d));
        out_.fresh.push_back(v);
        return v;
    }

    Domain cell_union(std::size_t array) const
    {
        Domain d;
        for (auto cell : model_.array(array).cells())
            if (cell != kNoVar)
                d |= model_.domain(cell);
        return d;
    }

    const Model& model() const { return model_; }

private:
    Model& model_;
    Decomposition& out_;
};

void check_linear(const Model& model, const Decomposition& d, const DecomposeOptions& opts)
{
    if (opts.allow_nonlinear)
        return;
    for (const auto& c : d.constraints)
        if (!is_linear(model, c))
            throw ModelError(ErrorKind::non_linear_after_decomposition,
                             "`" + describe(model, c) + "` repeats a variable");
}

std::size_t model_array(const Flattener& f, const Expression& e)
{
    auto id = f.model().find_array(e.array);
    if (!id)
        throw ModelError(ErrorKind::unknown_reference, "unknown array " + e.array);
    return *id;
}

/// Both sides reduced to one variable each; pushes the constraints defining them.
std::pair<VarId, VarId> flatten_sides(Flattener& f, Decomposition& out, const Expression& lhs,
                                      const Expression& rhs)
{
    if (!lhs.is_atom() && !rhs.is_atom()) {
        auto la_id = model_array(f, lhs);
        auto ra_id = model_array(f, rhs);
        auto v = f.fresh(f.cell_union(la_id) | f.cell_union(ra_id));
        auto [la, li] = f.access(lhs);
        auto [ra, ri] = f.access(rhs);
        out.constraints.push_back(ArrayEq{v, la, std::move(li)});
        out.constraints.push_back(ArrayEq{v, ra, std::move(ri)});
        return {kNoVar, kNoVar};
    }
    if (!lhs.is_atom() || !rhs.is_atom()) {
        const auto& acc = lhs.is_atom() ? rhs : lhs;
        const auto& at = lhs.is_atom() ? lhs : rhs;
        // Left to right: the side written first is flattened first.
        VarId x = kNoVar;
        if (&at == &lhs)
            x = f.atom(at);
        auto [array, index] = f.access(acc);
        if (x == kNoVar)
            x = f.atom(at);
        out.constraints.push_back(ArrayEq{x, array, std::move(index)});
        return {kNoVar, kNoVar};
    }
    auto x = f.atom(lhs);
    auto y = f.atom(rhs);
    return {x, y};
}

} // namespace

Decomposition decompose(const Expression& lhs, const Expression& rhs, Model& model, const DecomposeOptions& opts)
{
    Decomposition out;
    Flattener f(model, out);
    auto [x, y] = flatten_sides(f, out, lhs, rhs);
    if (x != kNoVar)
        out.constraints.push_back(VarEq{x, y});
    check_linear(model, out, opts);
    return out;
}

Decomposition decompose_neq(const Expression& lhs, const Expression& rhs, Model& model,
                            const DecomposeOptions& opts)
{
    Decomposition out;
    Flattener f(model, out);
    auto x = f.var(lhs);
    auto y = f.var(rhs);
    out.constraints.push_back(VarNeq{x, y});
    check_linear(model, out, opts);
    return out;
}

Decomposition add_equation(Model& model, const Expression& lhs, const Expression& rhs,
                           const DecomposeOptions& opts)
{
    auto d = decompose(lhs, rhs, model, opts);
    for (const auto& c : d.constraints)
        model.add_constraint(c);
    return d;
}

} // namespace arrayprop

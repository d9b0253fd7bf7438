#include "arrayprop/model.hpp"

#include "arrayprop/index_space.hpp"

#include <algorithm>
#include <sstream>

namespace arrayprop {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::non_linear_constraint: return "NonLinearConstraint";
    case ErrorKind::invalid_index: return "InvalidIndex";
    case ErrorKind::empty_initial_domain: return "EmptyInitialDomain";
    case ErrorKind::unknown_reference: return "UnknownReference";
    case ErrorKind::value_not_in_domain: return "ValueNotInDomain";
    case ErrorKind::non_linear_after_decomposition: return "NonLinearAfterDecomposition";
    case ErrorKind::not_applicable: return "NotApplicable";
    case ErrorKind::not_arc_consistent: return "NotArcConsistent";
    case ErrorKind::search_space_too_large: return "SearchSpaceTooLarge";
    case ErrorKind::no_fitting_word: return "NoFittingWord";
    }
    return "Unknown";
}

namespace {

std::string join_issues(const std::vector<Issue>& issues)
{
    std::string out;
    for (const auto& issue : issues) {
        if (!out.empty())
            out += "; ";
        out += to_string(issue.kind);
        out += ": ";
        out += issue.message;
    }
    return out;
}

} // namespace

ModelError::ModelError(std::vector<Issue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues))
{
    if (issues_.empty())
        throw std::logic_error("ModelError without issues");
}

ArrayDef::ArrayDef(std::string name, std::vector<std::vector<ValueId>> keys)
    : name_(std::move(name)), keys_(std::move(keys))
{
    key_pos_.resize(keys_.size());
    strides_.assign(keys_.size(), 1);
    std::size_t total = 1;
    for (std::size_t d = keys_.size(); d-- > 0;) {
        strides_[d] = total;
        total *= keys_[d].size();
        for (std::uint32_t p = 0; p < keys_[d].size(); ++p) {
            if (!key_pos_[d].emplace(keys_[d][p], p).second)
                throw std::invalid_argument("duplicate key in dimension of array " + name_);
        }
    }
    cells_.assign(keys_.empty() ? 0 : total, kNoVar);
}

std::optional<std::uint32_t> ArrayDef::position(std::size_t dim, ValueId v) const
{
    const auto& m = key_pos_.at(dim);
    if (auto it = m.find(v); it != m.end())
        return it->second;
    return std::nullopt;
}

VarId ArrayDef::cell(const IndexTuple& index) const
{
    if (index.size() != arity())
        return kNoVar;
    std::size_t offset = 0;
    for (std::size_t d = 0; d < index.size(); ++d) {
        auto p = position(d, index[d]);
        if (!p)
            return kNoVar;
        offset += *p * strides_[d];
    }
    return cells_[offset];
}

IndexTuple ArrayDef::tuple_at(std::size_t offset) const
{
    IndexTuple t(arity());
    for (std::size_t d = 0; d < arity(); ++d) {
        t[d] = keys_[d][offset / strides_[d]];
        offset %= strides_[d];
    }
    return t;
}

void ArrayDef::set(const IndexTuple& index, VarId var)
{
    if (index.size() != arity())
        throw std::invalid_argument("index arity mismatch for array " + name_);
    std::size_t offset = 0;
    for (std::size_t d = 0; d < index.size(); ++d) {
        auto p = position(d, index[d]);
        if (!p)
            throw std::invalid_argument("index value is not a key of array " + name_);
        offset += *p * strides_[d];
    }
    cells_[offset] = var;
}

VarId Model::add_variable(std::string name, Domain domain, VarKind kind)
{
    if (var_index_.count(name) != 0)
        throw std::invalid_argument("variable declared twice: " + name);
    auto id = static_cast<VarId>(vars_.size());
    var_index_.emplace(name, id);
    vars_.push_back({std::move(name), kind});
    domains_.push_back(std::move(domain));
    return id;
}

VarId Model::add_constant(ValueId value)
{
    // '$' cannot start a DSL identifier, so these never clash with user names.
    auto name = "$" + values_.name(value) + "#" + std::to_string(next_const_++);
    return add_variable(std::move(name), Domain{value}, VarKind::constant);
}

VarId Model::add_auxiliary(Domain domain)
{
    std::string name;
    do {
        name = "_t" + std::to_string(next_aux_++);
    } while (var_index_.count(name) != 0);
    return add_variable(std::move(name), std::move(domain), VarKind::auxiliary);
}

std::size_t Model::add_array(ArrayDef array)
{
    if (array_index_.count(array.name()) != 0)
        throw std::invalid_argument("array declared twice: " + array.name());
    auto id = arrays_.size();
    array_index_.emplace(array.name(), id);
    arrays_.push_back(std::move(array));
    return id;
}

std::optional<VarId> Model::find_variable(const std::string& name) const
{
    if (auto it = var_index_.find(name); it != var_index_.end())
        return it->second;
    return std::nullopt;
}

std::optional<std::size_t> Model::find_array(const std::string& name) const
{
    if (auto it = array_index_.find(name); it != array_index_.end())
        return it->second;
    return std::nullopt;
}

bool operator==(const Model& a, const Model& b)
{
    return a.values_ == b.values_ && a.vars_ == b.vars_ && a.domains_ == b.domains_ &&
           a.arrays_ == b.arrays_ && a.constraints_ == b.constraints_ &&
           a.validated_ == b.validated_;
}

std::vector<std::pair<VarId, Role>> occurrences(const Model& model, const Constraint& c)
{
    std::vector<std::pair<VarId, Role>> out;
    if (const auto* ae = std::get_if<ArrayEq>(&c)) {
        out.emplace_back(ae->x, Role::result);
        for (auto y : ae->index)
            out.emplace_back(y, Role::index);
        for (auto cell : model.array(ae->array).cells())
            if (cell != kNoVar)
                out.emplace_back(cell, Role::cell);
    } else if (const auto* eq = std::get_if<VarEq>(&c)) {
        out.emplace_back(eq->x, Role::plain);
        out.emplace_back(eq->y, Role::plain);
    } else {
        const auto& ne = std::get<VarNeq>(c);
        out.emplace_back(ne.x, Role::plain);
        out.emplace_back(ne.y, Role::plain);
    }
    return out;
}

std::vector<VarId> scope(const Model& model, const Constraint& c)
{
    std::vector<VarId> vars;
    for (auto [v, role] : occurrences(model, c))
        vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool is_linear(const Model& model, const Constraint& c)
{
    auto occ = occurrences(model, c);
    return scope(model, c).size() == occ.size();
}

bool satisfied(const Model& model, const Constraint& c, const Assignment& assignment)
{
    if (const auto* ae = std::get_if<ArrayEq>(&c)) {
        IndexTuple index;
        index.reserve(ae->index.size());
        for (auto y : ae->index)
            index.push_back(assignment.at(y));
        auto cell = model.array(ae->array).cell(index);
        return cell != kNoVar && assignment.at(ae->x) == assignment.at(cell);
    }
    if (const auto* eq = std::get_if<VarEq>(&c))
        return assignment.at(eq->x) == assignment.at(eq->y);
    const auto& ne = std::get<VarNeq>(c);
    return assignment.at(ne.x) != assignment.at(ne.y);
}

namespace {

std::string term(const Model& model, VarId v)
{
    if (v >= model.num_variables())
        return "?";
    if (model.is_fixed(v))
        return model.values().name(model.domain(v).min());
    return model.name(v);
}

} // namespace

std::string describe(const Model& model, const Constraint& c)
{
    std::ostringstream out;
    if (const auto* ae = std::get_if<ArrayEq>(&c)) {
        out << term(model, ae->x) << " = " << model.array(ae->array).name() << "[";
        for (std::size_t i = 0; i < ae->index.size(); ++i)
            out << (i ? ", " : "") << term(model, ae->index[i]);
        out << "]";
    } else if (const auto* eq = std::get_if<VarEq>(&c)) {
        out << term(model, eq->x) << " = " << term(model, eq->y);
    } else {
        const auto& ne = std::get<VarNeq>(c);
        out << term(model, ne.x) << " != " << term(model, ne.y);
    }
    return out.str();
}

Model validate_model(const Model& model, const ValidateOptions& opts)
{
    std::vector<Issue> issues;
    Model out = model;
    const auto n = model.num_variables();

    for (VarId v = 0; v < n; ++v)
        if (model.domain(v).empty())
            issues.push_back({ErrorKind::empty_initial_domain, "variable " + model.name(v)});

    for (std::size_t a = 0; a < model.arrays().size(); ++a)
        for (auto cell : model.array(a).cells())
            if (cell != kNoVar && cell >= n)
                issues.push_back({ErrorKind::unknown_reference,
                                  "array " + model.array(a).name() + " maps to an unknown variable"});

    for (std::size_t ci = 0; ci < out.constraints().size(); ++ci) {
        auto& c = out.constraints()[ci];
        auto where = "constraint #" + std::to_string(ci);

        bool resolvable = true;
        if (auto* ae = std::get_if<ArrayEq>(&c)) {
            if (ae->array >= model.arrays().size()) {
                issues.push_back({ErrorKind::unknown_reference, where + " uses an unknown array"});
                continue;
            }
            if (ae->index.size() != model.array(ae->array).arity()) {
                issues.push_back({ErrorKind::unknown_reference,
                                  where + ": index length differs from the arity of " +
                                      model.array(ae->array).name()});
                continue;
            }
        }
        for (auto [v, role] : occurrences(model, c))
            resolvable = resolvable && v < n;
        if (!resolvable) {
            issues.push_back({ErrorKind::unknown_reference, where + " references an unknown variable"});
            continue;
        }

        auto* ae = std::get_if<ArrayEq>(&c);
        if (ae == nullptr)
            continue;
        const auto text = describe(model, c);

        if (!is_linear(model, c)) {
            if (opts.allow_nonlinear)
                ae->relaxed = true;
            else
                issues.push_back({ErrorKind::non_linear_constraint,
                                  where + " `" + text + "` repeats a variable"});
        } else {
            ae->relaxed = false;
        }

        const auto& array = model.array(ae->array);
        bool keys_ok = true;
        for (std::size_t d = 0; d < ae->index.size(); ++d) {
            model.domain(ae->index[d]).for_each([&](ValueId v) {
                if (!array.position(d, v)) {
                    keys_ok = false;
                    issues.push_back({ErrorKind::invalid_index,
                                      where + " `" + text + "`: " + model.values().name(v) +
                                          " is not an index of dimension " + std::to_string(d + 1)});
                }
            });
        }
        if (!keys_ok)
            continue;
        bool reported = false;
        for_each_addressable(array, ae->index, model.domains(), [&](std::size_t offset) {
            if (!reported && array.cell_at(offset) == kNoVar) {
                reported = true;
                std::string tuple;
                for (auto v : array.tuple_at(offset))
                    tuple += (tuple.empty() ? "" : ",") + model.values().name(v);
                issues.push_back({ErrorKind::invalid_index,
                                  where + " `" + text + "`: (" + tuple + ") is not mapped"});
            }
        });
    }

    if (!issues.empty())
        throw ModelError(std::move(issues));
    out.mark_validated();
    return out;
}

Model instantiate(const Model& model, VarId var, ValueId value)
{
    if (var >= model.num_variables())
        throw ModelError(ErrorKind::unknown_reference, "no variable with id " + std::to_string(var));
    if (!model.domain(var).contains(value))
        throw ModelError(ErrorKind::value_not_in_domain,
                         value < model.values().size()
                             ? model.values().name(value) + " is not in the domain of " + model.name(var)
                             : "unknown value for " + model.name(var));
    Model out = model;
    out.set_domain(var, Domain{value});
    return out;
}

} // namespace arrayprop

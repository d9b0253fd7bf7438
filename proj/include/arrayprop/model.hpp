#ifndef ARRAYPROP_MODEL_HPP
#define ARRAYPROP_MODEL_HPP

#include "arrayprop/domain.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace arrayprop {

enum class VarKind {
    plain,     // declared by the user
    cell,      // cell of an array of variables
    constant,  // immutable singleton standing in for a literal
    auxiliary, // fresh variable introduced by decomposition
};

/// Role of one occurrence of a variable inside a constraint.
enum class Role { result, index, cell, plain };

struct Variable {
    std::string name;
    VarKind kind = VarKind::plain;
    friend bool operator==(const Variable&, const Variable&) = default;
};

/// An n-ary array: a mapping from constant index tuples to variables.
///
/// Keys of each dimension are kept in declaration order; cells are stored
/// row-major over that order. Unmapped tuples hold kNoVar.
class ArrayDef {
public:
    ArrayDef() = default;
    ArrayDef(std::string name, std::vector<std::vector<ValueId>> keys);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return keys_.size(); }
    const std::vector<ValueId>& keys(std::size_t dim) const { return keys_.at(dim); }
    std::size_t stride(std::size_t dim) const { return strides_[dim]; }
    std::size_t cell_count() const { return cells_.size(); }
    const std::vector<VarId>& cells() const { return cells_; }

    /// Position of `v` among the keys of `dim`, if it is a key.
    std::optional<std::uint32_t> position(std::size_t dim, ValueId v) const;

    VarId cell_at(std::size_t offset) const { return cells_[offset]; }
    VarId cell(const IndexTuple& index) const;
    IndexTuple tuple_at(std::size_t offset) const;

    void set(const IndexTuple& index, VarId var);
    void set_at(std::size_t offset, VarId var) { cells_.at(offset) = var; }

    bool constant = false;

    friend bool operator==(const ArrayDef& a, const ArrayDef& b)
    {
        return a.name_ == b.name_ && a.keys_ == b.keys_ && a.cells_ == b.cells_ &&
               a.constant == b.constant;
    }

private:
    std::string name_;
    std::vector<std::vector<ValueId>> keys_;
    std::vector<std::unordered_map<ValueId, std::uint32_t>> key_pos_;
    std::vector<std::size_t> strides_;
    std::vector<VarId> cells_;
};

/// x = a[y1, ..., yn]
struct ArrayEq {
    VarId x = kNoVar;
    std::size_t array = 0;
    std::vector<VarId> index;
    // Set by validation when a non-linear constraint was admitted under
    // --allow-nonlinear: the rules stay sound but are no longer complete.
    bool relaxed = false;

    friend bool operator==(const ArrayEq&, const ArrayEq&) = default;
};

struct VarEq {
    VarId x = kNoVar;
    VarId y = kNoVar;
    friend bool operator==(const VarEq&, const VarEq&) = default;
};

struct VarNeq {
    VarId x = kNoVar;
    VarId y = kNoVar;
    friend bool operator==(const VarNeq&, const VarNeq&) = default;
};

using Constraint = std::variant<ArrayEq, VarEq, VarNeq>;

enum class ErrorKind {
    non_linear_constraint,
    invalid_index,
    empty_initial_domain,
    unknown_reference,
    value_not_in_domain,
    non_linear_after_decomposition,
    not_applicable,
    not_arc_consistent,
    search_space_too_large,
    no_fitting_word,
};

const char* to_string(ErrorKind kind);

struct Issue {
    ErrorKind kind;
    std::string message;
};

/// Raised for every model-level error. Validation collects all problems
/// it finds before throwing.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(std::vector<Issue> issues);
    ModelError(ErrorKind kind, std::string message)
        : ModelError(std::vector<Issue>{{kind, std::move(message)}})
    {
    }

    ErrorKind kind() const { return issues_.front().kind; }
    const std::vector<Issue>& issues() const { return issues_; }

private:
    std::vector<Issue> issues_;
};

/// Variables, their initial domains, arrays and constraints.
class Model {
public:
    ValueTable& values() { return values_; }
    const ValueTable& values() const { return values_; }

    VarId add_variable(std::string name, Domain domain, VarKind kind = VarKind::plain);
    /// Fresh immutable singleton variable holding `value`.
    VarId add_constant(ValueId value);
    /// Fresh auxiliary variable with a name not yet in use.
    VarId add_auxiliary(Domain domain);

    std::size_t add_array(ArrayDef array);
    void add_constraint(Constraint c) { constraints_.push_back(std::move(c)); }

    std::size_t num_variables() const { return vars_.size(); }
    const Variable& variable(VarId v) const { return vars_.at(v); }
    const std::string& name(VarId v) const { return vars_.at(v).name; }
    bool is_fixed(VarId v) const { return vars_.at(v).kind == VarKind::constant; }
    const Domain& domain(VarId v) const { return domains_.at(v); }
    const DomainTable& domains() const { return domains_; }
    void set_domain(VarId v, Domain d) { domains_.at(v) = std::move(d); }

    const std::vector<ArrayDef>& arrays() const { return arrays_; }
    const ArrayDef& array(std::size_t id) const { return arrays_.at(id); }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    std::vector<Constraint>& constraints() { return constraints_; }

    std::optional<VarId> find_variable(const std::string& name) const;
    std::optional<std::size_t> find_array(const std::string& name) const;

    bool validated() const { return validated_; }
    void mark_validated() { validated_ = true; }

    friend bool operator==(const Model& a, const Model& b);

private:
    ValueTable values_;
    std::vector<Variable> vars_;
    DomainTable domains_;
    std::unordered_map<std::string, VarId> var_index_;
    std::vector<ArrayDef> arrays_;
    std::unordered_map<std::string, std::size_t> array_index_;
    std::vector<Constraint> constraints_;
    std::size_t next_aux_ = 0;
    std::size_t next_const_ = 0;
    bool validated_ = false;
};

/// Every variable occurrence of `c` in order x, indices, cells. Repeated
/// variables appear repeatedly.
std::vector<std::pair<VarId, Role>> occurrences(const Model& model, const Constraint& c);

/// Distinct variables of `c`, ascending.
std::vector<VarId> scope(const Model& model, const Constraint& c);

bool is_linear(const Model& model, const Constraint& c);

/// Direct evaluation of `c` under a full assignment.
bool satisfied(const Model& model, const Constraint& c, const Assignment& assignment);

/// Human-readable rendering, e.g. `x = a[u, v]`. Constants print as values.
std::string describe(const Model& model, const Constraint& c);

struct ValidateOptions {
    bool allow_nonlinear = false;
};

/// Checks references, initial domains, linearity and index validity.
/// Returns the certified model or throws ModelError listing every problem.
Model validate_model(const Model& model, const ValidateOptions& opts = {});

/// Copy of `model` with D_var = {value}.
Model instantiate(const Model& model, VarId var, ValueId value);

} // namespace arrayprop

#endif

#ifndef ARRAYPROP_EXPRESSIONS_HPP
#define ARRAYPROP_EXPRESSIONS_HPP

#include "arrayprop/model.hpp"

#include <string>
#include <vector>

namespace arrayprop {

/// Variable, constant, or (possibly nested) array access.
struct Expression {
    enum class Kind { variable, constant, access };

    Kind kind = Kind::variable;
    VarId var = kNoVar;
    ValueId value = 0;
    std::string array;
    std::vector<Expression> children;

    static Expression variable(VarId v) { return {Kind::variable, v, 0, {}, {}}; }
    static Expression constant(ValueId v) { return {Kind::constant, kNoVar, v, {}, {}}; }
    static Expression access(std::string array, std::vector<Expression> index)
    {
        return {Kind::access, kNoVar, 0, std::move(array), std::move(index)};
    }

    bool is_atom() const { return kind != Kind::access; }
};

struct DecomposeOptions {
    bool allow_nonlinear = false;
};

struct Decomposition {
    std::vector<Constraint> constraints;
    std::vector<VarId> fresh; // auxiliary variables, in creation order
};

/// Flattens `lhs = rhs` into ArrayEq and VarEq constraints. Every nested
/// access and every access-to-access equality gets one auxiliary variable
/// whose domain is the union of the accessed arrays' cell domains; every
/// literal becomes a fresh constant. New variables are added to `model`,
/// the constraints are returned. Inner accesses come first.
///
/// Throws ModelError(unknown_reference) for unknown arrays or wrong arity
/// and ModelError(non_linear_after_decomposition) when an output
/// constraint repeats a variable (unless allowed).
Decomposition decompose(const Expression& lhs, const Expression& rhs, Model& model,
                        const DecomposeOptions& opts = {});

/// Like decompose, but produces x != y over the flattened sides.
Decomposition decompose_neq(const Expression& lhs, const Expression& rhs, Model& model,
                            const DecomposeOptions& opts = {});

/// decompose and append the result to the model's constraints.
Decomposition add_equation(Model& model, const Expression& lhs, const Expression& rhs,
                           const DecomposeOptions& opts = {});

} // namespace arrayprop

#endif

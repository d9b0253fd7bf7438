#ifndef ARRAYPROP_TEST_HELPERS_HPP
#define ARRAYPROP_TEST_HELPERS_HPP

#include "arrayprop/arrac.hpp"
#include "arrayprop/engine.hpp"
#include "arrayprop/generators.hpp"
#include "arrayprop/oracle.hpp"
#include "arrayprop/parser.hpp"
#include "arrayprop/rules.hpp"
#include "arrayprop/solver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace testing {

using namespace arrayprop;

inline std::string data_path(const std::string& name)
{
    return std::string(ARRAYPROP_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Model load(const std::string& name, bool allow_nonlinear = false)
{
    auto m = parse_model(slurp(data_path(name)), {allow_nonlinear});
    return validate_model(m, {allow_nonlinear});
}

inline Model from_text(const std::string& text, bool allow_nonlinear = false)
{
    auto m = parse_model(text, {allow_nonlinear});
    return validate_model(m, {allow_nonlinear});
}

inline VarId var(const Model& m, const std::string& name)
{
    auto v = m.find_variable(name);
    if (!v)
        throw std::runtime_error("no variable " + name);
    return *v;
}

inline Domain dom(const Model& m, std::initializer_list<const char*> names)
{
    Domain d;
    for (auto n : names)
        d.insert(*m.values().find(n));
    return d;
}

inline IndexTuple tup(const Model& m, std::initializer_list<const char*> names)
{
    IndexTuple t;
    for (auto n : names)
        t.push_back(*m.values().find(n));
    return t;
}

inline const ArrayEq& first_array_eq(const Model& m)
{
    for (const auto& c : m.constraints())
        if (auto* a = std::get_if<ArrayEq>(&c))
            return *a;
    throw std::runtime_error("no array constraint");
}

// x in {B, C, D}, y1 in 1..2, y2 in 1..3 over the 2x3 constant array A..F.
inline Model worked_example() { return load("arrac_example.model"); }

// D_x = {A, B}; a[1,1] = A, a[1,2] = B, a[2,1] = C, a[2,2] = A.
inline Model amendment_witness()
{
    return from_text("array a[1..2, 1..2] = [[A, B], [C, A]];\n"
                     "var x in {A, B};\n"
                     "var y1 in 1..2;\n"
                     "var y2 in 1..2;\n"
                     "constraint x = a[y1, y2];\n");
}

// Semantic brute force written independently of the library's oracle and
// rules. An array constraint is solved by enumerating x and the indices
// only: the selected cell must equal x and every other cell is free.
struct Reference {
    const Model& m;

    static bool has_empty(const DomainTable& d)
    {
        for (const auto& x : d)
            if (x.empty())
                return true;
        return false;
    }

    // Supported values per scope variable of one constraint.
    std::map<VarId, Domain> supports(const Constraint& c, const DomainTable& d) const
    {
        std::map<VarId, Domain> out;
        if (auto* e = std::get_if<VarEq>(&c)) {
            out[e->x];
            out[e->y];
            for (auto a : d[e->x].values())
                for (auto b : d[e->y].values())
                    if (a == b) {
                        out[e->x].insert(a);
                        out[e->y].insert(b);
                    }
            return out;
        }
        if (auto* n = std::get_if<VarNeq>(&c)) {
            out[n->x];
            out[n->y];
            if (n->x == n->y)
                return out;
            for (auto a : d[n->x].values())
                for (auto b : d[n->y].values())
                    if (a != b) {
                        out[n->x].insert(a);
                        out[n->y].insert(b);
                    }
            return out;
        }
        const auto& ae = std::get<ArrayEq>(c);
        const auto& arr = m.array(ae.array);
        std::vector<VarId> free_vars;
        auto note = [&](VarId v) {
            out[v];
            if (std::find(free_vars.begin(), free_vars.end(), v) == free_vars.end())
                free_vars.push_back(v);
        };
        note(ae.x);
        for (auto y : ae.index)
            note(y);
        for (auto cell : arr.cells())
            if (cell != kNoVar)
                out[cell];

        std::map<VarId, ValueId> value;
        auto emit = [&] {
            IndexTuple b;
            for (auto y : ae.index)
                b.push_back(value[y]);
            for (std::size_t k = 0; k < b.size(); ++k)
                if (!arr.position(k, b[k]))
                    return;
            VarId cell = arr.cell(b);
            if (cell == kNoVar)
                return;
            ValueId xv = value[ae.x];
            if (value.count(cell)) {
                if (value[cell] != xv)
                    return;
            } else if (!d[cell].contains(xv)) {
                return;
            }
            for (auto cl : arr.cells())
                if (cl != kNoVar && cl != cell && !value.count(cl) && d[cl].empty())
                    return;
            for (auto& [v, val] : value)
                out[v].insert(val);
            if (!value.count(cell))
                out[cell].insert(xv);
            for (auto cl : arr.cells())
                if (cl != kNoVar && cl != cell && !value.count(cl))
                    out[cl] |= d[cl];
        };
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == free_vars.size()) {
                emit();
                return;
            }
            for (auto v : d[free_vars[i]].values()) {
                value[free_vars[i]] = v;
                rec(i + 1);
            }
            value.erase(free_vars[i]);
        };
        rec(0);
        return out;
    }

    DomainTable ac_closure(DomainTable d) const
    {
        bool changed = true;
        while (changed && !has_empty(d)) {
            changed = false;
            for (const auto& c : m.constraints()) {
                for (auto& [v, sup] : supports(c, d)) {
                    auto next = d[v] & sup;
                    if (next != d[v]) {
                        d[v] = next;
                        changed = true;
                    }
                }
            }
        }
        return d;
    }

    DomainTable ac_closure() const { return ac_closure(m.domains()); }

    bool holds(const Constraint& c, const Assignment& a) const
    {
        if (auto* e = std::get_if<VarEq>(&c))
            return a[e->x] == a[e->y];
        if (auto* n = std::get_if<VarNeq>(&c))
            return a[n->x] != a[n->y];
        const auto& ae = std::get<ArrayEq>(c);
        const auto& arr = m.array(ae.array);
        IndexTuple b;
        for (auto y : ae.index)
            b.push_back(a[y]);
        for (std::size_t k = 0; k < b.size(); ++k)
            if (!arr.position(k, b[k]))
                return false;
        VarId cell = arr.cell(b);
        return cell != kNoVar && a[cell] == a[ae.x];
    }

    // Full product over every variable; only for tiny models.
    std::vector<Assignment> solutions() const
    {
        std::vector<Assignment> out;
        Assignment a(m.num_variables());
        std::function<void(VarId)> rec = [&](VarId v) {
            if (v == m.num_variables()) {
                for (const auto& c : m.constraints())
                    if (!holds(c, a))
                        return;
                out.push_back(a);
                return;
            }
            for (auto val : m.domain(v).values()) {
                a[v] = val;
                rec(v + 1);
            }
        };
        rec(0);
        return out;
    }
};

inline std::string table_string(const Model& m, const DomainTable& d)
{
    std::string out;
    for (VarId v = 0; v < d.size(); ++v)
        out += m.name(v) + "=" + d[v].to_string(m.values()) + " ";
    return out;
}

} // namespace testing

#endif

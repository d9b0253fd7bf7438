#include "arrayprop/parser.hpp"

#include "arrayprop/expressions.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace arrayprop {

namespace {

std::string join(const std::vector<SyntaxIssue>& issues)
{
    std::string out;
    for (const auto& i : issues) {
        if (!out.empty())
            out += "\n";
        out += std::to_string(i.line) + ":" + std::to_string(i.column) + ": " + i.message;
    }
    return out;
}

enum class Tok { ident, integer, punct, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> lex(std::string_view src, std::vector<SyntaxIssue>& issues)
{
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };

    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        auto start_line = line;
        auto start_col = col;
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && is_ident(src[j]))
                ++j;
            out.push_back({Tok::ident, std::string(src.substr(i, j - i)), start_line, start_col});
            advance(j - i);
            continue;
        }
        if (is_digit(c) || (c == '-' && i + 1 < src.size() && is_digit(src[i + 1]))) {
            std::size_t j = i + 1;
            while (j < src.size() && is_digit(src[j]))
                ++j;
            out.push_back({Tok::integer, std::string(src.substr(i, j - i)), start_line, start_col});
            advance(j - i);
            continue;
        }
        for (std::string_view p : {"..", "!=", "<>"}) {
            if (src.substr(i, 2) == p) {
                out.push_back({Tok::punct, std::string(p), start_line, start_col});
                advance(2);
                goto next;
            }
        }
        if (std::string_view("{}[](),;=").find(c) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, c), start_line, start_col});
            advance(1);
            continue;
        }
        issues.push_back({start_line, start_col, std::string("unexpected character '") + c + "'"});
        advance(1);
    next:;
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

struct Recover {};

/// Parsed but not yet resolved expression, keeps positions for messages.
struct RawExpr {
    Token head;
    bool access = false;
    std::vector<RawExpr> children;
};

struct Nested {
    Token at;
    bool list = false;
    std::vector<Nested> items;
    bool set = false; // a variable cell with these values
    std::vector<ValueId> values;
};

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts) : opts_(opts)
    {
        tokens_ = lex(text, issues_);
    }

    Model run()
    {
        while (peek().kind != Tok::end) {
            try {
                declaration();
                expect(";");
            } catch (const Recover&) {
                while (peek().kind != Tok::end && !(peek().kind == Tok::punct && peek().text == ";"))
                    ++pos_;
                if (peek().kind != Tok::end)
                    ++pos_;
            }
        }
        if (!issues_.empty())
            throw ParseError(std::move(issues_));
        return std::move(model_);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    bool at_punct(std::string_view p) const { return peek().kind == Tok::punct && peek().text == p; }

    [[noreturn]] void fail(const Token& at, std::string message)
    {
        issues_.push_back({at.line, at.column, std::move(message)});
        throw Recover{};
    }

    std::string describe_token(const Token& t) const
    {
        return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    }

    void expect(std::string_view p)
    {
        if (!at_punct(p))
            fail(peek(), "expected '" + std::string(p) + "', found " + describe_token(peek()));
        ++pos_;
    }

    Token ident(const char* what)
    {
        if (peek().kind != Tok::ident)
            fail(peek(), std::string("expected ") + what + ", found " + describe_token(peek()));
        return tokens_[pos_++];
    }

    bool keyword(std::string_view word)
    {
        if (peek().kind == Tok::ident && peek().text == word) {
            ++pos_;
            return true;
        }
        return false;
    }

    void declaration()
    {
        const Token& start = peek();
        if (keyword("enum"))
            return enum_decl();
        if (keyword("var"))
            return var_decl();
        if (keyword("array"))
            return const_array();
        if (keyword("vararray"))
            return var_array();
        if (keyword("constraint"))
            return constraint();
        fail(start, "expected a declaration (enum, var, array, vararray, constraint), found " +
                        describe_token(start));
    }

    void enum_decl()
    {
        auto name = ident("enum name");
        auto values = value_set();
        if (!enums_.emplace(name.text, std::move(values)).second)
            fail(name, "enum " + name.text + " declared twice");
    }

    void check_fresh_name(const Token& name)
    {
        if (model_.find_variable(name.text) || model_.find_array(name.text))
            fail(name, name.text + " declared twice");
    }

    void var_decl()
    {
        auto name = ident("variable name");
        if (!keyword("in"))
            fail(peek(), "expected 'in', found " + describe_token(peek()));
        auto values = value_set();
        check_fresh_name(name);
        // Leading underscore: introduced by decomposition in a printed model.
        auto kind = name.text.starts_with("_") ? VarKind::auxiliary : VarKind::plain;
        model_.add_variable(name.text, Domain::from(values), kind);
    }

    /// "{" atoms "}" | enum name | INT ".." INT, in written order.
    std::vector<ValueId> value_set()
    {
        std::vector<ValueId> out;
        std::set<ValueId> seen;
        auto add = [&](ValueId v) {
            if (seen.insert(v).second)
                out.push_back(v);
        };
        if (at_punct("{")) {
            ++pos_;
            if (at_punct("}")) {
                ++pos_;
                return out;
            }
            while (true) {
                const auto& t = peek();
                if (t.kind != Tok::ident && t.kind != Tok::integer)
                    fail(t, "expected a value, found " + describe_token(t));
                ++pos_;
                add(model_.values().intern(t.text));
                if (at_punct(",")) {
                    ++pos_;
                    continue;
                }
                expect("}");
                return out;
            }
        }
        if (peek().kind == Tok::ident) {
            auto name = tokens_[pos_++];
            auto it = enums_.find(name.text);
            if (it == enums_.end())
                fail(name, "unknown identifier " + name.text + " (expected an enum)");
            return it->second;
        }
        if (peek().kind == Tok::integer) {
            auto lo_tok = tokens_[pos_++];
            expect("..");
            if (peek().kind != Tok::integer)
                fail(peek(), "expected an integer, found " + describe_token(peek()));
            auto hi_tok = tokens_[pos_++];
            long long lo = std::stoll(lo_tok.text);
            long long hi = std::stoll(hi_tok.text);
            if (hi < lo)
                fail(hi_tok, "empty range");
            if (hi - lo > 1'000'000)
                fail(hi_tok, "range too large");
            for (auto v = lo; v <= hi; ++v)
                add(model_.values().intern(std::to_string(v)));
            return out;
        }
        fail(peek(), "expected a value set, found " + describe_token(peek()));
    }

    std::vector<std::vector<ValueId>> dims()
    {
        expect("[");
        std::vector<std::vector<ValueId>> out;
        out.push_back(value_set());
        while (at_punct(",")) {
            ++pos_;
            out.push_back(value_set());
        }
        expect("]");
        return out;
    }

    Nested nested()
    {
        Nested n{peek(), false, {}, false, {}};
        if (at_punct("[")) {
            ++pos_;
            n.list = true;
            if (!at_punct("]")) {
                n.items.push_back(nested());
                while (at_punct(",")) {
                    ++pos_;
                    n.items.push_back(nested());
                }
            }
            expect("]");
            return n;
        }
        if (at_punct("{")) {
            n.set = true;
            n.values = value_set();
            return n;
        }
        if (peek().kind != Tok::ident && peek().kind != Tok::integer)
            fail(peek(), "expected a value, a value set or '[', found " + describe_token(peek()));
        ++pos_;
        return n;
    }

    void fill(ArrayDef& array, const Nested& n, std::size_t dim, std::size_t offset)
    {
        if (dim == array.arity()) {
            if (n.list)
                fail(n.at, "array " + array.name() + " literal is nested too deeply");
            if (n.set) {
                array.set_at(offset, model_.add_variable(cell_name(array, offset), Domain::from(n.values),
                                                         VarKind::cell));
                array.constant = false;
                return;
            }
            auto value = model_.values().intern(n.at.text);
            array.set_at(offset, model_.add_constant(value));
            return;
        }
        if (!n.list)
            fail(n.at, "array " + array.name() + " literal is missing a level of nesting");
        if (n.items.size() != array.keys(dim).size())
            fail(n.at, "array " + array.name() + " dimension " + std::to_string(dim + 1) + " expects " +
                           std::to_string(array.keys(dim).size()) + " entries, found " +
                           std::to_string(n.items.size()));
        for (std::size_t k = 0; k < n.items.size(); ++k)
            fill(array, n.items[k], dim + 1, offset + k * array.stride(dim));
    }

    void const_array()
    {
        auto name = ident("array name");
        auto keys = dims();
        expect("=");
        auto literal = nested();
        check_fresh_name(name);
        ArrayDef array(name.text, keys);
        array.constant = true;
        fill(array, literal, 0, 0);
        model_.add_array(std::move(array));
    }

    std::string cell_name(const ArrayDef& array, std::size_t offset)
    {
        std::string cell = array.name() + "[";
        auto tuple = array.tuple_at(offset);
        for (std::size_t d = 0; d < tuple.size(); ++d)
            cell += (d ? "," : "") + model_.values().name(tuple[d]);
        return cell + "]";
    }

    void var_array()
    {
        auto name = ident("array name");
        auto keys = dims();
        if (!keyword("in"))
            fail(peek(), "expected 'in', found " + describe_token(peek()));
        auto values = Domain::from(value_set());
        check_fresh_name(name);
        ArrayDef array(name.text, keys);
        for (std::size_t offset = 0; offset < array.cell_count(); ++offset)
            array.set_at(offset, model_.add_variable(cell_name(array, offset), values, VarKind::cell));
        model_.add_array(std::move(array));
    }

    RawExpr expr()
    {
        const auto& t = peek();
        if (t.kind == Tok::integer) {
            ++pos_;
            return {t, false, {}};
        }
        if (t.kind != Tok::ident)
            fail(t, "expected an expression, found " + describe_token(t));
        RawExpr e{tokens_[pos_++], false, {}};
        if (at_punct("[")) {
            ++pos_;
            e.access = true;
            e.children.push_back(expr());
            while (at_punct(",")) {
                ++pos_;
                e.children.push_back(expr());
            }
            expect("]");
        }
        return e;
    }

    Expression resolve(const RawExpr& e)
    {
        const auto& t = e.head;
        if (t.kind == Tok::integer)
            return Expression::constant(model_.values().intern(t.text));
        if (e.access) {
            auto id = model_.find_array(t.text);
            if (!id)
                fail(t, "unknown identifier " + t.text + " (expected an array)");
            auto arity = model_.array(*id).arity();
            if (e.children.size() != arity)
                fail(t, "arity mismatch: " + t.text + " has " + std::to_string(arity) + " dimension(s), " +
                            std::to_string(e.children.size()) + " given");
            std::vector<Expression> children;
            for (const auto& c : e.children)
                children.push_back(resolve(c));
            return Expression::access(t.text, std::move(children));
        }
        if (auto v = model_.find_variable(t.text))
            return Expression::variable(*v);
        if (model_.find_array(t.text))
            fail(t, "array " + t.text + " used without an index");
        if (auto value = model_.values().find(t.text))
            return Expression::constant(*value);
        fail(t, "unknown identifier " + t.text);
    }

    void constraint()
    {
        if (peek().kind == Tok::ident && peek().text == "alldifferent" && tokens_[pos_ + 1].text == "(") {
            pos_ += 2;
            std::vector<VarId> vars;
            while (true) {
                auto name = ident("variable name");
                auto v = model_.find_variable(name.text);
                if (!v)
                    fail(name, "unknown identifier " + name.text);
                vars.push_back(*v);
                if (at_punct(",")) {
                    ++pos_;
                    continue;
                }
                expect(")");
                break;
            }
            for (std::size_t i = 0; i < vars.size(); ++i)
                for (std::size_t j = i + 1; j < vars.size(); ++j)
                    model_.add_constraint(VarNeq{vars[i], vars[j]});
            return;
        }

        const auto& start = peek();
        auto lhs_raw = expr();
        bool equal = at_punct("=");
        if (!equal && !at_punct("!=") && !at_punct("<>"))
            fail(peek(), "expected '=', '!=' or '<>', found " + describe_token(peek()));
        ++pos_;
        auto rhs_raw = expr();
        if (!at_punct(";"))
            fail(peek(), "expected ';', found " + describe_token(peek()));

        auto lhs = resolve(lhs_raw);
        auto rhs = resolve(rhs_raw);
        DecomposeOptions dopts{opts_.allow_nonlinear};
        try {
            auto d = equal ? decompose(lhs, rhs, model_, dopts) : decompose_neq(lhs, rhs, model_, dopts);
            for (const auto& c : d.constraints)
                model_.add_constraint(c);
        } catch (const ModelError& err) {
            fail(start, err.what());
        }
    }

    ParseOptions opts_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<SyntaxIssue> issues_;
    std::unordered_map<std::string, std::vector<ValueId>> enums_;
    Model model_;
};

} // namespace

ParseError::ParseError(std::vector<SyntaxIssue> issues) : std::runtime_error(join(issues)), issues_(std::move(issues))
{
}

Model parse_model(std::string_view text, const ParseOptions& opts)
{
    return Parser(text, opts).run();
}

namespace {

std::string value_list(const Model& model, const std::vector<ValueId>& values)
{
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? ", " : "") + model.values().name(values[i]);
    return out + "}";
}

std::string dims_text(const Model& model, const ArrayDef& array)
{
    std::string out = "[";
    for (std::size_t d = 0; d < array.arity(); ++d)
        out += (d ? ", " : "") + value_list(model, array.keys(d));
    return out + "]";
}

void literal(std::ostream& out, const Model& model, const ArrayDef& array, std::size_t dim, std::size_t offset)
{
    if (dim == array.arity()) {
        auto cell = array.cell_at(offset);
        if (model.is_fixed(cell))
            out << model.values().name(model.domain(cell).min());
        else
            out << model.domain(cell).to_string(model.values());
        return;
    }
    out << "[";
    for (std::size_t k = 0; k < array.keys(dim).size(); ++k) {
        if (k)
            out << ", ";
        literal(out, model, array, dim + 1, offset + k * array.stride(dim));
    }
    out << "]";
}

} // namespace

std::string print_model(const Model& model)
{
    std::ostringstream out;
    if (model.values().size() > 0) {
        std::vector<ValueId> all(model.values().size());
        for (ValueId v = 0; v < all.size(); ++v)
            all[v] = v;
        // Fixes the interning order for the reader.
        out << "enum _values " << value_list(model, all) << ";\n";
    }

    std::map<VarId, std::size_t> owner;
    for (std::size_t a = 0; a < model.arrays().size(); ++a)
        for (auto cell : model.array(a).cells())
            if (cell != kNoVar)
                owner.emplace(cell, a);

    std::vector<bool> printed(model.arrays().size(), false);
    auto print_array = [&](std::size_t a) {
        if (printed[a])
            return;
        printed[a] = true;
        const auto& array = model.array(a);
        bool uniform = array.cell_count() > 0;
        for (auto cell : array.cells())
            uniform = uniform && cell != kNoVar && model.variable(cell).kind == VarKind::cell &&
                      model.domain(cell) == model.domain(array.cell_at(0));
        if (!uniform) {
            out << "array " << array.name() << dims_text(model, array) << " = ";
            literal(out, model, array, 0, 0);
            out << ";\n";
        } else {
            out << "vararray " << array.name() << dims_text(model, array) << " in "
                << model.domain(array.cell_at(0)).to_string(model.values()) << ";\n";
        }
    };

    // A literal in a constraint becomes a constant when read back, so each
    // constraint is emitted where its first such constant sits in id order.
    const auto& constraints = model.constraints();
    std::size_t next = 0;
    std::set<VarId> created;
    auto emit_next = [&] {
        const auto& c = constraints[next++];
        for (auto v : scope(model, c))
            if (model.is_fixed(v) && !owner.count(v))
                created.insert(v);
        out << "constraint " << describe(model, c) << ";\n";
    };

    for (VarId v = 0; v < model.num_variables(); ++v) {
        if (auto it = owner.find(v); it != owner.end()) {
            print_array(it->second);
            continue;
        }
        auto kind = model.variable(v).kind;
        if (kind == VarKind::constant) {
            while (!created.count(v) && next < constraints.size())
                emit_next();
            continue;
        }
        out << "var " << model.name(v) << " in " << model.domain(v).to_string(model.values()) << ";\n";
    }
    for (std::size_t a = 0; a < model.arrays().size(); ++a)
        print_array(a);
    while (next < constraints.size())
        emit_next();
    return out.str();
}

} // namespace arrayprop

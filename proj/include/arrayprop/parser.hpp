#ifndef ARRAYPROP_PARSER_HPP
#define ARRAYPROP_PARSER_HPP

#include "arrayprop/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arrayprop {

struct SyntaxIssue {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<SyntaxIssue> issues);
    const std::vector<SyntaxIssue>& issues() const { return issues_; }

private:
    std::vector<SyntaxIssue> issues_;
};

struct ParseOptions {
    bool allow_nonlinear = false;
};

/// Parses the model language:
///
///     enum Da {p, q, r};
///     var x in Da;
///     var y in 1..3;
///     array a[{i, j}, Dy] = [[p, q, r], [p, q, r]];
///     vararray b[Dy] in Da;
///     array c[1..2] = [p, {q, r}];   // a set leaf is a variable cell
///     constraint x = a[u, v];
///     constraint v != l;
///     constraint alldifferent(x, y, z);
///
/// `//` starts a comment. Variables whose name starts with `_` are taken
/// as auxiliary. `<>` is accepted for `!=`. Nested accesses are
/// decomposed into flat constraints. All problems are collected and thrown
/// together as ParseError; the result is not yet validated.
Model parse_model(std::string_view text, const ParseOptions& opts = {});

/// Renders a model back into the language. Parsing the output and printing
/// again yields the same text.
std::string print_model(const Model& model);

} // namespace arrayprop

#endif

#include "arrayprop/expressions.hpp"
#include "arrayprop/solver.hpp"

#include <algorithm>
#include <set>

namespace arrayprop {

namespace {

constexpr const char* kPadLetter = "_";

bool is_open(const CrosswordSpec& spec, std::size_t r, std::size_t c)
{
    return r < spec.grid.size() && c < spec.grid[r].size() && spec.grid[r][c] == '.';
}

std::string entry_name(const CrosswordEntry& e)
{
    return std::string(e.across ? "A_" : "D_") + std::to_string(e.row) + "_" + std::to_string(e.col);
}

} // namespace

CrosswordModel build_crossword(const CrosswordSpec& spec)
{
    for (const auto& row : spec.grid)
        for (char ch : row)
            if (ch != '.' && ch != '#')
                throw ModelError(ErrorKind::unknown_reference,
                                 std::string("grid cell '") + ch + "' is neither '.' nor '#'");

    std::vector<std::string> words;
    std::set<std::string> seen;
    for (const auto& w : spec.words) {
        if (w.empty())
            throw ModelError(ErrorKind::no_fitting_word, "empty word in word list");
        if (seen.insert(w).second)
            words.push_back(w);
    }

    CrosswordModel cw;
    auto& model = cw.model;

    std::size_t cols = 0;
    for (const auto& row : spec.grid)
        cols = std::max(cols, row.size());

    // Entries: maximal runs of at least two open cells.
    for (int pass = 0; pass < 2; ++pass) {
        bool across = pass == 0;
        std::size_t outer = across ? spec.grid.size() : cols;
        std::size_t inner = across ? cols : spec.grid.size();
        for (std::size_t o = 0; o < outer; ++o) {
            std::size_t i = 0;
            while (i < inner) {
                auto open = [&](std::size_t k) { return across ? is_open(spec, o, k) : is_open(spec, k, o); };
                if (!open(i)) {
                    ++i;
                    continue;
                }
                std::size_t start = i;
                while (i < inner && open(i))
                    ++i;
                if (i - start >= 2) {
                    CrosswordEntry e;
                    e.across = across;
                    e.row = across ? o : start;
                    e.col = across ? start : o;
                    e.length = i - start;
                    cw.entries.push_back(e);
                }
            }
        }
    }
    if (cw.entries.empty())
        throw ModelError(ErrorKind::no_fitting_word, "grid has no entry of length two or more");

    std::size_t max_len = 0;
    std::vector<ValueId> word_ids;
    for (const auto& w : words) {
        word_ids.push_back(model.values().intern(w));
        max_len = std::max(max_len, w.size());
    }
    std::vector<ValueId> positions;
    for (std::size_t p = 1; p <= max_len; ++p)
        positions.push_back(model.values().intern(std::to_string(p)));

    // l[w, p]: letter p of word w, padded so every (word, position) is mapped.
    ArrayDef letters("l", {word_ids, positions});
    letters.constant = true;
    auto pad = model.values().intern(kPadLetter);
    for (std::size_t w = 0; w < words.size(); ++w) {
        for (std::size_t p = 0; p < max_len; ++p) {
            auto letter = p < words[w].size() ? model.values().intern(std::string(1, words[w][p])) : pad;
            letters.set({word_ids[w], positions[p]}, model.add_constant(letter));
        }
    }
    cw.letter_array = model.add_array(std::move(letters));

    std::vector<std::string> unfit;
    for (auto& e : cw.entries) {
        Domain fitting;
        for (std::size_t w = 0; w < words.size(); ++w)
            if (words[w].size() == e.length)
                fitting.insert(word_ids[w]);
        if (fitting.empty())
            unfit.push_back(entry_name(e) + " (length " + std::to_string(e.length) + ")");
        e.var = model.add_variable(entry_name(e), std::move(fitting));
    }
    if (!unfit.empty()) {
        std::vector<Issue> issues;
        for (auto& u : unfit)
            issues.push_back({ErrorKind::no_fitting_word, "no word fits entry " + u});
        throw ModelError(std::move(issues));
    }

    // Crossings: l[E_a, p] = l[E_d, q].
    for (const auto& a : cw.entries) {
        if (!a.across)
            continue;
        for (const auto& d : cw.entries) {
            if (d.across)
                continue;
            if (d.col < a.col || d.col >= a.col + a.length || a.row < d.row || a.row >= d.row + d.length)
                continue;
            auto p = d.col - a.col;
            auto q = a.row - d.row;
            auto lhs = Expression::access("l", {Expression::variable(a.var), Expression::constant(positions[p])});
            auto rhs = Expression::access("l", {Expression::variable(d.var), Expression::constant(positions[q])});
            add_equation(model, lhs, rhs);
            ++cw.crossings;
        }
    }

    for (std::size_t i = 0; i < cw.entries.size(); ++i)
        for (std::size_t j = i + 1; j < cw.entries.size(); ++j)
            model.add_constraint(VarNeq{cw.entries[i].var, cw.entries[j].var});

    cw.model = validate_model(model);
    return cw;
}

std::vector<std::string> render_crossword(const CrosswordSpec& spec, const CrosswordModel& cw,
                                          const Assignment& solution)
{
    std::vector<std::string> out = spec.grid;
    for (const auto& e : cw.entries) {
        const auto& word = cw.model.values().name(solution.at(e.var));
        for (std::size_t k = 0; k < e.length && k < word.size(); ++k) {
            auto r = e.across ? e.row : e.row + k;
            auto c = e.across ? e.col + k : e.col;
            if (out[r].size() <= c)
                out[r].resize(c + 1, '#');
            out[r][c] = word[k];
        }
    }
    return out;
}

namespace {

std::string trim(std::string s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
        ++i;
    return s.substr(i);
}

} // namespace

CrosswordSpec read_crossword(std::istream& grid, std::istream& words)
{
    CrosswordSpec spec;
    std::string line;
    while (std::getline(grid, line)) {
        line = trim(line);
        if (!line.empty())
            spec.grid.push_back(line);
    }
    while (std::getline(words, line)) {
        line = trim(line);
        if (!line.empty())
            spec.words.push_back(line);
    }
    return spec;
}

} // namespace arrayprop

#ifndef ARRAYPROP_SOLVER_HPP
#define ARRAYPROP_SOLVER_HPP

#include "arrayprop/engine.hpp"

#include <functional>
#include <istream>
#include <string>
#include <vector>

namespace arrayprop {

enum class VarOrder { first_unbound, smallest_domain };

struct SearchOptions {
    EngineKind engine = EngineKind::arrac;
    VarOrder var_order = VarOrder::smallest_domain;
    std::size_t solution_limit = 0; // 0: all solutions
    // Called with the propagated domains of every non-failed node.
    std::function<void(const DomainTable&)> on_node;
};

struct SearchResult {
    std::vector<Assignment> solutions;
    PropagationStats stats;
};

/// Depth-first search: propagate to fixpoint, branch on a variable with
/// values in ascending order, backtrack on failure.
SearchResult solve(const Model& model, const SearchOptions& opts = {});

struct CrosswordSpec {
    std::vector<std::string> grid; // '#' blocked, '.' open, one string per row
    std::vector<std::string> words;
};

struct CrosswordEntry {
    bool across = true;
    std::size_t row = 0;
    std::size_t col = 0;
    std::size_t length = 0;
    VarId var = kNoVar;
};

struct CrosswordModel {
    Model model;
    std::vector<CrosswordEntry> entries;
    std::size_t crossings = 0;
    std::size_t letter_array = 0;
};

/// Entry variables over fitting words, a constant letter array l[w, p],
/// l[E_i, p] = l[E_j, q] for every crossing cell, and pairwise E_i != E_j.
/// Throws ModelError(no_fitting_word) when an entry has no word of its length.
CrosswordModel build_crossword(const CrosswordSpec& spec);

/// The grid with every entry filled in from `solution`.
std::vector<std::string> render_crossword(const CrosswordSpec& spec, const CrosswordModel& cw,
                                          const Assignment& solution);

/// Grid: one row per line. Words: one per line; blank lines are skipped.
CrosswordSpec read_crossword(std::istream& grid, std::istream& words);

} // namespace arrayprop

#endif

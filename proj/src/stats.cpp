#include "arrayprop/stats.hpp"

namespace arrayprop {

PropagationStats& PropagationStats::operator+=(const PropagationStats& o)
{
    runs += o.runs;
    cell_domain_reads += o.cell_domain_reads;
    t_computations += o.t_computations;
    values_pruned += o.values_pruned;
    skipped_indices += o.skipped_indices;
    rule_applications += o.rule_applications;
    decisions += o.decisions;
    backtracks += o.backtracks;
    return *this;
}

std::map<std::string, std::uint64_t> PropagationStats::to_map() const
{
    return {
        {"runs", runs},
        {"cell_domain_reads", cell_domain_reads},
        {"t_computations", t_computations},
        {"values_pruned", values_pruned},
        {"skipped_indices", skipped_indices},
        {"rule_applications", rule_applications},
        {"decisions", decisions},
        {"backtracks", backtracks},
    };
}

} // namespace arrayprop

#pragma once

#include "seqmon/experiments.hpp"

namespace seqmon {

/// Builds the cell grid (models, monitor configs, published values) of one
/// simulation-study table. Control limits are left at 0 and filled by
/// replicate_table.
TableReplication build_table_definition(int table_id, const ReplicationOptions& options);

/// Fills in the qualitative ordering checks once all cells have run.
void evaluate_orderings(TableReplication& table);

}  // namespace seqmon

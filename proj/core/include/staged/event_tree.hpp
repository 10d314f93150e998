#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "staged/table.hpp"

namespace staged {

struct Variable {
  std::string name;
  std::vector<std::string> levels;  // ordered, distinct

  std::size_t cardinality() const { return levels.size(); }
  std::size_t level_index(const std::string& label) const;  // throws validation_error
};

// A context at depth i is a configuration of the first i variables
// (x_0,...,x_{i-1}); its rank is the mixed-radix encoding with x_0 the
// most significant digit. Depth 0 has the single empty context.
struct Context {
  std::size_t depth = 0;
  std::vector<std::size_t> values;
  std::size_t rank = 0;
};

// The fixed frame every other structure indexes into: the variable
// ordering, per-variable level sets, and the modeled depth set
// C = {c_first,...,p} (a contiguous suffix of the ordering).
class EventTree {
 public:
  EventTree(std::vector<Variable> variables, std::size_t c_first);

  std::size_t n_variables() const { return variables_.size(); }
  std::size_t p() const { return variables_.size() - 1; }
  const Variable& variable(std::size_t depth) const { return variables_[depth]; }
  const std::vector<Variable>& variables() const { return variables_; }
  std::size_t cardinality(std::size_t depth) const { return variables_[depth].cardinality(); }

  std::size_t c_first() const { return c_first_; }
  bool is_modeled(std::size_t depth) const { return depth >= c_first_; }
  std::vector<std::size_t> modeled_depths() const;

  // number of contexts at a depth: product of earlier cardinalities (1 at depth 0)
  std::size_t n_contexts(std::size_t depth) const { return n_contexts_[depth]; }

  std::size_t encode_context(std::size_t depth, const std::vector<std::size_t>& values) const;
  std::vector<std::size_t> decode_context(std::size_t depth, std::size_t rank) const;
  Context context_at(std::size_t depth, std::size_t rank) const;

  // human-readable "name=level" path for a context
  std::string context_label(std::size_t depth, std::size_t rank) const;

  std::size_t variable_index(const std::string& name) const;  // throws validation_error

 private:
  std::vector<Variable> variables_;
  std::size_t c_first_;
  std::vector<std::size_t> n_contexts_;  // per depth 0..p
};

// Rows encoded as level indices along the tree's ordering (row-major).
struct EncodedData {
  std::size_t n_rows = 0;
  std::size_t n_vars = 0;
  std::vector<std::size_t> cells;  // n_rows * n_vars

  std::size_t at(std::size_t row, std::size_t var) const { return cells[row * n_vars + var]; }
};

// Sufficient statistics at one depth: a count vector over the depth's
// variable for every context, plus the sample size.
struct ContextTable {
  std::size_t depth = 0;
  std::size_t n_levels = 0;
  std::vector<std::vector<std::int64_t>> counts;  // [context rank][level]
  std::int64_t n_total = 0;

  const std::vector<std::int64_t>& context_counts(std::size_t rank) const { return counts[rank]; }
  std::int64_t context_total(std::size_t rank) const;
};

// Builds the tree frame from raw data. Levels come from an explicit
// declaration when present, else first appearance order in the data;
// either way every variable needs at least two levels.
EventTree build_event_tree(
    const RawTable& data, const std::vector<std::string>& ordering,
    const std::vector<std::string>& modeled,
    const std::map<std::string, std::vector<std::string>>& declared_levels = {});

// Encodes rows against the tree; rows with undeclared levels are rejected.
EncodedData encode_rows(const EventTree& tree, const RawTable& data);

ContextTable count_table(const EventTree& tree, const EncodedData& data, std::size_t depth);

// One table per modeled depth, keyed by depth.
std::map<std::size_t, ContextTable> count_contexts(const EventTree& tree, const EncodedData& data);

}  // namespace staged

#pragma once

#include <string>
#include <vector>

#include "lbp/graph.hpp"

namespace lbp {

/// A tree instance loaded from text. Node names map to vertex ids in first-
/// mention order.
struct TreeInstance {
  std::vector<std::string> names;
  GraphInstance graph;
};

/// Line format, '#' comments and blank lines allowed:
///   edge <name> <name>
///   interior <name>
///   boundary <name> +1|-1
/// The edge set must form a tree (connected, acyclic), every node must be
/// declared interior or boundary exactly once, and the interior nodes must
/// induce a connected subtree.
TreeInstance parse_tree_spec(const std::string& text);

TreeInstance load_tree_file(const std::string& path);

}  // namespace lbp

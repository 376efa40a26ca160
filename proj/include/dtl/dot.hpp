#pragma once

#include <string>

#include "dtl/tree.hpp"

namespace dtl {

// DOT digraph of a tree. Node identifiers are the full address strings so
// diffs stay stable; unlabelled gap vertices render as points.
std::string tree_to_dot(const Tree& t, const std::string& graph_name = "tree");

}  // namespace dtl

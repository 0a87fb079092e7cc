#pragma once

#include <stdexcept>
#include <string>

#include "pathideal/forest.hpp"

namespace pathideal {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

/// Parses the tree text format: an optional line "vertices: v1 v2 ..."
/// declaring isolated vertices, followed by lines "u v" meaning the
/// directed edge u -> v. '#' starts a comment; blank lines are ignored.
/// Structural violations (self loop, second parent, cycle) are thrown as
/// the corresponding tree errors with the offending line in the message.
RootedForest parse_tree_file(const std::string& text);

/// Reads and parses a file. Throws std::runtime_error when unreadable.
RootedForest load_tree_file(const std::string& path);

/// Renders a forest in the same format: isolated vertices on a
/// "vertices:" line when present, then edges sorted by (parent, child).
std::string format_tree(const RootedForest& f);

}  // namespace pathideal

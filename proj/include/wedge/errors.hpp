#pragma once

#include <stdexcept>
#include <string>

namespace wedge {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input to a constructor or operation.
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// A file or string could not be parsed in the documented format.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// rank() was asked for a disconnected graph; the message names the components.
struct DisconnectedGraph : Error {
  explicit DisconnectedGraph(const std::string& msg) : Error(msg) {}
};

// Iterated leaf removal ate the whole subgraph.
struct EmptyCore : Error {
  explicit EmptyCore(const std::string& msg) : Error(msg) {}
};

// delete_edge would leave a graph without edges.
struct LastEdge : Error {
  explicit LastEdge(const std::string& msg) : Error(msg) {}
};

// collapse_edge would leave a single vertex without edges.
struct DegenerateCollapse : Error {
  explicit DegenerateCollapse(const std::string& msg) : Error(msg) {}
};

// A cyclic word reduced to the trivial class.
struct EmptyClass : Error {
  explicit EmptyClass(const std::string& msg) : Error(msg) {}
};

// An orbit search exceeded its visited-state budget instead of guessing.
struct SearchBudgetExceeded : Error {
  explicit SearchBudgetExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace wedge

#pragma once

#include <stdexcept>
#include <string>

namespace polydig {

// Malformed or unreadable input (files, constructor specs, digraph6 lines).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative solver failed to converge or a numerical sanity check failed.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polydig

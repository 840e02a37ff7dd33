#pragma once

#include <string_view>

#include "polydig/digraph.hpp"

namespace polydig {

// Builds a digraph from a constructor expression:
//
//   empty:n  complete:n  dicycle:n  star:n,k  tournament:n
//   thm35:n      balanced twin-split dicycle (order 3n/2)
//   thm35:n,1    the same with the normalising apex (order 3n/2 + 1)
//   thm39:n      order n^2 restricted-normal non-join
//   djoin(a,b)  bjoin(a,b)  union(a,b)  inflate(a,k)  complement(a)
//   twin(a,v1,v2,...)
//
// Whitespace between tokens is ignored. Throws InputError with the offending
// position on syntax errors or invalid parameters.
Digraph parse_construct_spec(std::string_view spec);

}  // namespace polydig

#pragma once

#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "polydig/digraph.hpp"

namespace polydig {

// digraph6: '&', then order+63, then the order^2 row-major adjacency bits
// (diagonal included) packed big-endian six to a byte, each byte +63, with
// zero padding to a multiple of six bits. No trailing newline.
std::string to_digraph6(const Digraph& g);

// Parses a single digraph6 record; a trailing '\n' or "\r\n" is tolerated.
// Throws InputError on malformed records (bad header, wrong length, bytes
// outside 63..126, loops, non-zero padding).
Digraph from_digraph6(std::string_view line);

// Calls fn for every non-empty line; errors carry the 1-based line number.
void read_digraph6_stream(std::istream& in, const std::function<void(Digraph, std::size_t line)>& fn);
std::vector<Digraph> read_digraph6_all(std::istream& in);

// Edge list: first significant line "n", then one "u v" pair per line,
// 0-indexed. Blank lines and '#' comments are ignored.
std::string to_edge_list(const Digraph& g);
Digraph from_edge_list(std::istream& in);

enum class GraphFormat { digraph6, edge_list };

// Reads every digraph in a file. Edge-list files hold exactly one digraph.
std::vector<Digraph> read_digraph_file(const std::string& path, GraphFormat format);
// Picks digraph6 when the first significant byte is '&', edge list otherwise.
GraphFormat sniff_format(const std::string& path);

}  // namespace polydig

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "majority/colouring.hpp"
#include "majority/digraph.hpp"
#include "majority/exact.hpp"
#include "majority/stable_sets.hpp"

namespace majority::io {

/// Malformed input file; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Digraph:   "digraph <n> <m>" then m lines "<u> <v>"
// Colouring: "colouring <n> <k>" then n lines "<vertex> <colour>"
// Stable set: "stableset <n> <size>" then the vertices, one per line, sorted
// Lists:     "lists <n>" then n lines "<vertex> <c1> <c2> ..."
// Lines starting with '#' and blank lines are ignored everywhere.

Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& g);

Colouring parse_colouring(std::string_view text);
std::string serialize_colouring(const Colouring& c);

VertexSet parse_stable_set(std::string_view text, std::size_t* n = nullptr);
std::string serialize_stable_set(std::size_t n, const VertexSet& t);

ListAssignment parse_lists(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace majority::io

#pragma once

// Text format:
//
//   # comment lines and blank lines are ignored anywhere
//   n k m
//   v_1 v_2 ... v_k      (m lines, strictly increasing 1-based ids)

#include "rcolor/hypergraph.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

namespace rcolor {

/// Throws ParseError naming the offending line.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph(std::string_view text);

std::string write_hypergraph(const Hypergraph& h);

/// File wrappers; I/O failures raise Error with the path in the message.
Hypergraph load_hypergraph(const std::filesystem::path& path);
void save_hypergraph(const Hypergraph& h, const std::filesystem::path& path);

/// List assignment format: header "n r", then n lines of r distinct colors.
ListAssignment read_list_assignment(std::istream& in);
ListAssignment load_list_assignment(const std::filesystem::path& path);

} // namespace rcolor

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/permutation.hpp"

namespace covnum {

/// Group file:
///   degree <n>
///   <generator in cycle notation>      one per line, points 1..n
/// Blank lines and text after '#' are ignored.
struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Throws ParseError carrying the 1-based line number.
GroupFile parse_group_file(std::istream& in);
GroupFile parse_group_text(std::string_view text);
GroupFile read_group_file(const std::string& path);

/// Canonical rendering; parse(print(x)) == x and print(parse(print(x))) == print(x).
std::string print_group_file(const GroupFile& file);

/// One `[class k]` section of a maximal-subgroup file:
///   [class <k>]
///   index <int>
///   length <int>
///   <generator lines>
struct MaximalSpec {
  std::size_t label = 0;
  std::uint64_t index = 0;
  std::uint64_t length = 0;
  std::vector<Permutation> generators;
};

std::vector<MaximalSpec> parse_maximal_file(std::istream& in, std::size_t degree);
std::vector<MaximalSpec> read_maximal_file(const std::string& path, std::size_t degree);
std::string print_maximal_file(const std::vector<MaximalSpec>& specs);

}  // namespace covnum

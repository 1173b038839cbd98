#include "covnum/group_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "covnum/error.hpp"

namespace covnum {

namespace {

std::string_view strip(std::string_view s) {
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool keyword_value(std::string_view line, std::string_view key, std::uint64_t& value) {
  if (line.substr(0, key.size()) != key) return false;
  std::string_view rest = line.substr(key.size());
  if (rest.empty() || !std::isspace(static_cast<unsigned char>(rest.front()))) return false;
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  return ec == std::errc() && ptr == rest.data() + rest.size();
}

Permutation parse_generator(std::string_view line, std::size_t degree, std::size_t lineno) {
  try {
    return Permutation::from_cycles(line, degree);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno);
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

}  // namespace

GroupFile parse_group_file(std::istream& in) {
  GroupFile out;
  std::string raw;
  std::size_t lineno = 0;
  bool have_degree = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip(raw);
    if (line.empty()) continue;
    if (!have_degree) {
      std::uint64_t n = 0;
      if (!keyword_value(line, "degree", n) || n == 0)
        throw ParseError("expected 'degree <n>' with n >= 1", lineno);
      out.degree = n;
      have_degree = true;
      continue;
    }
    out.generators.push_back(parse_generator(line, out.degree, lineno));
  }
  if (!have_degree) throw ParseError("missing 'degree' line", lineno + 1);
  if (out.generators.empty()) out.generators.push_back(Permutation::identity(out.degree));
  return out;
}

GroupFile parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_group_file(in);
}

GroupFile read_group_file(const std::string& path) {
  auto in = open(path);
  return parse_group_file(in);
}

std::string print_group_file(const GroupFile& file) {
  std::string out = "degree " + std::to_string(file.degree) + "\n";
  for (const auto& g : file.generators) out += g.to_cycles() + "\n";
  return out;
}

std::vector<MaximalSpec> parse_maximal_file(std::istream& in, std::size_t degree) {
  std::vector<MaximalSpec> out;
  std::string raw;
  std::size_t lineno = 0;
  auto finish = [&](std::size_t at) {
    if (out.empty()) return;
    const MaximalSpec& s = out.back();
    if (s.index == 0) throw ParseError("class " + std::to_string(s.label) + " has no index", at);
    if (s.length == 0) throw ParseError("class " + std::to_string(s.label) + " has no length", at);
    if (s.generators.empty())
      throw ParseError("class " + std::to_string(s.label) + " has no generators", at);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      finish(lineno);
      std::uint64_t label = 0;
      if (line.back() != ']' || !keyword_value(line.substr(1, line.size() - 2), "class", label))
        throw ParseError("expected '[class <k>]'", lineno);
      out.push_back({label, 0, 0, {}});
      continue;
    }
    if (out.empty()) throw ParseError("content before the first '[class k]' header", lineno);
    std::uint64_t v = 0;
    if (keyword_value(line, "index", v)) {
      out.back().index = v;
    } else if (keyword_value(line, "length", v)) {
      out.back().length = v;
    } else if (line.front() == '(') {
      out.back().generators.push_back(parse_generator(line, degree, lineno));
    } else {
      throw ParseError("unrecognised line '" + std::string(line) + "'", lineno);
    }
  }
  finish(lineno);
  return out;
}

std::vector<MaximalSpec> read_maximal_file(const std::string& path, std::size_t degree) {
  auto in = open(path);
  return parse_maximal_file(in, degree);
}

std::string print_maximal_file(const std::vector<MaximalSpec>& specs) {
  std::string out;
  for (const auto& s : specs) {
    if (!out.empty()) out += "\n";
    out += "[class " + std::to_string(s.label) + "]\n";
    out += "index " + std::to_string(s.index) + "\n";
    out += "length " + std::to_string(s.length) + "\n";
    for (const auto& g : s.generators) out += g.to_cycles() + "\n";
  }
  return out;
}

}  // namespace covnum

// Copyright 2026 The selforg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "selforg/seqfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace selforg::cli {
namespace {

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == ',' || c == '\r';
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!is_separator(c)) return false;
  }
  return true;
}

void append_ids(const std::string& line, std::size_t line_no,
                std::vector<ItemId>& out) {
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_separator(line[j])) ++j;
    const std::string_view token(line.data() + i, j - i);
    std::uint32_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        value == 0) {
      throw InputFileError("line " + std::to_string(line_no) +
                           ": invalid item id '" + std::string(token) + "'");
    }
    out.push_back(ItemId{value});
    i = j;
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputFileError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

ListState parse_list(std::istream& in) {
  std::vector<ItemId> ids;
  bool seen_list = false;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (is_comment_or_blank(line)) continue;
    if (seen_list) {
      throw InputFileError("line " + std::to_string(line_no) +
                           ": list file has more than one list line");
    }
    append_ids(line, line_no, ids);
    seen_list = true;
  }
  if (!seen_list) throw InputFileError("list file has no list line");
  try {
    return ListState(std::move(ids));
  } catch (const Error& e) {
    throw InputFileError(std::string("invalid list: ") + e.what());
  }
}

std::vector<ItemId> parse_sequence(std::istream& in) {
  std::vector<ItemId> ids;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (is_comment_or_blank(line)) continue;
    append_ids(line, line_no, ids);
  }
  return ids;
}

ListState read_list_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_list(in);
}

std::vector<ItemId> read_sequence_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_sequence(in);
}

std::vector<ItemId> parse_ids(const std::string& text) {
  std::vector<ItemId> ids;
  try {
    append_ids(text, 1, ids);
  } catch (const InputFileError& e) {
    throw InvalidParameterError(e.what());
  }
  return ids;
}

}  // namespace selforg::cli

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

#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "selforg/error.hpp"
#include "selforg/list_state.hpp"

namespace selforg::cli {

/// Malformed or unreadable list/sequence input.
class InputFileError : public Error {
 public:
  using Error::Error;
};

// Grammar shared by both file kinds:
//   - a line whose first non-blank character is '#' is a comment;
//   - blank lines are ignored;
//   - an item id is a decimal integer in 1..4294967295;
//   - ids are separated by spaces, tabs, commas, or any mix of them.
// A list file holds exactly one non-comment line: the initial list, front
// first. A sequence file holds any number of non-comment lines; requests
// are read in order across lines.

ListState parse_list(std::istream& in);
std::vector<ItemId> parse_sequence(std::istream& in);

ListState read_list_file(const std::filesystem::path& path);
std::vector<ItemId> read_sequence_file(const std::filesystem::path& path);

/// Parses a comma/space separated id list given inline, e.g. "2,1,3".
std::vector<ItemId> parse_ids(const std::string& text);

}  // namespace selforg::cli

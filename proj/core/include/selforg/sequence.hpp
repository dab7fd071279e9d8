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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selforg/list_state.hpp"

namespace selforg {

/// Request-sequence families. T1 repeats the list in order, T2 repeats it
/// reversed, PermPower repeats an arbitrary permutation of 1..n.
enum class Family { T1, T2, PermPower, Explicit };

std::string to_string(Family family);
/// Accepts "t1", "t2", "perm", "explicit" (case-insensitive).
Family parse_family(const std::string& text);

/// A materialized request stream. `pass_length` is set when the stream is a
/// whole number of repetitions of one permutation.
struct RequestSequence {
  std::vector<ItemId> requests;
  std::optional<std::size_t> pass_length;

  std::size_t size() const noexcept { return requests.size(); }
  bool empty() const noexcept { return requests.empty(); }

  friend bool operator==(const RequestSequence&,
                         const RequestSequence&) = default;
};

/// Declarative description of a sequence; see materialize().
struct SequenceSpec {
  Family family = Family::T1;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<ItemId> perm;   // PermPower only
  std::vector<ItemId> items;  // Explicit only
};

RequestSequence gen_t1(std::int64_t n, std::int64_t k);
RequestSequence gen_t2(std::int64_t n, std::int64_t k);
/// Throws NotAPermutationError unless `perm` is a permutation of 1..perm.size().
RequestSequence gen_perm_power(std::span<const ItemId> perm, std::int64_t k);
RequestSequence explicit_sequence(std::vector<ItemId> items);

RequestSequence materialize(const SequenceSpec& spec);

}  // namespace selforg

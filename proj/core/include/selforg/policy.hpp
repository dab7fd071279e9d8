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

#include <cstdint>
#include <map>
#include <string>

#include "selforg/list_state.hpp"
#include "selforg/sequence.hpp"

namespace selforg {

enum class PolicyKind { MTF, TRANS, FC };

std::string to_string(PolicyKind kind);
/// Accepts "mtf", "trans", "fc" (case-insensitive).
PolicyKind parse_policy(const std::string& text);

/// A list reorganization rule.
///
/// MTF and TRANS are stateless. FC carries one access counter per item and
/// keeps the list in non-increasing counter order; an accessed item passes
/// only predecessors whose counter is strictly smaller, so ties keep their
/// existing order.
class Policy {
 public:
  explicit Policy(PolicyKind kind) : kind_(kind) {}
  /// Binds FC counters (all zero) to the items of `list`.
  Policy(PolicyKind kind, const ListState& list);

  PolicyKind kind() const noexcept { return kind_; }
  const std::map<ItemId, std::uint64_t>& counters() const noexcept {
    return counters_;
  }
  std::uint64_t counter(ItemId item) const;

  /// Adds a zero counter for every item of `list` that has none.
  void bind(const ListState& list);

  /// Charges the access at the pre-reorganization position, then reorganizes
  /// `state` in place with free exchanges only.
  Cost access(ListState& state, ItemId item, CostModel model);

  friend bool operator==(const Policy&, const Policy&) = default;

 private:
  PolicyKind kind_;
  std::map<ItemId, std::uint64_t> counters_;
};

struct AccessOutcome {
  Cost cost = 0;
  ListState new_state;
  Policy new_policy{PolicyKind::MTF};
};

/// Pure single-request step.
AccessOutcome step(const Policy& policy, const ListState& state, ItemId item,
                   CostModel model);

/// Serves `sequence` starting from `initial`. When the sequence declares a
/// pass length, pass totals and pass-end configurations are recorded. Throws
/// ItemNotInListError carrying the index of the first unknown request.
CostLedger serve(Policy policy, const ListState& initial,
                 const RequestSequence& sequence, CostModel model);
CostLedger serve(PolicyKind kind, const ListState& initial,
                 const RequestSequence& sequence, CostModel model);

}  // namespace selforg

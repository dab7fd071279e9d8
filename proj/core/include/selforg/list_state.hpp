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
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selforg/checked.hpp"

namespace selforg {

/// Label of a list item. Valid ids are positive.
enum class ItemId : std::uint32_t {};

constexpr std::uint32_t to_int(ItemId id) noexcept {
  return static_cast<std::uint32_t>(id);
}

/// 1-based list position; position 1 is the front.
using Position = std::size_t;

enum class CostModel { Full, Partial };

std::string to_string(CostModel model);

/// An ordered arrangement of n distinct items.
///
/// Lookups are a front-to-back scan, which is the access pattern the cost
/// models describe. All positions exposed by this class are 1-based.
class ListState {
 public:
  ListState() = default;

  /// Throws InvalidParameterError on a non-positive id and
  /// NotAPermutationError on a duplicate.
  explicit ListState(std::vector<ItemId> order);
  ListState(std::initializer_list<std::uint32_t> ids);

  /// The canonical list (1, 2, ..., n).
  static ListState identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }
  std::span<const ItemId> order() const noexcept { return order_; }

  ItemId at(Position position) const;
  std::optional<Position> find(ItemId item) const noexcept;
  bool contains(ItemId item) const noexcept { return find(item).has_value(); }

  /// Throws ItemNotInListError when absent.
  Position position_of(ItemId item) const;

  // In-place reorganizations. Each throws ItemNotInListError when `item`
  // is absent.
  void move_to_front(ItemId item);
  void transpose_forward(ItemId item);
  /// Free exchange: slide `item` forward to `target`. Throws
  /// TargetBehindCurrentError if `target` is behind the current position.
  void move_forward_to(ItemId item, Position target);
  /// Paid exchange of the items at `position` and `position + 1`.
  void swap_adjacent(Position position);

  /// The same items in reverse order.
  ListState reversed() const;

  friend bool operator==(const ListState&, const ListState&) = default;

 private:
  std::vector<ItemId> order_;
};

std::ostream& operator<<(std::ostream& os, const ListState& state);
std::string to_string(const ListState& state);

Position position_of(const ListState& state, ItemId item);
Cost access_cost(const ListState& state, ItemId item, CostModel model);
ListState transpose_forward(const ListState& state, ItemId item);
ListState move_to_front(const ListState& state, ItemId item);
ListState move_forward_to(const ListState& state, ItemId item, Position target);
ListState swap_adjacent(const ListState& state, Position position);

/// Costs accumulated while serving a request sequence.
struct CostLedger {
  std::vector<Cost> per_request;
  Cost access_total = 0;
  Cost paid_exchange_total = 0;
  Cost grand_total = 0;
  /// Populated only when the served sequence declares a pass structure.
  std::vector<Cost> pass_totals;
  std::vector<ListState> pass_end_configs;

  void record_access(Cost cost);
  void record_paid_exchanges(Cost count);
  void close_pass(Cost pass_total, const ListState& config);

  friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

}  // namespace selforg

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

#include "selforg/list_state.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace selforg {

std::string to_string(CostModel model) {
  return model == CostModel::Full ? "full" : "partial";
}

ListState::ListState(std::vector<ItemId> order) : order_(std::move(order)) {
  std::unordered_set<std::uint32_t> seen;
  seen.reserve(order_.size());
  for (ItemId id : order_) {
    if (to_int(id) == 0) {
      throw InvalidParameterError("item ids must be positive");
    }
    if (!seen.insert(to_int(id)).second) {
      throw NotAPermutationError("duplicate item " + std::to_string(to_int(id)) +
                                 " in list");
    }
  }
}

ListState::ListState(std::initializer_list<std::uint32_t> ids)
    : ListState([&] {
        std::vector<ItemId> v;
        v.reserve(ids.size());
        for (auto id : ids) v.push_back(ItemId{id});
        return v;
      }()) {}

ListState ListState::identity(std::size_t n) {
  std::vector<ItemId> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = ItemId{static_cast<std::uint32_t>(i + 1)};
  }
  ListState s;
  s.order_ = std::move(v);
  return s;
}

ItemId ListState::at(Position position) const {
  if (position < 1 || position > order_.size()) {
    throw InvalidParameterError("position " + std::to_string(position) +
                                " outside 1.." + std::to_string(order_.size()));
  }
  return order_[position - 1];
}

std::optional<Position> ListState::find(ItemId item) const noexcept {
  auto it = std::find(order_.begin(), order_.end(), item);
  if (it == order_.end()) return std::nullopt;
  return static_cast<Position>(it - order_.begin()) + 1;
}

Position ListState::position_of(ItemId item) const {
  if (auto p = find(item)) return *p;
  throw ItemNotInListError("item " + std::to_string(to_int(item)) +
                           " is not in the list");
}

void ListState::move_to_front(ItemId item) { move_forward_to(item, 1); }

void ListState::transpose_forward(ItemId item) {
  Position p = position_of(item);
  if (p > 1) std::swap(order_[p - 2], order_[p - 1]);
}

void ListState::move_forward_to(ItemId item, Position target) {
  Position p = position_of(item);
  if (target < 1) {
    throw InvalidParameterError("target position must be >= 1");
  }
  if (target > p) {
    throw TargetBehindCurrentError(
        "cannot move item " + std::to_string(to_int(item)) + " from position " +
        std::to_string(p) + " back to " + std::to_string(target) +
        " with a free exchange");
  }
  auto first = order_.begin() + static_cast<std::ptrdiff_t>(target - 1);
  auto last = order_.begin() + static_cast<std::ptrdiff_t>(p);
  std::rotate(first, last - 1, last);
}

void ListState::swap_adjacent(Position position) {
  if (position < 1 || position >= order_.size()) {
    throw InvalidParameterError("no adjacent pair at position " +
                                std::to_string(position));
  }
  std::swap(order_[position - 1], order_[position]);
}

ListState ListState::reversed() const {
  ListState r = *this;
  std::reverse(r.order_.begin(), r.order_.end());
  return r;
}

std::ostream& operator<<(std::ostream& os, const ListState& state) {
  bool first = true;
  for (ItemId id : state.order()) {
    if (!first) os << ' ';
    os << to_int(id);
    first = false;
  }
  return os;
}

std::string to_string(const ListState& state) {
  std::ostringstream os;
  os << state;
  return os.str();
}

Position position_of(const ListState& state, ItemId item) {
  return state.position_of(item);
}

Cost access_cost(const ListState& state, ItemId item, CostModel model) {
  auto p = static_cast<Cost>(state.position_of(item));
  return model == CostModel::Full ? p : p - 1;
}

ListState transpose_forward(const ListState& state, ItemId item) {
  ListState next = state;
  next.transpose_forward(item);
  return next;
}

ListState move_to_front(const ListState& state, ItemId item) {
  ListState next = state;
  next.move_to_front(item);
  return next;
}

ListState move_forward_to(const ListState& state, ItemId item,
                          Position target) {
  ListState next = state;
  next.move_forward_to(item, target);
  return next;
}

ListState swap_adjacent(const ListState& state, Position position) {
  ListState next = state;
  next.swap_adjacent(position);
  return next;
}

void CostLedger::record_access(Cost cost) {
  per_request.push_back(cost);
  access_total = checked::add(access_total, cost);
  grand_total = checked::add(grand_total, cost);
}

void CostLedger::record_paid_exchanges(Cost count) {
  if (count < 0) {
    throw InvalidParameterError("paid exchange count must be nonnegative");
  }
  paid_exchange_total = checked::add(paid_exchange_total, count);
  grand_total = checked::add(grand_total, count);
}

void CostLedger::close_pass(Cost pass_total, const ListState& config) {
  pass_totals.push_back(pass_total);
  pass_end_configs.push_back(config);
}

}  // namespace selforg

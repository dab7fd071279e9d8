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

#include "selforg/policy.hpp"

#include <algorithm>
#include <cctype>

namespace selforg {

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::MTF: return "MTF";
    case PolicyKind::TRANS: return "TRANS";
    case PolicyKind::FC: return "FC";
  }
  return "?";
}

PolicyKind parse_policy(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "mtf") return PolicyKind::MTF;
  if (s == "trans") return PolicyKind::TRANS;
  if (s == "fc") return PolicyKind::FC;
  throw InvalidParameterError("unknown algorithm '" + text + "'");
}

Policy::Policy(PolicyKind kind, const ListState& list) : kind_(kind) {
  bind(list);
}

std::uint64_t Policy::counter(ItemId item) const {
  auto it = counters_.find(item);
  return it == counters_.end() ? 0 : it->second;
}

void Policy::bind(const ListState& list) {
  if (kind_ != PolicyKind::FC) return;
  for (ItemId id : list.order()) counters_.try_emplace(id, 0);
}

Cost Policy::access(ListState& state, ItemId item, CostModel model) {
  const Cost cost = access_cost(state, item, model);
  switch (kind_) {
    case PolicyKind::MTF:
      state.move_to_front(item);
      break;
    case PolicyKind::TRANS:
      state.transpose_forward(item);
      break;
    case PolicyKind::FC: {
      auto& count = counters_[item];
      ++count;
      Position target = state.position_of(item);
      while (target > 1 && counter(state.at(target - 1)) < count) --target;
      state.move_forward_to(item, target);
      break;
    }
  }
  return cost;
}

AccessOutcome step(const Policy& policy, const ListState& state, ItemId item,
                   CostModel model) {
  AccessOutcome out{0, state, policy};
  out.new_policy.bind(state);
  out.cost = out.new_policy.access(out.new_state, item, model);
  return out;
}

CostLedger serve(Policy policy, const ListState& initial,
                 const RequestSequence& sequence, CostModel model) {
  const auto& requests = sequence.requests;
  std::size_t pass_length = 0;
  if (sequence.pass_length) {
    pass_length = *sequence.pass_length;
    if (pass_length == 0 || requests.size() % pass_length != 0) {
      throw InvalidParameterError(
          "sequence length " + std::to_string(requests.size()) +
          " is not a whole number of passes of length " +
          std::to_string(pass_length));
    }
  }

  policy.bind(initial);
  ListState state = initial;
  CostLedger ledger;
  ledger.per_request.reserve(requests.size());
  Cost pass_total = 0;

  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (!state.contains(requests[i])) {
      throw ItemNotInListError("request " + std::to_string(i) + " (item " +
                                   std::to_string(to_int(requests[i])) +
                                   ") is not in the list",
                               i);
    }
    const Cost cost = policy.access(state, requests[i], model);
    ledger.record_access(cost);
    if (pass_length != 0) {
      pass_total = checked::add(pass_total, cost);
      if ((i + 1) % pass_length == 0) {
        ledger.close_pass(pass_total, state);
        pass_total = 0;
      }
    }
  }
  return ledger;
}

CostLedger serve(PolicyKind kind, const ListState& initial,
                 const RequestSequence& sequence, CostModel model) {
  return serve(Policy(kind, initial), initial, sequence, model);
}

}  // namespace selforg

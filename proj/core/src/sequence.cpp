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

#include "selforg/sequence.hpp"

#include <algorithm>
#include <cctype>

namespace selforg {
namespace {

void check_params(std::int64_t n, std::int64_t k) {
  if (n < 1) {
    throw InvalidParameterError("n must be >= 1, got " + std::to_string(n));
  }
  if (k < 0) {
    throw InvalidParameterError("k must be >= 0, got " + std::to_string(k));
  }
  if (n > static_cast<std::int64_t>(UINT32_MAX)) {
    throw InvalidParameterError("n exceeds the item id range");
  }
  // k * n must be addressable.
  checked::mul(n, k);
}

RequestSequence repeat(std::span<const ItemId> pass, std::int64_t k) {
  RequestSequence seq;
  seq.pass_length = pass.size();
  seq.requests.reserve(pass.size() * static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    seq.requests.insert(seq.requests.end(), pass.begin(), pass.end());
  }
  return seq;
}

std::vector<ItemId> iota_ids(std::int64_t n) {
  std::vector<ItemId> v(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = ItemId{static_cast<std::uint32_t>(i + 1)};
  }
  return v;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::T1: return "T1";
    case Family::T2: return "T2";
    case Family::PermPower: return "PERM";
    case Family::Explicit: return "EXPLICIT";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "t1") return Family::T1;
  if (s == "t2") return Family::T2;
  if (s == "perm") return Family::PermPower;
  if (s == "explicit") return Family::Explicit;
  throw InvalidParameterError("unknown sequence family '" + text + "'");
}

RequestSequence gen_t1(std::int64_t n, std::int64_t k) {
  check_params(n, k);
  return repeat(iota_ids(n), k);
}

RequestSequence gen_t2(std::int64_t n, std::int64_t k) {
  check_params(n, k);
  auto pass = iota_ids(n);
  std::reverse(pass.begin(), pass.end());
  return repeat(pass, k);
}

RequestSequence gen_perm_power(std::span<const ItemId> perm, std::int64_t k) {
  if (perm.empty()) {
    throw NotAPermutationError("permutation is empty");
  }
  auto n = static_cast<std::int64_t>(perm.size());
  check_params(n, k);
  std::vector<bool> seen(perm.size() + 1, false);
  for (ItemId id : perm) {
    auto v = to_int(id);
    if (v < 1 || v > perm.size()) {
      throw NotAPermutationError("item " + std::to_string(v) +
                                 " is outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw NotAPermutationError("item " + std::to_string(v) +
                                 " appears twice");
    }
    seen[v] = true;
  }
  return repeat(perm, k);
}

RequestSequence explicit_sequence(std::vector<ItemId> items) {
  return RequestSequence{std::move(items), std::nullopt};
}

RequestSequence materialize(const SequenceSpec& spec) {
  switch (spec.family) {
    case Family::T1: return gen_t1(spec.n, spec.k);
    case Family::T2: return gen_t2(spec.n, spec.k);
    case Family::PermPower: return gen_perm_power(spec.perm, spec.k);
    case Family::Explicit: return explicit_sequence(spec.items);
  }
  throw InvalidParameterError("unknown family");
}

}  // namespace selforg

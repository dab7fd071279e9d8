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

#include "selforg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <future>
#include <thread>

namespace selforg {
namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidParameterError("malformed range '" + whole + "'");
  }
  return v;
}

RequestSequence family_sequence(Family family, std::int64_t n, std::int64_t k) {
  switch (family) {
    case Family::T1: return gen_t1(n, k);
    case Family::T2: return gen_t2(n, k);
    default:
      throw InvalidParameterError("family " + to_string(family) +
                                  " has no (n, k) generator");
  }
}

void check_range(const IntRange& r, const char* name) {
  if (r.lo > r.hi) {
    throw InvalidParameterError(std::string(name) + " range is empty");
  }
  if (r.lo < 1) {
    throw InvalidParameterError(std::string(name) + " must be >= 1");
  }
}

// Replays a mismatching cell pass by pass. The first i passes of a
// family sequence are themselves the family sequence with k = i, so the
// cumulative cost after pass i must equal the prediction for k = i.
void locate_divergence(VerificationCell& cell, CostModel model,
                       const Predictor& predictor) {
  const auto ledger = serve(cell.algorithm, ListState::identity(cell.n),
                            family_sequence(cell.family, cell.n, cell.k),
                            model);
  Cost cumulative = 0;
  for (std::size_t i = 0; i < ledger.pass_totals.size(); ++i) {
    cumulative = checked::add(cumulative, ledger.pass_totals[i]);
    const auto passes = static_cast<std::int64_t>(i + 1);
    if (cumulative !=
        predictor(cell.algorithm, cell.family, cell.n, passes, model)) {
      cell.first_divergent_pass = passes;
      cell.first_divergent_request = i * static_cast<std::size_t>(cell.n);
      return;
    }
  }
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text, text);
    return IntRange{v, v};
  }
  const std::string_view view(text);
  IntRange r{parse_int(view.substr(0, dots), text),
             parse_int(view.substr(dots + 2), text)};
  if (r.lo > r.hi) {
    throw InvalidParameterError("range '" + text + "' is empty");
  }
  return r;
}

Cost predicted_total(PolicyKind algorithm, Family family, std::int64_t n,
                     std::int64_t k, CostModel model) {
  const Cost full = predict(algorithm, family, n, k).total;
  if (model == CostModel::Full) return full;
  return checked::sub(full, checked::mul(k, n));
}

VerificationReport verify_grid(std::span<const PolicyKind> algorithms,
                               std::span<const Family> families,
                               IntRange n_range, IntRange k_range,
                               CostModel model, unsigned threads) {
  return verify_grid(algorithms, families, n_range, k_range, model,
                     predicted_total, threads);
}

VerificationReport verify_grid(std::span<const PolicyKind> algorithms,
                               std::span<const Family> families,
                               IntRange n_range, IntRange k_range,
                               CostModel model, const Predictor& predictor,
                               unsigned threads) {
  if (algorithms.empty() || families.empty()) {
    throw InvalidParameterError("verify_grid needs at least one algorithm and "
                                "one family");
  }
  check_range(n_range, "n");
  check_range(k_range, "k");

  VerificationReport report;
  report.n_range = n_range;
  report.k_range = k_range;
  report.model = model;
  report.pair_count = algorithms.size() * families.size();

  for (PolicyKind a : algorithms) {
    for (Family f : families) {
      // Fail fast on unsupported pairs before any simulation.
      predictor(a, f, n_range.lo, k_range.lo, model);
      for (auto n = n_range.lo; n <= n_range.hi; ++n) {
        for (auto k = k_range.lo; k <= k_range.hi; ++k) {
          VerificationCell cell;
          cell.algorithm = a;
          cell.family = f;
          cell.n = n;
          cell.k = k;
          report.cells.push_back(cell);
        }
      }
    }
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, report.cells.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < report.cells.size(); i = next++) {
      auto& cell = report.cells[i];
      const auto ledger =
          serve(cell.algorithm, ListState::identity(cell.n),
                family_sequence(cell.family, cell.n, cell.k), model);
      cell.simulated = ledger.grand_total;
      cell.predicted =
          predictor(cell.algorithm, cell.family, cell.n, cell.k, model);
      cell.match = cell.simulated == cell.predicted;
      if (!cell.match) locate_divergence(cell, model, predictor);
    }
  };

  std::vector<std::future<void>> futures;
  for (unsigned t = 1; t < threads; ++t) {
    futures.push_back(std::async(std::launch::async, worker));
  }
  worker();
  for (auto& f : futures) f.get();

  report.mismatch_count = static_cast<std::size_t>(
      std::count_if(report.cells.begin(), report.cells.end(),
                    [](const VerificationCell& c) { return !c.match; }));
  return report;
}

PassProfile per_pass_profile(PolicyKind algorithm, Family family,
                             std::int64_t n, std::int64_t k) {
  if (k < 1) {
    throw InvalidParameterError("k must be >= 1, got " + std::to_string(k));
  }
  const auto sequence = family_sequence(family, n, k);
  auto ledger = serve(algorithm, ListState::identity(static_cast<std::size_t>(n)),
                      sequence, CostModel::Full);
  return PassProfile{std::move(ledger.pass_totals),
                     std::move(ledger.pass_end_configs), ledger.grand_total};
}

CrossoverResult crossover(Family family, std::int64_t n, std::int64_t k_max) {
  if (k_max < 1) {
    throw InvalidParameterError("k_max must be >= 1, got " +
                                std::to_string(k_max));
  }
  CrossoverResult result;
  result.family = family;
  result.n = n;
  result.searched_k_max = k_max;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const bool wins = predict(PolicyKind::TRANS, family, n, k).total <
                      predict(PolicyKind::MTF, family, n, k).total;
    if (wins && !result.k_star) {
      result.k_star = k;
      result.dominance_holds = true;
    } else if (!wins && result.k_star) {
      result.dominance_holds = false;
    }
  }
  return result;
}

}  // namespace selforg

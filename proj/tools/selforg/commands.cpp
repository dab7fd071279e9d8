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

#include "selforg/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "selforg/seqfile.hpp"
#include "selforg/selforg.hpp"

namespace selforg::cli {
namespace {

const std::vector<std::string> kAlgoNames{"mtf", "trans", "fc"};
const std::vector<std::string> kFormats{"table", "csv"};

struct SimulateOptions {
  std::string algo;
  std::string seq;
  std::int64_t n = 0;
  std::int64_t k = 1;
  std::string perm;
  std::string list_file;
  std::string seq_file;
  std::string model = "full";
  bool per_pass = false;
  std::string format = "table";
  std::string output;
};

struct PredictOptions {
  std::string algo;
  std::string seq;
  std::int64_t n = 0;
  std::string k = "1";
  std::string format = "table";
  std::string output;
};

struct VerifyOptions {
  std::string n = "1..40";
  std::string k = "1..40";
  std::string algo = "all";
  std::string seq = "all";
  std::string model = "full";
  std::string format = "table";
  std::string output;
  unsigned threads = 0;
};

struct CompareOptions {
  std::string seq = "both";
  std::int64_t n = 5;
  std::string k = "1..10";
  std::string format = "csv";
  std::string output;
  std::string gnuplot;
};

struct CrossoverOptions {
  std::string seq = "both";
  std::string n = "1..10";
  std::int64_t k_max = 10;
  std::string format = "table";
  std::string output;
};

CostModel parse_model(const std::string& s) {
  if (s == "full") return CostModel::Full;
  if (s == "partial") return CostModel::Partial;
  throw InvalidParameterError("unknown cost model '" + s + "'");
}

std::vector<Family> parse_families(const std::string& s) {
  if (s == "all" || s == "both") return {Family::T1, Family::T2};
  Family f = parse_family(s);
  if (f != Family::T1 && f != Family::T2) {
    throw InvalidParameterError("expected t1, t2 or both, got '" + s + "'");
  }
  return {f};
}

std::vector<PolicyKind> parse_closed_form_algos(const std::string& s) {
  if (s == "all" || s == "both") return {PolicyKind::MTF, PolicyKind::TRANS};
  PolicyKind a = parse_policy(s);
  if (a == PolicyKind::FC) {
    throw InvalidParameterError("no closed form exists for FC");
  }
  return {a};
}

// Writes to --output when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputFileError("cannot write '" + path + "'");
      os_ = file_.get();
    }
  }
  std::ostream& get() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

std::string family_label(Family f, std::int64_t n, std::int64_t k) {
  return to_string(f) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out) {
  const PolicyKind algo = parse_policy(o.algo);
  const CostModel model = parse_model(o.model);

  const bool from_family = !o.seq.empty();
  const bool from_file = !o.seq_file.empty();
  if (from_family == from_file) {
    throw InvalidParameterError(
        "give exactly one sequence source: --seq or --seq-file");
  }

  ListState initial;
  RequestSequence sequence;
  std::string description;
  if (from_family) {
    if (!o.list_file.empty()) {
      throw InvalidParameterError(
          "--list-file applies to --seq-file only; generated sequences use "
          "the list 1..n");
    }
    const Family family = parse_family(o.seq);
    if (family == Family::PermPower) {
      if (o.perm.empty()) throw InvalidParameterError("--seq perm needs --perm");
      const auto perm = parse_ids(o.perm);
      sequence = gen_perm_power(perm, o.k);
      initial = ListState::identity(perm.size());
      description = "PERM(" + o.perm + ") k=" + std::to_string(o.k);
    } else if (family == Family::Explicit) {
      throw InvalidParameterError("use --seq-file for explicit sequences");
    } else {
      sequence = materialize(SequenceSpec{family, o.n, o.k, {}, {}});
      initial = ListState::identity(static_cast<std::size_t>(o.n));
      description = family_label(family, o.n, o.k);
    }
  } else {
    if (!o.list_file.empty()) {
      initial = read_list_file(o.list_file);
    } else if (o.n >= 1) {
      initial = ListState::identity(static_cast<std::size_t>(o.n));
    } else {
      throw InvalidParameterError("--seq-file needs --list-file or --n");
    }
    sequence = explicit_sequence(read_sequence_file(o.seq_file));
    description = "file " + o.seq_file;
  }

  CostLedger ledger;
  try {
    ledger = serve(algo, initial, sequence, model);
  } catch (const ItemNotInListError& e) {
    if (from_file) throw InputFileError(e.what());
    throw;
  }

  Sink sink(o.output, out);
  std::ostream& os = sink.get();
  if (o.format == "csv") {
    if (o.per_pass) {
      os << "pass,cost,config\n";
      for (std::size_t i = 0; i < ledger.pass_totals.size(); ++i) {
        os << i + 1 << ',' << ledger.pass_totals[i] << ','
           << ledger.pass_end_configs[i] << '\n';
      }
    } else {
      os << "algo,sequence,model,requests,access,paid,total\n";
      os << to_string(algo) << ',' << description << ',' << to_string(model)
         << ',' << sequence.size() << ',' << ledger.access_total << ','
         << ledger.paid_exchange_total << ',' << ledger.grand_total << '\n';
    }
    return kOk;
  }

  os << "algorithm  " << to_string(algo) << '\n'
     << "sequence   " << description << " (" << sequence.size()
     << " requests)\n"
     << "list       " << initial << '\n'
     << "model      " << to_string(model) << '\n';
  if (o.per_pass) {
    if (ledger.pass_totals.empty()) {
      os << "passes     (sequence has no pass structure)\n";
    } else {
      os << "pass  cost        config\n";
      for (std::size_t i = 0; i < ledger.pass_totals.size(); ++i) {
        os << std::left << std::setw(6) << i + 1 << std::setw(12)
           << ledger.pass_totals[i] << ledger.pass_end_configs[i] << '\n';
      }
      os << std::right;
    }
  }
  os << "access     " << ledger.access_total << '\n'
     << "paid       " << ledger.paid_exchange_total << '\n'
     << "total      " << ledger.grand_total << '\n';
  return kOk;
}

int cmd_predict(const PredictOptions& o, std::ostream& out) {
  const auto algos = parse_closed_form_algos(o.algo);
  const auto families = parse_families(o.seq);
  const IntRange ks = parse_range(o.k);

  Sink sink(o.output, out);
  std::ostream& os = sink.get();
  const bool csv = o.format == "csv";
  if (csv) os << "algo,family,n,k,case,total\n";
  for (PolicyKind a : algos) {
    for (Family f : families) {
      for (auto k = ks.lo; k <= ks.hi; ++k) {
        const Prediction p = predict(a, f, o.n, k);
        if (csv) {
          os << to_string(a) << ',' << to_string(f) << ',' << p.n << ','
             << p.k << ',' << p.theorem_case << ',' << p.total << '\n';
        } else {
          os << std::left << std::setw(6) << to_string(a) << std::setw(4)
             << to_string(f) << "n=" << std::setw(5) << p.n
             << "k=" << std::setw(5) << p.k << "case " << std::setw(6)
             << p.theorem_case << "total " << p.total << std::right << '\n';
        }
      }
    }
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const auto algos = parse_closed_form_algos(o.algo);
  const auto families = parse_families(o.seq);
  const CostModel model = parse_model(o.model);
  const IntRange ns = parse_range(o.n);
  const IntRange ks = parse_range(o.k);
  const auto report = verify_grid(algos, families, ns, ks, model, o.threads);

  Sink sink(o.output, out);
  std::ostream& os = sink.get();
  if (o.format == "csv") {
    os << "algo,family,n,k,simulated,predicted,match\n";
    for (const auto& c : report.cells) {
      os << to_string(c.algorithm) << ',' << to_string(c.family) << ','
         << c.n << ',' << c.k << ',' << c.simulated << ',' << c.predicted
         << ',' << (c.match ? "true" : "false") << '\n';
    }
  } else {
    // Small grids list every cell; large grids list mismatches only.
    const bool list_all = report.cells.size() <= 64;
    for (const auto& c : report.cells) {
      if (!list_all && c.match) continue;
      os << to_string(c.algorithm) << ' ' << family_label(c.family, c.n, c.k)
         << ": simulated " << c.simulated << (c.match ? " = " : " != ")
         << "predicted " << c.predicted;
      if (c.first_divergent_pass) {
        os << " (first divergent pass " << *c.first_divergent_pass
           << ", request index " << *c.first_divergent_request << ')';
      }
      os << '\n';
    }
    os << "model " << to_string(model) << ", n " << ns.lo << ".." << ns.hi
       << ", k " << ks.lo << ".." << ks.hi << ", " << report.pair_count
       << " pair(s)\n"
       << report.mismatch_count << " mismatches / " << report.cells_per_pair()
       << " cells per pair (" << report.cells.size() << " cells total)\n";
  }
  return report.passed() ? kOk : kMismatch;
}

void write_gnuplot(const std::string& script_path, const std::string& csv_path,
                   std::int64_t n, const std::vector<Family>& families) {
  std::ofstream gp(script_path, std::ios::binary);
  if (!gp) throw InputFileError("cannot write '" + script_path + "'");
  gp << "# MTF vs TRANS total access cost against k at n = " << n << "\n"
     << "set datafile separator ','\n"
     << "set xlabel 'k'\n"
     << "set ylabel 'total access cost'\n"
     << "set key left top\n"
     << "set grid\n";
  if (families.size() > 1) {
    gp << "set multiplot layout 1," << families.size() << "\n";
  }
  for (Family f : families) {
    const std::string tag = to_string(f);
    gp << "set title '" << tag << ", n = " << n << "'\n"
       << "plot '" << csv_path << "' every ::1 using 2:(strcol(3) eq '" << tag
       << "' ? $4 : 1/0) with linespoints title 'MTF', \\\n"
       << "     '' every ::1 using 2:(strcol(3) eq '" << tag
       << "' ? $5 : 1/0) with linespoints title 'TRANS'\n";
  }
  if (families.size() > 1) gp << "unset multiplot\n";
}

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  const auto families = parse_families(o.seq);
  const IntRange ks = parse_range(o.k);
  if (ks.lo < 1) throw InvalidParameterError("k must be >= 1");
  if (o.n < 1) throw InvalidParameterError("n must be >= 1");
  if (!o.gnuplot.empty() && o.output.empty()) {
    throw InvalidParameterError("--gnuplot needs --output for the data file");
  }

  int status = kOk;
  Sink sink(o.output, out);
  std::ostream& os = sink.get();
  const bool csv = o.format == "csv";
  if (csv) {
    os << "n,k,family,mtf_cost,trans_cost\n";
  } else {
    os << "n     k     family  mtf_cost    trans_cost\n";
  }
  const ListState initial = ListState::identity(static_cast<std::size_t>(o.n));
  for (Family f : families) {
    for (auto k = ks.lo; k <= ks.hi; ++k) {
      const Cost mtf = predict(PolicyKind::MTF, f, o.n, k).total;
      const Cost trans = predict(PolicyKind::TRANS, f, o.n, k).total;
      const auto seq = f == Family::T1 ? gen_t1(o.n, k) : gen_t2(o.n, k);
      const Cost mtf_sim =
          serve(PolicyKind::MTF, initial, seq, CostModel::Full).grand_total;
      const Cost trans_sim =
          serve(PolicyKind::TRANS, initial, seq, CostModel::Full).grand_total;
      if (mtf_sim != mtf || trans_sim != trans) {
        err << "simulation disagrees with closed form at " << to_string(f)
            << " n=" << o.n << " k=" << k << ": MTF " << mtf_sim << " vs "
            << mtf << ", TRANS " << trans_sim << " vs " << trans << '\n';
        status = kMismatch;
      }
      if (csv) {
        os << o.n << ',' << k << ',' << to_string(f) << ',' << mtf << ','
           << trans << '\n';
      } else {
        os << std::left << std::setw(6) << o.n << std::setw(6) << k
           << std::setw(8) << to_string(f) << std::setw(12) << mtf << trans
           << std::right << '\n';
      }
    }
  }
  if (!o.gnuplot.empty()) write_gnuplot(o.gnuplot, o.output, o.n, families);
  return status;
}

int cmd_crossover(const CrossoverOptions& o, std::ostream& out) {
  const auto families = parse_families(o.seq);
  const IntRange ns = parse_range(o.n);
  if (ns.lo < 1) throw InvalidParameterError("n must be >= 1");

  Sink sink(o.output, out);
  std::ostream& os = sink.get();
  const bool csv = o.format == "csv";
  if (csv) {
    os << "family,n,k_star,k_max\n";
  } else {
    os << "family  n     k_star  k_max\n";
  }
  for (Family f : families) {
    for (auto n = ns.lo; n <= ns.hi; ++n) {
      const auto r = crossover(f, n, o.k_max);
      const std::string k_star = r.k_star ? std::to_string(*r.k_star) : "none";
      if (csv) {
        os << to_string(f) << ',' << n << ',' << k_star << ','
           << r.searched_k_max << '\n';
      } else {
        os << std::left << std::setw(8) << to_string(f) << std::setw(6) << n
           << std::setw(8) << k_star << r.searched_k_max << std::right;
        if (r.k_star && !r.dominance_holds) os << "  (not dominant)";
        os << '\n';
      }
    }
  }
  return kOk;
}

void add_output_options(CLI::App* cmd, std::string& format,
                        std::string& output) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  cmd->add_option("-o,--output", output, "Write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Self-organizing list simulator and closed-form cost checker",
               "selforg"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand(
      "simulate", "Serve a request sequence and report its cost");
  simulate->add_option("--algo", sim.algo, "mtf, trans or fc")
      ->required()
      ->check(CLI::IsMember(kAlgoNames, CLI::ignore_case));
  simulate->add_option("--seq", sim.seq, "Generated family: t1, t2 or perm");
  simulate->add_option("--n", sim.n, "List size");
  simulate->add_option("--k", sim.k, "Repetition count")->capture_default_str();
  simulate->add_option("--perm", sim.perm,
                       "Permutation for --seq perm, e.g. 2,1,3");
  simulate->add_option("--list-file", sim.list_file, "Initial list file");
  simulate->add_option("--seq-file", sim.seq_file, "Explicit request file");
  simulate->add_option("--model", sim.model, "full or partial")
      ->check(CLI::IsMember({"full", "partial"}))
      ->capture_default_str();
  simulate->add_flag("--per-pass", sim.per_pass,
                     "Print pass totals and pass-end configurations");
  add_output_options(simulate, sim.format, sim.output);

  PredictOptions pred;
  auto* predict_cmd =
      app.add_subcommand("predict", "Evaluate the closed-form total cost");
  predict_cmd->add_option("--algo", pred.algo, "mtf, trans or both")
      ->required();
  predict_cmd->add_option("--seq", pred.seq, "t1, t2 or both")->required();
  predict_cmd->add_option("--n", pred.n, "List size")->required();
  predict_cmd->add_option("--k", pred.k, "k or inclusive range a..b")
      ->capture_default_str();
  add_output_options(predict_cmd, pred.format, pred.output);

  VerifyOptions ver;
  auto* verify = app.add_subcommand(
      "verify", "Check closed forms against simulation over a grid");
  verify->add_option("--n", ver.n, "n range a..b")->capture_default_str();
  verify->add_option("--k", ver.k, "k range a..b")->capture_default_str();
  verify->add_option("--algo", ver.algo, "mtf, trans or all")
      ->capture_default_str();
  verify->add_option("--seq", ver.seq, "t1, t2 or all")->capture_default_str();
  verify->add_option("--model", ver.model, "full or partial")
      ->check(CLI::IsMember({"full", "partial"}))
      ->capture_default_str();
  verify->add_option("--threads", ver.threads, "Worker threads (0 = auto)")
      ->capture_default_str();
  add_output_options(verify, ver.format, ver.output);

  CompareOptions cmp;
  auto* compare = app.add_subcommand(
      "compare", "Emit MTF and TRANS totals against k at fixed n");
  compare->add_option("--seq", cmp.seq, "t1, t2 or both")
      ->capture_default_str();
  compare->add_option("--n", cmp.n, "List size")->capture_default_str();
  compare->add_option("--k", cmp.k, "k range a..b")->capture_default_str();
  compare->add_option("--gnuplot", cmp.gnuplot,
                      "Also write a gnuplot script plotting the --output CSV");
  add_output_options(compare, cmp.format, cmp.output);

  CrossoverOptions cx;
  auto* cross = app.add_subcommand(
      "crossover", "Smallest k where TRANS is strictly cheaper than MTF");
  cross->add_option("--seq", cx.seq, "t1, t2 or both")->capture_default_str();
  cross->add_option("--n", cx.n, "n range a..b")->capture_default_str();
  cross->add_option("--kmax", cx.k_max, "Largest k searched")
      ->capture_default_str();
  add_output_options(cross, cx.format, cx.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadParameter;
  }

  try {
    if (*simulate) return cmd_simulate(sim, out);
    if (*predict_cmd) return cmd_predict(pred, out);
    if (*verify) return cmd_verify(ver, out);
    if (*compare) return cmd_compare(cmp, out, err);
    if (*cross) return cmd_crossover(cx, out);
  } catch (const InputFileError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameter;
  }
  return kBadParameter;
}

}  // namespace selforg::cli

// Copyright 2026 The iml Authors.
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

#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "iml/brute_oracle.hpp"
#include "iml/core_model.hpp"
#include "iml/exact_solver.hpp"
#include "iml/inequality_checks.hpp"
#include "iml/json_io.hpp"
#include "iml/residue_search.hpp"
#include "iml/result_store.hpp"

namespace iml::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

using Cell = std::variant<std::uint64_t, std::int64_t, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else return std::to_string(v);
      },
      c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          // Same 6 significant digits as the CSV output.
          const std::string text = format_double(v);
          double rounded = 0.0;
          std::from_chars(text.data(), text.data() + text.size(), rounded);
          return rounded;
        } else {
          return v;
        }
      },
      c);
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Settings {
  std::string format = "csv";
  std::string output;
  std::string cache;
  bool no_meta = false;
  unsigned jobs = 1;
};

class Emitter {
 public:
  Emitter(const Settings& settings, std::ostream& out) : settings_(settings), stdout_(out) {}

  std::ostream& stream() {
    if (settings_.output.empty()) return stdout_;
    if (!file_) {
      file_ = std::make_unique<std::ofstream>(settings_.output, std::ios::trunc);
      if (!*file_) throw std::runtime_error("cannot open output " + settings_.output);
    }
    return *file_;
  }

  void table(const std::string& command, const Table& t) {
    std::ostream& os = stream();
    if (settings_.format == "json") {
      nlohmann::ordered_json doc;
      doc["command"] = command;
      if (!settings_.no_meta) doc["generated"] = utc_timestamp();
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = cell_json(row[c]);
        doc["rows"].push_back(std::move(obj));
      }
      os << doc.dump(2) << '\n';
      return;
    }
    if (!settings_.no_meta) os << "# iml " << command << " generated " << utc_timestamp() << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(row[c]));
      os << '\n';
    }
  }

  void document(nlohmann::ordered_json doc) {
    if (!settings_.no_meta) doc["generated"] = utc_timestamp();
    stream() << doc.dump(2) << '\n';
  }

 private:
  const Settings& settings_;
  std::ostream& stdout_;
  std::unique_ptr<std::ofstream> file_;
};

void write_plot(const std::string& path, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open plot file " + path);
  for (const auto& [x, y] : points) out << x << ' ' << y << '\n';
}

Table search_table(const std::vector<SearchReport>& reports) {
  Table t{{"n", "strategy", "best_m", "best_f", "f_nn", "gap", "evaluations", "seed"}, {}};
  for (const auto& r : reports) {
    t.rows.push_back({r.n, r.strategy, r.best_m, r.best_f, r.f_nn, r.gap(), r.evaluations, r.seed});
  }
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and checks for the shortest interval holding distinct multiples of 1..n",
               "iml"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", settings.output, "Write output to this path instead of stdout");
  app.add_option("--cache", settings.cache, "Result store (JSON lines)")->envname("IML_CACHE");
  app.add_flag("--no-meta", settings.no_meta, "Omit the timestamp line/field");
  app.add_option("--jobs", settings.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));

  const auto n_range = CLI::Range(std::uint64_t{1}, kMaxDivisors);

  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string witness_out;
  auto* f_cmd = app.add_subcommand("f", "Solve one instance f(n, m)");
  f_cmd->add_option("--n", n, "Number of divisors")->required()->check(n_range);
  f_cmd->add_option("--m", m, "Interval left endpoint (exclusive)")->required();
  f_cmd->add_option("--witness-out", witness_out, "Write the witness as JSON");

  std::uint64_t residue_cap = kDefaultResidueCap;
  std::string plot_path;
  auto* scan_cmd = app.add_subcommand("scan", "Exact max over all residues m mod lcm(1..n)");
  scan_cmd->add_option("--n", n)->required()->check(n_range);
  scan_cmd->add_option("--residue-cap", residue_cap, "Largest residue space to enumerate");
  scan_cmd->add_option("--plot", plot_path, "Write 'm f' pairs for plotting");

  std::uint64_t budget = 500;
  std::uint64_t seed = 0;
  auto* hunt_cmd = app.add_subcommand("hunt", "Seeded heuristic search for max_m f(n, m)");
  hunt_cmd->add_option("--n", n)->required()->check(n_range);
  hunt_cmd->add_option("--budget", budget, "Distinct residues to evaluate")
      ->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--seed", seed, "SplitMix64 seed");

  std::uint64_t n_max = 0;
  std::uint64_t k_max = 0;
  auto* lemma_cmd = app.add_subcommand("lemma1", "kn + f(kn,kn) <= k^2 n + f(n,k^2 n) over a grid");
  lemma_cmd->add_option("--n-max", n_max)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{4096}));
  lemma_cmd->add_option("--k-max", k_max)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{64}));

  auto* chain_cmd = app.add_subcommand("chain", "Evaluate the lower-bound chain at one n");
  chain_cmd->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{3}, kMaxDivisors));

  std::vector<std::uint64_t> n_list;
  auto* bounds_cmd = app.add_subcommand("bounds", "Measure f(n,n) against the envelopes");
  bounds_cmd->add_option("--n-list", n_list, "Comma-separated n values (each >= 3)")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(std::uint64_t{3}, kMaxDivisors));
  bounds_cmd->add_option("--plot", plot_path, "Write 'n f(n,n)' pairs for plotting");

  std::optional<std::uint64_t> oracle_length;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force spot check against the solver");
  oracle_cmd->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{1}, oracle::kBruteForceGuard));
  oracle_cmd->add_option("--m", m)->required();
  oracle_cmd->add_option("--L", oracle_length, "Also run the Hall check at this length");

  std::string witness_in;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness JSON file");
  verify_cmd->add_option("witness", witness_in)->required();

  std::vector<std::string> merge_inputs;
  std::string merge_out;
  auto* cache_cmd = app.add_subcommand("cache", "Result store maintenance");
  cache_cmd->require_subcommand(1);
  auto* merge_cmd = cache_cmd->add_subcommand("merge", "Merge two stores");
  merge_cmd->add_option("inputs", merge_inputs)->required()->expected(2);
  merge_cmd->add_option("-o,--out", merge_out)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    std::unique_ptr<ResultStore> store;
    if (!settings.cache.empty() && !merge_cmd->parsed()) {
      store = std::make_unique<ResultStore>(settings.cache);
    }
    const FValueFn f_source = store ? cached_f(*store) : FValueFn(exact_f);
    Emitter emit(settings, out);

    if (f_cmd->parsed()) {
      validate_instance(n, m);
      const SolveResult result = solve_f(n, m);
      const bool witness_ok = verify_witness(n, m, result.f_value, result.witness).ok;
      const bool cert_ok = certificate_holds(n, m, result.f_value - 1, result.certificate);
      if (store) store->put(n, m, result.f_value);
      if (!witness_out.empty()) {
        std::ofstream wf(witness_out, std::ios::trunc);
        if (!wf) throw std::runtime_error("cannot open " + witness_out);
        wf << witness_to_json({n, m, result.f_value, result.witness}).dump() << '\n';
      }
      if (settings.format == "json") {
        emit.document(solve_result_to_json(result));
      } else {
        Table t{{"n", "m", "f", "witness", "violator", "neighborhood"}, {}};
        t.rows.push_back({n, m, result.f_value, join(result.witness.assignment),
                          join(result.certificate.violator_set),
                          result.certificate.neighborhood_size});
        emit.table("f", t);
      }
      return witness_ok && cert_ok ? kExitOk : kExitVerificationFailed;
    }

    if (scan_cmd->parsed()) {
      const auto profile = residue_profile(n, f_source, settings.jobs, residue_cap);
      const SearchReport report = exhaustive_max(n, [&](std::uint64_t nn, std::uint64_t mm) {
        return nn == n ? profile[mm % profile.size()] : f_source(nn, mm);
      }, 1, residue_cap);
      if (!plot_path.empty()) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> points;
        for (std::uint64_t r = 0; r < profile.size(); ++r) points.emplace_back(r, profile[r]);
        write_plot(plot_path, points);
      }
      emit.table("scan", search_table({report}));
      return report.best_f >= report.f_nn ? kExitOk : kExitVerificationFailed;
    }

    if (hunt_cmd->parsed()) {
      const SearchReport report = sampled_max(n, budget, seed, f_source, settings.jobs);
      emit.table("hunt", search_table({report}));
      return report.best_f >= report.f_nn ? kExitOk : kExitVerificationFailed;
    }

    if (lemma_cmd->parsed()) {
      const auto rows = lemma1_grid(n_max, k_max, f_source, settings.jobs);
      Table t{{"n", "k", "lhs", "rhs", "holds", "composed_length", "composed_valid"}, {}};
      bool all_ok = true;
      for (const auto& r : rows) {
        all_ok = all_ok && r.ok();
        t.rows.push_back({r.sides.n, r.sides.k, r.sides.lhs, r.sides.rhs, r.sides.holds(),
                          r.composed_length, r.composed_valid});
      }
      emit.table("lemma1", t);
      return all_ok ? kExitOk : kExitVerificationFailed;
    }

    if (chain_cmd->parsed()) {
      const auto params = theorem_parameters(n);
      const auto rows = chain_report(n, f_source);
      Table t{{"n", "k", "link", "lhs", "rhs", "holds", "analytic"}, {}};
      auto text = [](const Quantity& q) {
        return q.is_exact ? to_string(q.exact) : format_double(q.approx);
      };
      for (const auto& r : rows) {
        t.rows.push_back({n, params.k, r.name, text(r.lhs), text(r.rhs), r.holds, r.analytic});
      }
      emit.table("chain", t);
      return rows.front().holds ? kExitOk : kExitVerificationFailed;
    }

    if (bounds_cmd->parsed()) {
      const auto rows = bounds_ratios(n_list, f_source, settings.jobs);
      Table t{{"n", "f_nn", "lower_env", "upper_env", "ratio_lower", "ratio_upper"}, {}};
      bool in_range = true;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> points;
      for (const auto& r : rows) {
        in_range = in_range && r.f_nn >= r.n && r.f_nn <= r.n * r.n;
        t.rows.push_back({r.n, r.f_nn, r.lower_env, r.upper_env, r.ratio_lower, r.ratio_upper});
        points.emplace_back(r.n, r.f_nn);
      }
      if (!plot_path.empty()) write_plot(plot_path, points);
      emit.table("bounds", t);
      return in_range ? kExitOk : kExitVerificationFailed;
    }

    if (oracle_cmd->parsed()) {
      const std::uint64_t brute = oracle::brute_force_f(n, m);
      const std::uint64_t solved = solve_f(n, m).f_value;
      bool agree = brute == solved;
      Table t{{"n", "m", "brute_f", "solver_f", "agree", "L", "hall"}, {}};
      std::vector<Cell> row{n, m, brute, solved, agree, std::string(), std::string()};
      if (oracle_length) {
        const bool hall = oracle::hall_check(n, m, *oracle_length);
        const bool expected = *oracle_length >= solved;
        agree = agree && hall == expected;
        row[4] = agree;
        row[5] = *oracle_length;
        row[6] = hall;
      }
      t.rows.push_back(std::move(row));
      emit.table("oracle", t);
      return agree ? kExitOk : kExitVerificationFailed;
    }

    if (verify_cmd->parsed()) {
      std::ifstream in(witness_in);
      if (!in) throw std::runtime_error("cannot read " + witness_in);
      const WitnessDocument doc = witness_from_json(nlohmann::json::parse(in));
      const WitnessVerdict verdict = verify_witness(doc.n, doc.m, doc.length, doc.witness);
      Table t{{"n", "m", "L", "valid", "fault", "detail"}, {}};
      t.rows.push_back({doc.n, doc.m, doc.length, verdict.ok, std::string(to_string(verdict.fault)),
                        verdict.message});
      emit.table("verify", t);
      return verdict.ok ? kExitOk : kExitVerificationFailed;
    }

    if (merge_cmd->parsed()) {
      const std::size_t count = ResultStore::merge(merge_inputs[0], merge_inputs[1], merge_out);
      err << "merged " << count << " records into " << merge_out << '\n';
      return kExitOk;
    }
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fault: " << e.what() << '\n';
    return kExitFault;
  }
  return kExitUsage;
}

}  // namespace iml::cli

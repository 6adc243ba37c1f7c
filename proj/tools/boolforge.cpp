// Copyright 2026 The boolforge Authors
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

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "boolforge/bench.hpp"
#include "boolforge/netlist_io.hpp"

using namespace boolforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;

bool parse_range(const std::string& text, uint32_t& lo, uint32_t& hi) {
  size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = static_cast<uint32_t>(std::stoul(text));
    } else {
      lo = static_cast<uint32_t>(std::stoul(text.substr(0, dots)));
      hi = static_cast<uint32_t>(std::stoul(text.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && lo <= hi;
}

bool parse_variant(const std::string& text, Variant& v) {
  if (text == "sequential" || text == "seq") {
    v = Variant::Sequential;
    return true;
  }
  if (text == "parallel" || text == "par") {
    v = Variant::Parallel;
    return true;
  }
  return false;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

int unknown_operator(const std::string& name) {
  std::cerr << "error: unknown operator '" << name << "'. Known operators:\n";
  for (const OperatorSpec& s : operator_registry())
    std::cerr << "  " << s.name << "\n";
  return kExitUsage;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("BOOLFORGE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

std::string assignment_string(const Assignment& a) {
  std::string s;
  for (uint8_t b : a) s += b ? '1' : '0';
  return s;
}

std::string bits_string(const std::vector<uint8_t>& a) {
  std::string s;
  for (uint8_t b : a) s += b ? '1' : '0';
  return s;
}

int run_synth(const std::string& op, const std::string& n_text, uint32_t k,
              const std::string& variant_text, const std::string& emit,
              const std::string& out_path) {
  const OperatorSpec* spec = find_operator(op);
  if (!spec) return unknown_operator(op);
  uint32_t n_lo = 0, n_hi = 0;
  if (!parse_range(n_text, n_lo, n_hi) || n_lo != n_hi)
    return usage_error("synth needs a single --n value");
  Variant v = Variant::Sequential;
  if (!parse_variant(variant_text, v))
    return usage_error("bad --variant (sequential|parallel)");
  OpParams p{n_lo, 0, v};
  if (spec->takes_k)
    p.k = k ? k : (spec->default_k ? spec->default_k(p.n) : 0);
  else if (k)
    return usage_error("operator '" + op + "' takes no --k");
  if (p.n < spec->min_n)
    return usage_error("operator '" + op + "' needs n >= " +
                       std::to_string(spec->min_n));
  Circuit c;
  try {
    c = spec->generate(p);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  if (!emit.empty()) {
    std::string text;
    if (emit == "json")
      text = to_json(c);
    else if (emit == "blif")
      text = to_blif(c);
    else if (emit == "dot")
      text = to_dot(c);
    else
      return usage_error("bad --emit (json|blif|dot)");
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(out_path);
      if (!os) return usage_error("cannot write " + out_path);
      os << text;
    }
  }
  Metrics m = metrics(c);
  std::cout << op << " n=" << p.n
            << (spec->takes_k ? " k=" + std::to_string(p.k) : "")
            << " variant="
            << (spec->takes_variant
                    ? (v == Variant::Parallel ? "parallel" : "sequential")
                    : "-")
            << " size=" << m.size << " depth=" << m.depth << "\n";
  return kExitPass;
}

int run_check(const std::string& op, const std::string& n_text, uint32_t k,
              const std::string& variant_text, CheckBudget budget) {
  const OperatorSpec* spec = find_operator(op);
  if (!spec) return unknown_operator(op);
  uint32_t n_lo = 0, n_hi = 0;
  if (!parse_range(n_text, n_lo, n_hi)) return usage_error("bad --n range");
  std::vector<Variant> variants;
  if (!variant_text.empty()) {
    Variant v{};
    if (!parse_variant(variant_text, v))
      return usage_error("bad --variant (sequential|parallel)");
    variants.push_back(v);
  } else if (spec->takes_variant) {
    variants = {Variant::Sequential, Variant::Parallel};
  } else {
    variants = {Variant::Sequential};
  }
  bool all_ok = true;
  for (uint32_t n = std::max(n_lo, spec->min_n); n <= n_hi; ++n) {
    for (Variant v : variants) {
      OpParams p{n, 0, v};
      if (spec->takes_k)
        p.k = k ? k : (spec->default_k ? spec->default_k(n) : 0);
      std::string head =
          op + " n=" + std::to_string(n) +
          (spec->takes_k ? " k=" + std::to_string(p.k) : "") + " variant=" +
          (spec->takes_variant
               ? (v == Variant::Parallel ? "parallel" : "sequential")
               : "-");
      try {
        EquivReport rep = check_operator(*spec, p, budget);
        std::cout << head << " mode="
                  << (rep.mode == EquivReport::Mode::Exhaustive ? "exhaustive"
                                                                : "sampled")
                  << " tested=" << rep.tested;
        if (rep.mode == EquivReport::Mode::Sampled)
          std::cout << " seed=" << rep.seed;
        if (rep.pass()) {
          std::cout << " pass\n";
        } else {
          all_ok = false;
          const EquivFailure& f = rep.failures.front();
          std::cout << " FAIL input=" << assignment_string(f.input)
                    << " expected=" << bits_string(f.expected)
                    << " got=" << bits_string(f.got) << "\n";
        }
      } catch (const std::exception& e) {
        all_ok = false;
        std::cout << head << " ERROR " << e.what() << "\n";
      }
    }
  }
  return all_ok ? kExitPass : kExitCheckFail;
}

int run_table1(const std::string& out_path) {
  std::ostringstream os;
  std::vector<SweepRow> rows = sweep_all(2, 32);
  if (const OperatorSpec* enc = find_operator("enc")) {
    std::vector<SweepRow> more = sweep(*enc, 33, 64);
    rows.insert(rows.end(), more.begin(), more.end());
  }
  std::vector<uint32_t> depth_ns{4,  8,   16,  32,  64,  100, 128,
                                 256, 333, 512, 777, 1000, 1024};
  std::vector<DepthRow> depths = depth_report_all(depth_ns);
  os << "== size sweep ==\n" << sweep_table(rows) << "\n";
  os << "== depth report ==\n" << depth_table(depths) << "\n";
  os << "== summary table ==\n" << table1_report();
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path);
    if (!f) return usage_error("cannot write " + out_path);
    f << os.str();
    std::cout << "report written to " << out_path << "\n";
  }
  return all_pass(rows) && all_pass(depths) ? kExitPass : kExitCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gate-level circuit generator and checker for basic "
               "boolean operators"};
  app.require_subcommand(1);

  std::string op, n_text = "8", variant_text = "sequential", emit, out_path;
  uint32_t k = 0;

  CLI::App* synth = app.add_subcommand("synth", "generate one circuit");
  synth->add_option("op", op, "operator name")->required();
  synth->add_option("--n", n_text, "size parameter");
  synth->add_option("--k", k, "secondary parameter (shift bound, word "
                              "width, threshold)");
  synth->add_option("--variant", variant_text, "sequential|parallel");
  synth->add_option("--emit", emit, "json|blif|dot");
  synth->add_option("--out", out_path, "output file (default stdout)");

  std::string check_variant;
  CheckBudget budget;
  budget.seed = default_seed();
  CLI::App* check = app.add_subcommand("check", "verify against the oracle");
  check->add_option("op", op, "operator name")->required();
  check->add_option("--n", n_text, "n or inclusive range a..b");
  check->add_option("--k", k, "secondary parameter");
  check->add_option("--variant", check_variant,
                    "sequential|parallel (default: all)");
  check->add_option("--exhaustive-limit", budget.exhaustive_limit,
                    "max input bits for exhaustive mode");
  check->add_option("--samples", budget.samples, "sample count above that");
  check->add_option("--seed", budget.seed, "sampling seed");

  CLI::App* table1 = app.add_subcommand("table1", "size/depth report");
  table1->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* list = app.add_subcommand("list", "list operators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  if (synth->parsed())
    return run_synth(op, n_text, k, variant_text, emit, out_path);
  if (check->parsed()) return run_check(op, n_text, k, check_variant, budget);
  if (table1->parsed()) return run_table1(out_path);
  if (list->parsed()) {
    for (const OperatorSpec& s : operator_registry())
      std::cout << s.name << "  " << s.summary << "\n";
    return kExitPass;
  }
  return kExitUsage;
}

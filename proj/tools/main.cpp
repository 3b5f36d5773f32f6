// starcrit: build critical colorings, check them, decide arrowing and compare
// oracle Ramsey values with the closed forms.
//
// Exit codes: 0 success, 1 disagreement or unexpected target, 2 usage error,
// 3 node budget exhausted.

#include "starcrit/arrowing_search.hpp"
#include "starcrit/cli_io.hpp"
#include "starcrit/constructions.hpp"
#include "starcrit/detectors.hpp"
#include "starcrit/formulas.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

namespace {

using namespace starcrit;
using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json_output = false;

  std::string generator;
  int n = 0;
  int m = 0;
  std::string out_file;
  std::string dot_file;

  std::string coloring_file;

  int core = 0;
  int pendant = 0;
  std::uint64_t budget = 0;
  int jobs = 0;
  std::string witness_file;

  int max_order = 64;
  int ramsey = 0;
  bool compare = false;

  std::string n_range;
  std::string m_range;
  std::string what = "r";
  std::string format = "txt";

  int verify_max = 5;
  std::string extra;
};

SearchConfig search_config(const Options &o) {
  SearchConfig cfg;
  if (o.budget > 0)
    cfg.node_budget = o.budget;
  cfg.parallel_width = o.jobs;
  return cfg;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write " + path);
  out << text;
}

std::string host_text(const HostSpec &h) {
  std::string out = "K_" + std::to_string(h.n_core);
  if (h.has_pendant())
    out += " + K_{1," + std::to_string(h.pendant_k) + "}";
  return out;
}

json host_json(const HostSpec &h) { return {{"n_core", h.n_core}, {"pendant_k", h.pendant_k}}; }

double millis(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

std::optional<int> formula_or_none(int (*f)(int, int), int n, int m) {
  if (n < 3 || m < 3)
    return std::nullopt;
  return f(n, m);
}

int run_construct(const Options &o) {
  const auto gen = parse_generator(o.generator);
  if (!gen)
    throw UsageError("unknown construction '" + o.generator + "'");
  const TwoColoring c = generate(*gen, o.n, o.m);
  const TargetPair t{o.n, o.m};
  const bool red = has_red_star(c, t.n);
  const bool blue = has_blue_star_plus_edge(c, t.m);

  ColoringMetadata meta;
  meta.generator = std::string(to_string(*gen));
  meta.n = o.n;
  meta.m = o.m;
  meta.case_tag = classify(o.n, o.m);
  if (!o.out_file.empty())
    write_file(o.out_file, serialize(c, meta));
  if (!o.dot_file.empty())
    write_file(o.dot_file, export_dot(c, to_string(*gen)));

  // Keep stdout clean when the document itself is going there.
  std::ostream &report = o.out_file == "-" || o.dot_file == "-" ? std::cerr : std::cout;
  if (o.json_output) {
    json out{{"construction", meta.generator.value()},
             {"n", o.n},
             {"m", o.m},
             {"case", std::string(to_string(*meta.case_tag))},
             {"host", host_json(c.host())},
             {"red_edges", c.red_edges().size()},
             {"blue_edges", c.blue_edges().size()},
             {"red_star", red},
             {"blue_star_plus_edge", blue},
             {"good", !red && !blue}};
    report << out.dump() << "\n";
  } else {
    report << meta.generator.value() << " (n=" << o.n << ", m=" << o.m << "): " << host_text(c.host())
              << ", " << c.red_edges().size() << " red / " << c.blue_edges().size() << " blue edges\n"
              << "red K_{1," << o.n << "}: " << (red ? "present" : "absent") << "\n"
              << "blue K_{1," << o.m << "}+e: " << (blue ? "present" : "absent") << "\n"
              << (red || blue ? "FAILED: construction contains a target\n" : "good coloring\n");
  }
  return red || blue ? kMismatch : kOk;
}

int run_check(const Options &o) {
  const ColoringDocument doc = parse_document(read_file(o.coloring_file));
  const TargetPair t{o.n, o.m};
  t.validate();
  const bool red = has_red_star(doc.coloring, t.n);
  const bool blue = has_blue_star_plus_edge(doc.coloring, t.m);
  if (o.json_output) {
    std::cout << json{{"host", host_json(doc.coloring.host())},
                      {"n", t.n},
                      {"m", t.m},
                      {"red_star", red},
                      {"blue_star_plus_edge", blue},
                      {"good", !red && !blue}}
                     .dump()
              << "\n";
  } else {
    std::cout << host_text(doc.coloring.host()) << "\n"
              << "red K_{1," << t.n << "}: " << (red ? "present" : "absent") << "\n"
              << "blue K_{1," << t.m << "}+e: " << (blue ? "present" : "absent") << "\n"
              << "good: " << (!red && !blue ? "yes" : "no") << "\n";
  }
  return red || blue ? kMismatch : kOk;
}

int run_arrow(const Options &o) {
  HostSpec host{o.core, o.pendant};
  host.validate();
  const TargetPair t{o.n, o.m};
  const SearchOutcome out = find_good_coloring(host, t, search_config(o));

  std::string witness_text;
  if (out.witness) {
    ColoringMetadata meta;
    meta.generator = "search";
    meta.n = t.n;
    meta.m = t.m;
    witness_text = serialize(*out.witness, meta);
    if (!o.witness_file.empty())
      write_file(o.witness_file, witness_text);
  }

  if (o.json_output) {
    json j{{"host", host_json(host)},
           {"n", t.n},
           {"m", t.m},
           {"verdict", std::string(to_string(out.verdict))},
           {"nodes", out.nodes_explored},
           {"elapsed_ms", millis(out.elapsed)}};
    if (out.witness)
      j["witness"] = json::parse(witness_text);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << host_text(host) << " -> (K_{1," << t.n << "}, K_{1," << t.m
              << "}+e): " << to_string(out.verdict) << " (" << out.nodes_explored << " nodes, "
              << std::fixed << std::setprecision(1) << millis(out.elapsed) << " ms)\n";
    if (out.witness && o.witness_file.empty())
      std::cout << witness_text;
  }
  return out.verdict == Verdict::budget_exhausted ? kBudget : kOk;
}

int run_ramsey(const Options &o) {
  const TargetPair t{o.n, o.m};
  const RamseyCertificate cert = certify_ramsey(t, o.max_order, search_config(o));
  const auto formula = formula_or_none(r_formula, t.n, t.m);
  const bool agree = !formula || *formula == cert.value;
  std::chrono::nanoseconds total{0};
  for (const Probe &p : cert.probes)
    total += p.outcome.elapsed;

  if (o.json_output) {
    json j{{"n", t.n}, {"m", t.m}, {"oracle", cert.value}, {"elapsed_ms", millis(total)}};
    if (o.compare) {
      j["formula"] = formula ? json(*formula) : json(nullptr);
      j["agree"] = agree;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "r(K_{1," << t.n << "}, K_{1," << t.m << "}+e) = " << cert.value << " (oracle)";
    if (o.compare) {
      if (formula)
        std::cout << ", formula " << *formula << (agree ? ", agree" : ", MISMATCH");
      else
        std::cout << ", no formula below n, m = 3";
    }
    std::cout << "\n";
  }
  return o.compare && !agree ? kMismatch : kOk;
}

int run_starcrit(const Options &o) {
  const TargetPair t{o.n, o.m};
  const SearchConfig cfg = search_config(o);
  const int r = o.ramsey > 0 ? o.ramsey : compute_ramsey(t, o.max_order, cfg);
  const StarCriticalCertificate cert = certify_star_critical(t, r, cfg);
  const auto formula = formula_or_none(r_star_formula, t.n, t.m);
  const bool agree = !formula || *formula == cert.value;

  if (o.json_output) {
    json j{{"n", t.n}, {"m", t.m}, {"r", r}, {"oracle", cert.value}};
    if (o.compare) {
      j["formula"] = formula ? json(*formula) : json(nullptr);
      j["agree"] = agree;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "r_*(K_{1," << t.n << "}, K_{1," << t.m << "}+e) = " << cert.value
              << " (oracle, r = " << r << ")";
    if (o.compare) {
      if (formula)
        std::cout << ", formula " << *formula << (agree ? ", agree" : ", MISMATCH");
      else
        std::cout << ", no formula below n, m = 3";
    }
    std::cout << "\n";
  }
  return o.compare && !agree ? kMismatch : kOk;
}

std::pair<int, int> parse_range(const std::string &text) {
  static const std::regex pattern(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern))
    throw UsageError("range '" + text + "' is not of the form A..B");
  const int lo = std::stoi(match[1]);
  const int hi = std::stoi(match[2]);
  if (lo > hi)
    throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

std::string table_cell(const std::string &what, int n, int m) {
  if (what == "r")
    return std::to_string(r_formula(n, m));
  if (what == "rstar")
    return std::to_string(r_star_formula(n, m));
  return std::string(to_string(classify(n, m)));
}

int run_table(const Options &o) {
  const auto [n_lo, n_hi] = parse_range(o.n_range);
  const auto [m_lo, m_hi] = parse_range(o.m_range);
  if (n_lo < 3 || m_lo < 3)
    throw UsageError("table ranges must start at 3 or above");

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"n\\m"};
  for (int m = m_lo; m <= m_hi; ++m)
    header.push_back(std::to_string(m));
  rows.push_back(header);
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int m = m_lo; m <= m_hi; ++m)
      row.push_back(table_cell(o.what, n, m));
    rows.push_back(row);
  }

  if (o.format == "csv") {
    for (const auto &row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
    return kOk;
  }
  if (o.format == "md") {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::cout << "|";
      for (const auto &cell : rows[r])
        std::cout << " " << cell << " |";
      std::cout << "\n";
      if (r == 0) {
        std::cout << "|";
        for (std::size_t i = 0; i < rows[r].size(); ++i)
          std::cout << "---|";
        std::cout << "\n";
      }
    }
    return kOk;
  }
  std::size_t width = 0;
  for (const auto &row : rows)
    for (const auto &cell : row)
      width = std::max(width, cell.size());
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? " " : "") << std::setw(static_cast<int>(width)) << row[i];
    std::cout << "\n";
  }
  return kOk;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string &text) {
  static const std::regex pair_pattern(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::vector<std::pair<int, int>> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pair_pattern);
       it != std::sregex_iterator(); ++it) {
    out.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
  }
  const std::string leftover = std::regex_replace(text, pair_pattern, "");
  if (leftover.find_first_not_of(", \t") != std::string::npos)
    throw UsageError("cannot parse pair list '" + text + "'; expected e.g. \"(4,6),(4,7)\"");
  return out;
}

int run_verify(const Options &o) {
  if (o.verify_max < 3)
    throw UsageError("--max must be at least 3");
  std::vector<std::pair<int, int>> pairs;
  for (int n = 3; n <= o.verify_max; ++n)
    for (int m = 3; m <= o.verify_max; ++m)
      pairs.emplace_back(n, m);
  for (const auto &p : parse_pairs(o.extra))
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) {
      if (p.first < 3 || p.second < 3)
        throw UsageError("extra pairs need n, m >= 3");
      pairs.push_back(p);
    }

  const SearchConfig cfg = search_config(o);
  bool all_agree = true;
  json results = json::array();
  for (const auto &[n, m] : pairs) {
    const auto start = std::chrono::steady_clock::now();
    const TargetPair t{n, m};
    const int r = compute_ramsey(t, std::min(kMaxVertices, r_formula(n, m) + 2), cfg);
    const int rs = compute_star_critical(t, r, cfg);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const bool agree = r == r_formula(n, m) && rs == r_star_formula(n, m);
    all_agree = all_agree && agree;
    const double ms = millis(std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed));
    if (o.json_output) {
      results.push_back({{"n", n},
                         {"m", m},
                         {"case", std::string(to_string(classify(n, m)))},
                         {"r_oracle", r},
                         {"r_formula", r_formula(n, m)},
                         {"rstar_oracle", rs},
                         {"rstar_formula", r_star_formula(n, m)},
                         {"agree", agree},
                         {"elapsed_ms", ms}});
    } else {
      std::cout << "(" << n << "," << m << ") " << std::left << std::setw(18)
                << to_string(classify(n, m)) << std::right << " r=" << std::setw(2) << r << " [formula "
                << std::setw(2) << r_formula(n, m) << "]  r*=" << std::setw(2) << rs << " [formula "
                << std::setw(2) << r_star_formula(n, m) << "]  " << (agree ? "ok" : "MISMATCH")
                << "  " << std::fixed << std::setprecision(1) << ms << " ms\n";
    }
  }
  if (o.json_output)
    std::cout << json{{"pairs", results}, {"all_agree", all_agree}}.dump() << "\n";
  else
    std::cout << pairs.size() << " pairs, " << (all_agree ? "all agree" : "DISAGREEMENT FOUND") << "\n";
  return all_agree ? kOk : kMismatch;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Star vs. star-plus-edge Ramsey colorings, arrowing oracle and formulas"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_output, "Machine-readable JSON output");

  auto *construct = app.add_subcommand("construct", "Build and verify a lower-bound coloring");
  construct->add_option("--case", o.generator, "l1c1|l1c2|l1c3|l1c4|l2c1|l2c3")
      ->required()
      ->check(CLI::IsMember({"l1c1", "l1c2", "l1c3", "l1c4", "l2c1", "l2c3"}));
  construct->add_option("--n", o.n, "Red star size")->required();
  construct->add_option("--m", o.m, "Blue star-plus-edge size")->required();
  construct->add_option("--out", o.out_file, "Write the coloring document here ('-' for stdout)");
  construct->add_option("--dot", o.dot_file, "Write a Graphviz description here");

  auto *check = app.add_subcommand("check", "Run the target detectors on a coloring document");
  check->add_option("--coloring", o.coloring_file, "Coloring document")->required();
  check->add_option("--n", o.n)->required();
  check->add_option("--m", o.m)->required();

  auto add_search_options = [&](CLI::App *sub) {
    sub->add_option("--budget", o.budget, "Node budget (0 = unlimited)");
    sub->add_option("--jobs", o.jobs, "Parallel width")->check(CLI::NonNegativeNumber);
  };

  auto *arrow = app.add_subcommand("arrow", "Decide whether a host arrows the pair");
  arrow->add_option("--core", o.core, "Order of the complete core")->required();
  arrow->add_option("--pendant", o.pendant, "Attachment count of the pendant vertex");
  arrow->add_option("--n", o.n)->required();
  arrow->add_option("--m", o.m)->required();
  arrow->add_option("--witness", o.witness_file, "Write the witness document here");
  add_search_options(arrow);

  auto *ramsey = app.add_subcommand("ramsey", "Oracle Ramsey number");
  ramsey->add_option("--n", o.n)->required();
  ramsey->add_option("--m", o.m)->required();
  ramsey->add_option("--max", o.max_order, "Largest host order to probe")->required();
  ramsey->add_flag("--compare-formula", o.compare);
  add_search_options(ramsey);

  auto *starcrit_cmd = app.add_subcommand("starcrit", "Oracle star-critical Ramsey number");
  starcrit_cmd->add_option("--n", o.n)->required();
  starcrit_cmd->add_option("--m", o.m)->required();
  starcrit_cmd->add_option("--r", o.ramsey, "Ramsey number to use instead of searching for it");
  starcrit_cmd->add_option("--max", o.max_order, "Largest host order probed when searching for r");
  starcrit_cmd->add_flag("--compare-formula", o.compare);
  add_search_options(starcrit_cmd);

  auto *table = app.add_subcommand("table", "Tabulate the closed forms");
  table->add_option("--n-range", o.n_range, "A..B")->required();
  table->add_option("--m-range", o.m_range, "C..D")->required();
  table->add_option("--what", o.what)->check(CLI::IsMember({"r", "rstar", "case"}));
  table->add_option("--format", o.format)->check(CLI::IsMember({"txt", "csv", "md"}));

  auto *verify = app.add_subcommand("verify", "Oracle vs. formula sweep over 3 <= n, m <= max");
  verify->add_option("--max", o.verify_max, "Largest n and m in the sweep");
  verify->add_option("--extra", o.extra, "Additional pairs, e.g. \"(4,6),(4,7)\"");
  add_search_options(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct)
      return run_construct(o);
    if (*check)
      return run_check(o);
    if (*arrow)
      return run_arrow(o);
    if (*ramsey)
      return run_ramsey(o);
    if (*starcrit_cmd)
      return run_starcrit(o);
    if (*table)
      return run_table(o);
    if (*verify)
      return run_verify(o);
  } catch (const SearchIndeterminate &e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return kBudget;
  } catch (const InconsistentRamseyValue &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchRangeError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

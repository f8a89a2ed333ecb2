#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "genarcs/bounds.hpp"
#include "genarcs/certificate.hpp"
#include "genarcs/search.hpp"

namespace genarcs::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string q;
  std::string q_range;
  std::string kind = "generalized";
  std::string mode = "max";
  std::string format = "csv";
  std::string out;
  std::string certs;
  unsigned workers = 1;
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  bool exhaustive = false;
  bool permutation_reduction = false;
  std::vector<std::string> paths;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

json cell_json(const std::string& s) {
  if (s.empty() || s == "-") return nullptr;
  if (s.find_first_not_of("0123456789") == std::string::npos) return std::stoll(s);
  return s;
}

void render(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = cell_json(r[i]);
      rows.push_back(o);
    }
    os << json{{"table", t.name}, {"rows", rows}}.dump(2) << "\n";
    return;
  }
  if (format == "text") {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& r : t.rows)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << "  ";
        if (i + 1 == cells.size()) {
          os << cells[i];
        } else {
          os << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
        }
      }
      os << "\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return;
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ",";
      const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
      if (quote) {
        os << '"';
        for (char c : cells[i]) os << (c == '"' ? "\"\"" : std::string(1, c));
        os << '"';
      } else {
        os << cells[i];
      }
    }
    os << "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
}

std::string str(std::optional<std::int64_t> v) { return v ? std::to_string(*v) : "-"; }

// Mismatch bookkeeping for one row.
struct Status {
  std::vector<std::string> mismatches;
  std::vector<std::string> flags;
  bool budget = false;

  std::string text() const {
    if (budget) return "budget exhausted";
    std::vector<std::string> parts;
    for (const auto& m : mismatches) parts.push_back("MISMATCH " + m);
    for (const auto& f : flags) parts.push_back("FLAG " + f);
    if (parts.empty()) return "ok";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "; " : "") + parts[i];
    return s;
  }
};

// Compares a computed cell with the printed one, honoring the allowlist.
void compare(Status& st, std::string_view table, std::uint32_t q, std::string_view column,
             std::optional<std::int64_t> computed) {
  const KnownCell cell = known_values().cell(table, q, column);
  if (!cell.present || cell.value == computed) return;
  const std::string msg = std::string(column) + ": printed " + str(cell.value) + ", computed " + str(computed);
  const auto d = known_values().discrepancy(table, q, column);
  if (d && cell.value && computed && d->printed == *cell.value && d->computed == *computed) {
    st.flags.push_back(msg + " (" + d->note + ")");
  } else {
    st.mismatches.push_back(msg);
  }
}

std::string known(std::string_view table, std::uint32_t q, std::string_view column) {
  const KnownCell c = known_values().cell(table, q, column);
  if (!c.present) return "";
  return str(c.value);
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  std::vector<std::uint32_t> qs(const std::string& fallback) const {
    std::string spec = cfg_.q;
    if (!cfg_.q_range.empty()) spec = spec.empty() ? cfg_.q_range : spec + "," + cfg_.q_range;
    if (spec.empty()) spec = fallback;
    return parse_q_list(spec);
  }

  SearchResult search(std::uint32_t q, ArcKind kind, SearchMode mode) {
    if (q > 13) throw std::invalid_argument("q=" + std::to_string(q) + " is beyond the search cap 13");
    const Plane& plane = plane_for(q);
    SearchConfig sc;
    sc.q = q;
    sc.kind = kind;
    sc.mode = mode;
    sc.worker_count = cfg_.workers;
    sc.node_budget = cfg_.node_budget;
    sc.time_budget_seconds = cfg_.time_budget;
    sc.permutation_reduction = cfg_.permutation_reduction;
    if (cfg_.exhaustive) {
      if (mode == SearchMode::MaxSize) sc.k_ceiling = plane.size();
      if (mode == SearchMode::MinComplete) sc.k_floor = 4;
    }
    SearchResult r = run_search(plane, sc);
    for (const auto& w : r.witnesses) certs_.push_back(w);
    return r;
  }

  std::optional<std::int64_t> answer(const SearchResult& r, Status& st) {
    if (!r.exhaustive) st.budget = true;
    if (!r.answer) return std::nullopt;
    return static_cast<std::int64_t>(*r.answer);
  }

  int finish(const Table& t, const std::vector<Status>& statuses) {
    std::ostringstream os;
    render(t, cfg_.format, os);
    if (!emit_raw(os.str())) return kExitUsage;
    write_certs(t.name + ".json", json{{"table", t.name}});
    return exit_code(statuses);
  }

  static int exit_code(const std::vector<Status>& statuses) {
    bool mismatch = false;
    bool budget = false;
    for (const auto& s : statuses) {
      mismatch = mismatch || !s.mismatches.empty();
      budget = budget || s.budget;
    }
    if (budget) return kExitBudget;
    return mismatch ? kExitMismatch : kExitOk;
  }

  bool emit_raw(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return true;
    }
    std::ofstream f(cfg_.out);
    if (!f) {
      err_ << "error: cannot write " << cfg_.out << "\n";
      return false;
    }
    f << text;
    return true;
  }

  void write_certs(const std::string& file, const json& summary) {
    std::string dir = cfg_.certs;
    if (dir.empty())
      if (const char* env = std::getenv(kCertDirEnv)) dir = env;
    if (dir.empty() || certs_.empty()) return;
    std::filesystem::create_directories(dir);
    write_bundle((std::filesystem::path(dir) / file).string(), certs_, summary);
  }

  const RunConfig& cfg() const { return cfg_; }
  std::vector<ArcCertificate>& certs() { return certs_; }

 private:
  const Plane& plane_for(std::uint32_t q) {
    auto it = planes_.find(q);
    if (it == planes_.end()) it = planes_.emplace(q, Plane(make_field_of_order(q))).first;
    return it->second;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  std::map<std::uint32_t, Plane> planes_;
  std::vector<ArcCertificate> certs_;
};

int cmd_table1(Runner& r) {
  Table t{"table1", {"q", "m_prime", "m", "m_g", "status"}, {}};
  std::vector<Status> st;
  for (auto q : r.qs("2,3,4,5,7,8,9")) {
    Status s;
    const auto mg = r.answer(r.search(q, ArcKind::Generalized, SearchMode::MaxSize), s);
    compare(s, "table1", q, "m_g", mg);
    t.rows.push_back({std::to_string(q), known("table1", q, "m_prime"), known("table1", q, "m"), str(mg), s.text()});
    st.push_back(s);
  }
  return r.finish(t, st);
}

int cmd_table23(Runner& r, const std::string& name) {
  const bool searched = name == "table2";
  Table t{name, {"q", "ball_sqrt2", "ball_sqrt3", "prop", "t", "status"}, {}};
  std::vector<Status> st;
  for (auto q : r.qs(searched ? "2,3,4,5,7,8,9,11" : "13..31")) {
    Status s;
    const auto b2 = lower_t_ball_sqrt2(q);
    const auto b3 = lower_t_ball_sqrt3(q);
    const auto prop = lower_t_prop(q);
    compare(s, name, q, "ball_sqrt2", b2);
    compare(s, name, q, "ball_sqrt3", b3);
    compare(s, name, q, "prop", prop);
    std::string tcell;
    if (searched) {
      const auto tv = r.answer(r.search(q, ArcKind::Arc, SearchMode::MinComplete), s);
      compare(s, name, q, "t", tv);
      tcell = str(tv);
    } else {
      tcell = known(name, q, "t");
    }
    t.rows.push_back({std::to_string(q), std::to_string(b2), str(b3), std::to_string(prop), tcell, s.text()});
    st.push_back(s);
  }
  return r.finish(t, st);
}

int cmd_table4(Runner& r) {
  Table t{"table4", {"q", "t0", "t_v", "t", "status"}, {}};
  std::vector<Status> st;
  for (auto q : r.qs("5,7,8,9,11")) {
    if (q < 5) throw std::invalid_argument("table4 needs q >= 5");
    Status s;
    const auto t0 = lower_tv(q);
    compare(s, "table4", q, "t0", t0);
    const auto tv = r.answer(r.search(q, ArcKind::Veronesian, SearchMode::MinComplete), s);
    compare(s, "table4", q, "t_v", tv);
    const auto tc = r.answer(r.search(q, ArcKind::Arc, SearchMode::MinComplete), s);
    compare(s, "table4", q, "t", tc);
    t.rows.push_back({std::to_string(q), std::to_string(t0), str(tv), str(tc), s.text()});
    st.push_back(s);
  }
  return r.finish(t, st);
}

int cmd_table5(Runner& r) {
  Table t{"table5", {"q", "t1", "t2", "t_g", "status"}, {}};
  std::vector<Status> st;
  for (auto q : r.qs("5,7,8,9,11")) {
    if (q < 5) throw std::invalid_argument("table5 needs q >= 5");
    Status s;
    const auto g = lower_tg(q);
    compare(s, "table5", q, "t1", g.t1);
    compare(s, "table5", q, "t2", g.t2);
    const auto tg = r.answer(r.search(q, ArcKind::Generalized, SearchMode::MinComplete), s);
    compare(s, "table5", q, "t_g", tg);
    t.rows.push_back({std::to_string(q), std::to_string(g.t1), std::to_string(g.t2), str(tg), s.text()});
    st.push_back(s);
  }
  return r.finish(t, st);
}

int cmd_table6(Runner& r) {
  Table t{"table6", {"q", "t1", "t2", "status"}, {}};
  std::vector<Status> st;
  for (auto q : r.qs("13..31")) {
    if (q < 5) throw std::invalid_argument("table6 needs q >= 5");
    Status s;
    const auto g = lower_tg(q);
    compare(s, "table6", q, "t1", g.t1);
    compare(s, "table6", q, "t2", g.t2);
    t.rows.push_back({std::to_string(q), std::to_string(g.t1), std::to_string(g.t2), s.text()});
    st.push_back(s);
  }
  return r.finish(t, st);
}

int cmd_bounds(Runner& r) {
  if (r.cfg().q.empty() && r.cfg().q_range.empty()) throw std::invalid_argument("bounds needs --q or --q-range");
  Table t{"bounds",
          {"q", "ball_sqrt2", "ball_sqrt3", "prop", "t0", "t1", "t2", "tg_min", "upper_mg", "upper_mg_source",
           "status"},
          {}};
  std::vector<Status> st;
  json reports = json::array();
  for (auto q : r.qs("")) {
    const BoundReport b = full_report(q);
    Status s;
    s.mismatches = b.inconsistencies;
    s.flags = b.flagged;
    t.rows.push_back({std::to_string(q), std::to_string(b.lower_t_ball_sqrt2), str(b.lower_t_ball_sqrt3),
                      std::to_string(b.lower_t_prop), str(b.lower_tv_t0), str(b.lower_tg_t1), str(b.lower_tg_t2),
                      str(b.lower_tg_min), b.upper_mg ? std::to_string(b.upper_mg->value) : "-",
                      b.upper_mg ? b.upper_mg->source : "", s.text()});
    st.push_back(s);
    reports.push_back(to_json(b));
  }
  if (r.cfg().format == "json") {
    // Full reports carry more than the flat columns.
    if (!r.emit_raw(json{{"table", "bounds"}, {"reports", reports}}.dump(2) + "\n")) return kExitUsage;
    return r.exit_code(st);
  }
  return r.finish(t, st);
}

int cmd_search(Runner& r, std::ostream& out) {
  const ArcKind kind = parse_arc_kind(r.cfg().kind);
  const SearchMode mode = parse_search_mode(r.cfg().mode);
  if (r.cfg().q.empty() && r.cfg().q_range.empty()) throw std::invalid_argument("search needs --q");
  bool budget = false;
  std::vector<std::string> lines;
  json summary = json::array();
  for (auto q : r.qs("")) {
    SearchConfig sc;
    sc.q = q;
    sc.kind = kind;
    sc.mode = mode;
    const SearchResult res = r.search(q, kind, mode);
    budget = budget || !res.exhaustive;
    lines.push_back(csv_row(sc, res));
    summary.push_back(json{{"q", q},
                           {"kind", to_string(kind)},
                           {"mode", to_string(mode)},
                           {"answer", res.answer ? json(*res.answer) : json(nullptr)},
                           {"nodes", res.nodes_explored},
                           {"exhaustive", res.exhaustive},
                           {"wall_time", res.wall_seconds},
                           {"meta", res.meta},
                           {"witnesses", res.witnesses.size()}});
  }
  if (r.cfg().format == "json") {
    out << summary.dump(2) << "\n";
  } else {
    out << csv_header() << "\n";
    for (const auto& l : lines) out << l << "\n";
  }
  const json bundle_summary{{"runs", summary}};
  if (!r.cfg().out.empty()) {
    write_bundle(r.cfg().out, r.certs(), bundle_summary);
  } else {
    r.write_certs("search_" + r.cfg().kind + "_" + to_string(mode) + ".json", bundle_summary);
  }
  return budget ? kExitBudget : kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.paths.empty()) throw std::invalid_argument("verify needs at least one certificate file");
  bool failed = false;
  for (const auto& path : cfg.paths) {
    std::vector<ArcCertificate> certs;
    try {
      certs = read_certificates(path);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    for (std::size_t i = 0; i < certs.size(); ++i) {
      const VerificationReport rep = verify_certificate(certs[i]);
      out << path << "#" << i << " q=" << certs[i].field.q << " " << to_string(certs[i].kind) << " k=" << rep.k
          << " " << to_string(certs[i].claim) << ": " << (rep.passed ? "PASS" : "FAIL");
      if (rep.recomputed_three_secants) out << " T=" << *rep.recomputed_three_secants;
      for (const auto& p : rep.problems) out << " [" << p << "]";
      if (!rep.note.empty()) out << " (" << rep.note << ")";
      out << "\n";
      failed = failed || !rep.passed;
    }
  }
  return failed ? kExitMismatch : kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool search_opts) {
  sub->add_option("--q", cfg.q, "q value(s): 7, 2,3,4 or 2..11");
  sub->add_option("--q-range", cfg.q_range, "range A..B (prime powers only)");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json", "text"}));
  sub->add_option("--out", cfg.out, "output path");
  if (!search_opts) return;
  sub->add_option("--certs", cfg.certs, std::string("certificate directory (default $") + kCertDirEnv + ")");
  sub->add_option("--workers", cfg.workers, "search worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--node-budget", cfg.node_budget, "stop after this many search nodes");
  sub->add_option("--time-budget", cfg.time_budget, "stop after this many seconds");
  sub->add_flag("--exhaustive", cfg.exhaustive, "ignore bound-derived floors and ceilings");
  sub->add_flag("--permutation-reduction", cfg.permutation_reduction, "quotient by frame permutations");
}

}  // namespace

std::vector<std::uint32_t> parse_q_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  auto number = [](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos || s.size() > 9)
      throw std::invalid_argument("bad q value '" + std::string(s) + "'");
    return static_cast<std::uint32_t>(std::stoul(std::string(s)));
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      const auto q = number(item);
      if (!prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
      out.push_back(q);
    } else {
      const auto a = number(item.substr(0, dots));
      const auto b = number(item.substr(dots + 2));
      if (a > b) throw std::invalid_argument("empty range '" + std::string(item) + "'");
      for (auto q = a; q <= b; ++q)
        if (prime_power(q)) out.push_back(q);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("no prime powers in '" + std::string(text) + "'");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized, Veronesian and classical arcs in PG(2,q)", "genarcs"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::map<std::string, CLI::App*> tables;
  for (const char* name : {"table1", "table2", "table3", "table4", "table5", "table6"}) {
    auto* sub = app.add_subcommand(name, std::string("reproduce ") + name);
    add_common(sub, cfg, std::string(name) != "table3" && std::string(name) != "table6");
    tables[name] = sub;
  }
  auto* search = app.add_subcommand("search", "run a search and write certificates");
  add_common(search, cfg, true);
  search->add_option("--kind", cfg.kind, "arc, veronesian or generalized")
      ->check(CLI::IsMember({"arc", "veronesian", "generalized"}));
  search->add_option("--mode", cfg.mode, "min-complete or max")->check(CLI::IsMember({"min-complete", "max"}));
  auto* verify = app.add_subcommand("verify", "re-check certificate files");
  verify->add_option("paths", cfg.paths, "certificate or bundle files")->required();
  auto* bounds = app.add_subcommand("bounds", "evaluate every bound for the given q");
  add_common(bounds, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Runner runner(cfg, out, err);
    for (const auto& [name, sub] : tables) {
      if (!sub->parsed()) continue;
      if (name == "table1") return cmd_table1(runner);
      if (name == "table2" || name == "table3") return cmd_table23(runner, name);
      if (name == "table4") return cmd_table4(runner);
      if (name == "table5") return cmd_table5(runner);
      return cmd_table6(runner);
    }
    if (search->parsed()) return cmd_search(runner, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (bounds->parsed()) return cmd_bounds(runner);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace genarcs::cli

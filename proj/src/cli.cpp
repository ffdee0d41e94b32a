#include "friezekit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "friezekit/ensemble.hpp"
#include "friezekit/enumerate.hpp"
#include "friezekit/errors.hpp"
#include "friezekit/frieze.hpp"
#include "friezekit/render.hpp"
#include "friezekit/serialize.hpp"
#include "friezekit/yfrieze.hpp"

namespace friezekit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Rational> parse_values(const std::string& text, const std::string& flag) {
  std::vector<Rational> values;
  for (const auto& token : split(text, ',')) {
    auto v = Rational::parse(token);
    if (!v) throw UsageError(flag + ": \"" + token + "\" is not a reduced rational");
    values.push_back(std::move(*v));
  }
  if (values.empty()) throw UsageError(flag + " needs at least one value");
  return values;
}

std::vector<Step> parse_steps(const std::string& text) {
  std::vector<Step> steps;
  if (text.empty()) return steps;
  for (const auto& token : split(text, ',')) {
    if (token == "SW") {
      steps.push_back(Step::south_west);
    } else if (token == "SE") {
      steps.push_back(Step::south_east);
    } else {
      throw UsageError("--dirs: expected SW or SE, got \"" + token + "\"");
    }
  }
  return steps;
}

TaggedGrid load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return deserialize(text);
}

std::string join(const Diagonal& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s;
}

Diagonal integer_diagonal(const YFrieze& y) {
  Diagonal d;
  for (const auto& x : y.diagonal()) d.push_back(x.to_int64().value_or(0));
  return d;
}

ordered_json grid_json(const PatternGrid& g, PatternKind kind) {
  return ordered_json::parse(serialize(g, kind));
}

ordered_json strip_json(const OpenStrip& strip) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : strip.rows) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(std::move(r));
  }
  ordered_json doc;
  doc["kind"] = "open-strip";
  doc["period"] = strip.period();
  doc["rows"] = std::move(rows);
  return doc;
}

std::int64_t bound_or_default(std::optional<std::int64_t> flag, int width) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kBoundEnv)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kBoundEnv) + " is not an integer: \"" + env + "\"");
  }
  return default_bound(width);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and enumeration of frieze and Y-frieze patterns", "friezekit"};
  app.require_subcommand(1);

  // knit-vertical
  auto* kv = app.add_subcommand("knit-vertical", "Knit a Y-frieze downward from a cyclic first row");
  std::string kv_row;
  std::optional<int> kv_period;
  int kv_max_rows = 64;
  std::string kv_out = "json";
  kv->add_option("--first-row", kv_row, "Comma-separated rationals")->required();
  kv->add_option("--period", kv_period, "Period of the first row (default: number of values)");
  kv->add_option("--max-rows", kv_max_rows, "Stop after this many rows")->check(CLI::PositiveNumber);
  kv->add_option("--out", kv_out)->check(CLI::IsMember({"json", "ascii"}));

  // knit-horizontal
  auto* kh = app.add_subcommand("knit-horizontal", "Knit a closed Y-frieze from a zig-zag");
  int kh_width = 0;
  std::string kh_values;
  std::string kh_dirs;
  long kh_start = 0;
  std::string kh_out = "json";
  kh->add_option("--width", kh_width)->required()->check(CLI::PositiveNumber);
  kh->add_option("--values", kh_values, "Comma-separated positive rationals, rows 1..n")->required();
  kh->add_option("--dirs", kh_dirs, "Comma-separated SW/SE steps (default: all SE)");
  kh->add_option("--start-column", kh_start, "Column of the row-1 value");
  kh->add_option("--out", kh_out)->check(CLI::IsMember({"json", "ascii"}));

  // verify / glide-check / render
  auto* vf = app.add_subcommand("verify", "Check every diamond and the boundary rows of a pattern file");
  std::string vf_file;
  std::string vf_out = "text";
  vf->add_option("file", vf_file)->required();
  vf->add_option("--out", vf_out)->check(CLI::IsMember({"text", "json"}));

  auto* gc = app.add_subcommand("glide-check", "Check b(i,j) = b(j,i+n+3) on a pattern file");
  std::string gc_file;
  gc->add_option("file", gc_file)->required();

  auto* rd = app.add_subcommand("render", "Draw a pattern file as staggered text");
  std::string rd_file;
  int rd_columns = 0;
  rd->add_option("file", rd_file)->required();
  rd->add_option("--columns", rd_columns, "Entries per row (default: one period)")
      ->check(CLI::NonNegativeNumber);

  // enumerate-friezes
  auto* ef = app.add_subcommand("enumerate-friezes", "All arithmetic friezes of a width");
  int ef_width = 0;
  std::string ef_out = "json";
  ef->add_option("--width", ef_width)->required()->check(CLI::Range(1, kDefaultMaxFriezeWidth));
  ef->add_option("--out", ef_out)->check(CLI::IsMember({"json", "count", "ascii"}));

  // enumerate-yfriezes
  auto* ey = app.add_subcommand("enumerate-yfriezes", "Bounded search for arithmetic Y-friezes");
  int ey_width = 0;
  std::optional<std::int64_t> ey_bound;
  unsigned ey_jobs = 1;
  std::string ey_out = "json";
  ey->add_option("--width", ey_width)->required()->check(CLI::PositiveNumber);
  ey->add_option("--bound", ey_bound, "Largest allowed entry");
  ey->add_option("--jobs", ey_jobs, "Worker threads (0: one per core)");
  ey->add_option("--out", ey_out)->check(CLI::IsMember({"json", "diagonals", "count"}));

  // pmap
  auto* pm = app.add_subcommand("pmap", "Apply p_n to arithmetic friezes");
  int pm_width = 0;
  std::optional<std::size_t> pm_index;
  bool pm_all = false;
  std::string pm_out = "json";
  pm->add_option("--width", pm_width)->required()->check(CLI::Range(1, kDefaultMaxFriezeWidth));
  auto* pm_index_opt = pm->add_option("--frieze-index", pm_index, "Index into enumerate-friezes order");
  pm->add_flag("--all", pm_all, "Map every frieze (default)")->excludes(pm_index_opt);
  pm->add_option("--out", pm_out)->check(CLI::IsMember({"json", "diagonals", "ascii"}));

  // surjectivity
  auto* sj = app.add_subcommand("surjectivity", "Compare image(p_n) with the bounded search");
  int sj_width = 0;
  std::optional<std::int64_t> sj_bound;
  unsigned sj_jobs = 1;
  std::string sj_out;
  sj->add_option("--width", sj_width)->required()->check(CLI::Range(1, kDefaultMaxFriezeWidth));
  sj->add_option("--bound", sj_bound);
  sj->add_option("--jobs", sj_jobs);
  sj->add_option("--out", sj_out, "Report file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (kv->parsed()) {
      auto values = parse_values(kv_row, "--first-row");
      const auto period = static_cast<std::size_t>(kv_period.value_or(static_cast<int>(values.size())));
      if (period < 1 || period > values.size()) {
        throw UsageError("--period must lie in 1.." + std::to_string(values.size()));
      }
      for (std::size_t k = period; k < values.size(); ++k) {
        if (values[k] != values[k % period]) {
          throw UsageError("--first-row is not periodic with period " + std::to_string(period));
        }
      }
      values.resize(period);
      const VerticalKnit knit = y_knit_vertical(values, kv_max_rows);
      if (const auto* blocked = std::get_if<BlockedKnit>(&knit)) {
        err << "knit blocked: row " << blocked->row << ", column " << blocked->column
            << " lies below a -1\n";
        return kDomain;
      }
      if (const auto* y = std::get_if<YFrieze>(&knit)) {
        out << (kv_out == "ascii" ? render_ascii(y->grid())
                                  : serialize(y->grid(), PatternKind::yfrieze) + "\n");
      } else {
        const auto& strip = std::get<OpenStrip>(knit);
        err << "no closure within " << kv_max_rows << " rows\n";
        out << (kv_out == "ascii" ? render_ascii(strip) : strip_json(strip).dump() + "\n");
      }
      return kOk;
    }

    if (kh->parsed()) {
      ZigZag z;
      z.values = parse_values(kh_values, "--values");
      if (z.values.size() != static_cast<std::size_t>(kh_width)) {
        throw UsageError("--values must hold --width = " + std::to_string(kh_width) + " entries");
      }
      z.directions = kh_dirs.empty()
                         ? std::vector<Step>(static_cast<std::size_t>(kh_width - 1), Step::south_east)
                         : parse_steps(kh_dirs);
      if (z.directions.size() != static_cast<std::size_t>(kh_width - 1)) {
        throw UsageError("--dirs must hold width-1 = " + std::to_string(kh_width - 1) + " steps");
      }
      z.start_column = kh_start;
      const YFrieze y = y_knit_horizontal(z);
      out << (kh_out == "ascii" ? render_ascii(y.grid())
                                : serialize(y.grid(), PatternKind::yfrieze) + "\n");
      return kOk;
    }

    if (vf->parsed()) {
      const TaggedGrid tg = load(vf_file);
      ordered_json doc;
      doc["kind"] = std::string(to_string(tg.kind));
      doc["width"] = tg.grid.width();
      bool valid = false;
      if (tg.kind == PatternKind::yfrieze) {
        const YVerifyReport report = verify_yfrieze(tg.grid);
        valid = report.valid() && report.detected_width == tg.grid.width();
        doc["valid"] = valid;
        doc["top_row_zero"] = report.top_row_zero;
        doc["bottom_row_zero"] = report.bottom_row_zero;
        doc["detected_width"] =
            report.detected_width ? ordered_json(*report.detected_width) : ordered_json(nullptr);
        doc["unforced_minus_one_columns"] = report.unforced_minus_one_columns;
        ordered_json violations = ordered_json::array();
        for (const auto& v : report.violations) {
          violations.push_back({{"row", v.row}, {"column", v.column}});
        }
        doc["violations"] = std::move(violations);
      } else {
        try {
          Frieze f(tg.grid);
          valid = true;
          doc["valid"] = true;
        } catch (const DomainError& e) {
          doc["valid"] = false;
          doc["error"] = e.what();
        }
      }
      if (vf_out == "json") {
        out << doc.dump() << "\n";
      } else {
        out << (valid ? "valid" : "invalid") << " " << to_string(tg.kind) << " of width "
            << tg.grid.width() << "\n";
        if (doc.contains("violations")) {
          for (const auto& v : doc["violations"]) {
            out << "  diamond at row " << v["row"] << ", column " << v["column"] << " fails\n";
          }
        }
        if (doc.contains("error")) out << "  " << doc["error"].get<std::string>() << "\n";
      }
      return valid ? kOk : kCheckFailed;
    }

    if (gc->parsed()) {
      const bool ok = check_glide_symmetry(load(gc_file).grid);
      out << (ok ? "true" : "false") << "\n";
      return ok ? kOk : kCheckFailed;
    }

    if (rd->parsed()) {
      out << render_ascii(load(rd_file).grid, rd_columns);
      return kOk;
    }

    if (ef->parsed()) {
      const auto friezes = enumerate_friezes(ef_width);
      if (ef_out == "count") {
        out << friezes.size() << "\n";
      } else if (ef_out == "ascii") {
        for (std::size_t i = 0; i < friezes.size(); ++i) {
          if (i) out << "\n";
          out << render_ascii(friezes[i].grid());
        }
      } else {
        ordered_json doc = ordered_json::array();
        for (const auto& f : friezes) doc.push_back(grid_json(f.grid(), PatternKind::frieze));
        out << doc.dump() << "\n";
      }
      return kOk;
    }

    if (ey->parsed()) {
      SearchConfig cfg{ey_width, bound_or_default(ey_bound, ey_width), ey_jobs};
      if (ey_out == "json") {
        const auto patterns = enumerate_arithmetic_yfriezes(cfg);
        ordered_json doc;
        doc["width"] = cfg.width;
        doc["complete_up_to_bound"] = cfg.bound;
        doc["count"] = patterns.size();
        ordered_json diagonals = ordered_json::array();
        ordered_json grids = ordered_json::array();
        for (const auto& y : patterns) {
          diagonals.push_back(integer_diagonal(y));
          grids.push_back(grid_json(y.grid(), PatternKind::yfrieze));
        }
        doc["diagonals"] = std::move(diagonals);
        doc["patterns"] = std::move(grids);
        out << doc.dump() << "\n";
      } else {
        SearchStats stats;
        const auto diagonals = enumerate_arithmetic_diagonals(cfg, &stats);
        err << "complete_up_to_bound: " << cfg.bound << " (" << stats.nodes << " nodes)\n";
        if (ey_out == "count") {
          out << diagonals.size() << "\n";
        } else {
          for (const auto& d : diagonals) out << join(d) << "\n";
        }
      }
      return kOk;
    }

    if (pm->parsed()) {
      const auto friezes = enumerate_friezes(pm_width);
      std::vector<std::size_t> picked;
      if (pm_index) {
        if (*pm_index >= friezes.size()) {
          throw UsageError("--frieze-index must be below " + std::to_string(friezes.size()));
        }
        picked.push_back(*pm_index);
      } else {
        for (std::size_t i = 0; i < friezes.size(); ++i) picked.push_back(i);
      }
      ordered_json doc = ordered_json::array();
      for (std::size_t n = 0; n < picked.size(); ++n) {
        const YFrieze y = p_map(friezes[picked[n]]);
        if (pm_out == "diagonals") {
          out << join(integer_diagonal(y)) << "\n";
        } else if (pm_out == "ascii") {
          if (n) out << "\n";
          out << render_ascii(y.grid());
        } else {
          doc.push_back(grid_json(y.grid(), PatternKind::yfrieze));
        }
      }
      if (pm_out == "json") out << (pm_index ? doc.front() : doc).dump() << "\n";
      return kOk;
    }

    if (sj->parsed()) {
      const std::int64_t bound = bound_or_default(sj_bound, sj_width);
      const SurjectivityReport report = surjectivity_report(sj_width, bound, sj_jobs);
      const std::string text = to_json(report) + "\n";
      if (sj_out.empty()) {
        out << text;
      } else {
        std::ofstream file(sj_out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + sj_out);
        file << text;
        out << "width " << report.width << ": image " << report.image_size << ", enumerated "
            << report.enumerated_size << ", missing " << report.missing.size()
            << ", bound escapes " << report.bound_escapes.size() << "\n";
      }
      if (!report.conjecture_consistent()) {
        err << "surjectivity: " << report.missing.size()
            << " enumerated pattern(s) outside the image of p_" << report.width << "\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kTheorem;
  } catch (const KnitBlocked& e) {
    err << "knit blocked: " << e.what() << "\n";
    return kDomain;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const IndexError& e) {
    err << "index error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace friezekit::cli

#include "rtp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "rtp/errors.hpp"
#include "rtp/riordan.hpp"
#include "rtp/sequences.hpp"
#include "rtp/totalpos.hpp"

namespace rtp::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kDefaultWindow = 10;

enum class Format { plain, csv, json };

struct Options {
  std::string name;
  std::string z;
  std::string a;
  std::string tail = "zero";
  std::optional<std::size_t> rows;
  std::string order;
  std::string params;
  std::string seq;
  std::size_t count = 0;
  std::size_t window = kDefaultWindow;
  std::string format = "plain";
  bool force = false;
  std::string subject;
};

Format parse_format(const std::string& text) {
  if (text == "plain") return Format::plain;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ArgumentError("unknown format '" + text + "'");
}

std::vector<Rational> parse_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const ArgumentError&) {
      throw ArgumentError(std::string("bad value '") + item + "' in " + flag);
    }
  }
  return out;
}

json scalar(const Rational& x) { return x.to_string(); }

json scalars(std::span<const Rational> xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(scalar(x));
  return arr;
}

json indices(std::span<const std::size_t> xs) {
  json arr = json::array();
  for (auto x : xs) arr.push_back(x);
  return arr;
}

json sequence_json(const seq::SequenceSpec& s) {
  return json{{"prefix", scalars(s.prefix())}, {"tail", seq::to_string(s.tail())}};
}

json witness_json(const tp::MinorWitness& w) {
  return json{{"rows", indices(w.rows)}, {"cols", indices(w.cols)}, {"value", scalar(w.value)}};
}

json report_json(const tp::TPReport& r) {
  json out{{"holds", r.holds},
           {"order", r.order.to_string()},
           {"window", std::to_string(r.window_rows) + "x" + std::to_string(r.window_cols)}};
  if (r.witness) out["witness"] = witness_json(*r.witness);
  return out;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",/ \"") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string flat_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? " " : "") + flat_value(v[i]);
    return joined;
  }
  return v.dump();
}

// "key: value" (plain) or "key,value" (csv) lines, nested keys joined by '.'.
void flatten(const json& obj, const std::string& prefix, Format format, std::ostream& out) {
  for (const auto& [key, value] : obj.items()) {
    const std::string full = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, full, format, out);
    } else if (format == Format::csv) {
      out << csv_cell(full) << ',' << csv_cell(flat_value(value)) << '\n';
    } else {
      out << full << ": " << flat_value(value) << '\n';
    }
  }
}

void print_rows(const std::vector<std::vector<Rational>>& rows, Format format, std::ostream& out) {
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << (format == Format::csv ? "," : " ");
      out << (format == Format::csv ? csv_cell(row[k].to_string()) : row[k].to_string());
    }
    out << '\n';
  }
}

json document(const std::string& command, json parameters, json result) {
  json doc{{"schema", kSchemaVersion}, {"command", command}};
  doc["parameters"] = std::move(parameters);
  doc["result"] = std::move(result);
  return doc;
}

// --name, or --z/--a/--tail.
struct ResolvedSpec {
  riordan::RiordanSpec spec;
  json parameters;
};

ResolvedSpec resolve_spec(const Options& o) {
  const bool custom = !o.z.empty() || !o.a.empty();
  if (!o.name.empty() && custom) throw ArgumentError("give either --name or --z/--a, not both");
  if (!o.name.empty()) {
    const auto name = riordan::parse_named_triangle(o.name);
    auto spec = riordan::named_triangle(name);
    json params{{"name", riordan::to_string(name)}, {"z", sequence_json(spec.z_seq)}, {"a", sequence_json(spec.a_seq)}};
    return {std::move(spec), std::move(params)};
  }
  if (o.a.empty()) throw ArgumentError("need --name or --a (with optional --z)");
  const auto tail = seq::parse_tail(o.tail);
  riordan::RiordanSpec spec(seq::SequenceSpec(parse_list(o.a, "--a"), tail),
                            seq::SequenceSpec(parse_list(o.z, "--z"), o.z.empty() ? seq::Tail::zero : tail));
  json params{{"z", sequence_json(spec.z_seq)}, {"a", sequence_json(spec.a_seq)}};
  return {std::move(spec), std::move(params)};
}

riordan::RecursiveMatrixParams recursive_params(const Options& o) {
  const auto v = parse_list(o.params, "--params");
  if (v.size() != 4) throw ArgumentError("--params expects a,b,s,t");
  return riordan::RecursiveMatrixParams(v[0], v[1], v[2], v[3]);
}

json recursive_params_json(const riordan::RecursiveMatrixParams& p) {
  return json{{"a", scalar(p.a)}, {"b", scalar(p.b)}, {"s", scalar(p.s)}, {"t", scalar(p.t)}};
}

tp::JacobiParams jacobi_params(const Options& o) {
  const auto v = parse_list(o.params, "--params");
  if (v.size() == 4) return tp::JacobiParams(v[0], v[1], Rational(1), v[2], v[3]);
  if (v.size() == 5) return tp::JacobiParams(v[0], v[1], v[2], v[3], v[4]);
  throw ArgumentError("--params expects a,b,s,t or a,b,r,s,t");
}

std::size_t window_size(const Options& o) {
  const std::size_t n = o.rows.value_or(o.window);
  if (n == 0) throw ArgumentError("window must be at least 1");
  return n;
}

void emit(const json& doc, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
    return;
  }
  flatten(doc, "", format, out);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (!o.rows || *o.rows == 0) throw ArgumentError("--rows must be at least 1");
  auto resolved = resolve_spec(o);
  const auto tri = riordan::build_triangle(resolved.spec, *o.rows);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t n = 0; n < tri.n_rows(); ++n) rows.emplace_back(tri.row(n).begin(), tri.row(n).end());

  if (format == Format::json) {
    json params = resolved.parameters;
    params["rows"] = *o.rows;
    json table = json::array();
    for (const auto& row : rows) table.push_back(scalars(row));
    out << document("gen", std::move(params), json{{"rows", std::move(table)}}).dump(2) << '\n';
  } else {
    print_rows(rows, format, out);
  }
  return kHolds;
}

int cmd_catalan_like(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.count == 0) throw ArgumentError("--count must be at least 1");
  const auto p = recursive_params(o);
  const auto numbers = riordan::catalan_like_numbers(p, o.count);
  if (format == Format::json) {
    json params = recursive_params_json(p);
    params["count"] = o.count;
    out << document("catalan-like", std::move(params), json{{"numbers", scalars(numbers)}}).dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < numbers.size(); ++i) {
      if (i) out << (format == Format::csv ? "," : " ");
      out << (format == Format::csv ? csv_cell(numbers[i].to_string()) : numbers[i].to_string());
    }
    out << '\n';
  }
  return kHolds;
}

tp::Order order_or(const Options& o, tp::Order fallback) {
  return o.order.empty() ? fallback : tp::Order::parse(o.order);
}

int cmd_check(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const tp::ScanOptions scan{12, o.force};
  json params{{"subject", o.subject}};
  json result;
  bool holds = false;

  if (o.subject == "tp" || o.subject == "tp2") {
    auto resolved = resolve_spec(o);
    const auto order = o.subject == "tp2" ? tp::Order::of(2) : order_or(o, tp::Order::all());
    const std::size_t n = window_size(o);
    const auto report = tp::triangle_tp_check(resolved.spec, order, n, scan);
    params.update(resolved.parameters);
    params["order"] = order.to_string();
    params["window"] = n;
    holds = report.triangle.holds;
    result = report_json(report.triangle);
    result["coefficient_matrix"] = report_json(report.coefficient);
  } else if (o.subject == "jacobi-tp" || o.subject == "jacobi-tp2") {
    const auto p = jacobi_params(o);
    const bool full = o.subject == "jacobi-tp";
    const std::size_t n = window_size(o);
    params["a"] = scalar(p.a);
    params["b"] = scalar(p.b);
    params["r"] = scalar(p.r);
    params["s"] = scalar(p.s);
    params["t"] = scalar(p.t);
    params["window"] = n;
    holds = full ? tp::jacobi_tp_criterion(p) : tp::jacobi_tp2_criterion(p);
    result["holds"] = holds;
    result["criterion"] = full ? "s^2 >= 4rt and a(s + sqrt(s^2 - 4rt))/2 >= br" : "as >= br and s^2 >= rt";
    result["window_check"] = report_json(tp::is_tp_r(tp::jacobi_matrix(p, n), full ? tp::Order::all() : tp::Order::of(2), scan));
  } else if (o.subject == "logconvex-col0") {
    auto resolved = resolve_spec(o);
    const std::size_t n = window_size(o);
    params.update(resolved.parameters);
    params["rows"] = n;
    const auto col0 = riordan::build_triangle(resolved.spec, n).column(0);
    const auto violation = seq::find_log_convexity_violation(col0);
    holds = !violation;
    result["holds"] = holds;
    result["column0"] = scalars(col0);
    if (violation) result["witness"] = json{{"i", violation->i}, {"j", violation->j}};
  } else if (o.subject == "logconcave-rows") {
    auto resolved = resolve_spec(o);
    const std::size_t n = window_size(o);
    params.update(resolved.parameters);
    params["rows"] = n;
    const auto tri = riordan::build_triangle(resolved.spec, n);
    const auto report = tp::rows_logconcave_check(resolved.spec, n);
    holds = report.holds;
    result["holds"] = holds;
    if (report.first_failing_row) {
      const auto row = tri.row(*report.first_failing_row);
      const auto violation = seq::find_log_concavity_violation(row);
      result["witness"] = json{{"row", *report.first_failing_row},
                               {"entries", scalars(row)},
                               {"i", violation->i},
                               {"j", violation->j}};
    }
  } else if (o.subject == "pf") {
    if (o.seq.empty()) throw ArgumentError("check pf needs --seq");
    const auto values = parse_list(o.seq, "--seq");
    const auto tail = seq::parse_tail(o.tail);
    params["seq"] = scalars(values);
    params["tail"] = seq::to_string(tail);
    if (tail == seq::Tail::zero && o.order.empty()) {
      const auto verdict = seq::is_pf_finite(values);
      holds = verdict.holds;
      result["holds"] = holds;
      result["method"] = "real-roots";
      if (verdict.roots) {
        result["witness"] = json{{"degree", verdict.roots->degree}, {"distinct_real_roots", verdict.roots->real_roots}};
      }
    } else {
      const seq::SequenceSpec spec(values, tail);
      const std::size_t n = window_size(o);
      const auto order = order_or(o, tp::Order::of(3));
      const std::size_t r = order.is_all() ? n : order.value();
      const auto verdict = seq::is_pf_r_window(spec, r, n);
      params["order"] = std::to_string(r);
      params["window"] = n;
      holds = verdict.holds;
      result["holds"] = holds;
      result["method"] = "toeplitz-window";
      result["verified_to_window"] = n;
      if (verdict.minor) result["witness"] = witness_json(*verdict.minor);
    }
  } else if (o.subject == "hankel") {
    const auto p = recursive_params(o);
    const std::size_t n = window_size(o);
    const auto order = order_or(o, tp::Order::all());
    params.update(recursive_params_json(p));
    params["order"] = order.to_string();
    params["window"] = n;
    const auto numbers = riordan::catalan_like_numbers(p, 2 * n - 1);
    const tp::HankelWindow hankel(numbers);
    const auto report = tp::is_tp_r(hankel.matrix(), order, scan);
    holds = report.holds;
    result = report_json(report);
    result["hankel_determinant"] = scalar(tp::aigner_decomposition_check(p, n).hankel_determinant);
    for (auto [key, diag] : {std::pair{"aigner_powers_of_t", tp::AignerDiagonal::powers_of_t},
                             std::pair{"aigner_stieltjes", tp::AignerDiagonal::stieltjes}}) {
      const auto aigner = tp::aigner_decomposition_check(p, n, diag);
      json entry{{"holds", aigner.holds}, {"diagonal_determinant", scalar(aigner.diagonal_determinant)}};
      if (aigner.mismatch) {
        entry["mismatch"] = json{{"row", aigner.mismatch->row},
                                 {"col", aigner.mismatch->col},
                                 {"hankel", scalar(aigner.mismatch->hankel)},
                                 {"product", scalar(aigner.mismatch->product)}};
      }
      result[key] = std::move(entry);
    }
  } else {
    throw ArgumentError("unknown check subject '" + o.subject + "'");
  }

  emit(document("check", std::move(params), std::move(result)), format, out);
  return holds ? kHolds : kFails;
}

void add_spec_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--name", o.name, "Named triangle: pascal, catalan, motzkin, ballot, schroder-large, schroder-little");
  cmd->add_option("--z", o.z, "Z-sequence prefix, comma separated");
  cmd->add_option("--a", o.a, "A-sequence prefix, comma separated");
  cmd->add_option("--tail", o.tail, "Tail rule for custom sequences: zero or repeat");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Riordan arrays and total positivity with exact arithmetic", "rtp"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Print a Riordan triangle");
  add_spec_options(gen, o);
  gen->add_option("--rows", o.rows, "Number of rows")->required();
  gen->add_option("--format", o.format, "plain, csv, or json");

  auto* check = app.add_subcommand("check", "Check a positivity property; exit 0 holds, 1 fails, 2 usage");
  check->add_option("subject", o.subject,
                    "tp, tp2, jacobi-tp, jacobi-tp2, logconvex-col0, logconcave-rows, pf, hankel")
      ->required();
  add_spec_options(check, o);
  check->add_option("--rows", o.rows, "Window size (alias of --window)");
  check->add_option("--window", o.window, "Leading principal window size (default 10)");
  check->add_option("--order", o.order, "Minor order k or 'all'");
  check->add_option("--params", o.params, "a,b,s,t or a,b,r,s,t");
  check->add_option("--seq", o.seq, "Finite sequence, comma separated");
  check->add_flag("--force", o.force, "Lift the 12x12 cap on full minor enumeration");
  check->add_option("--format", o.format, "plain, csv, or json");

  auto* catalan = app.add_subcommand("catalan-like", "Print C_0..C_{count-1}(a,b;s,t)");
  catalan->add_option("--params", o.params, "a,b,s,t")->required();
  catalan->add_option("--count", o.count, "How many terms")->required();
  catalan->add_option("--format", o.format, "plain, csv, or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*check) return cmd_check(o, out);
    return cmd_catalan_like(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace rtp::cli

// Copyright 2026 The inverf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "inverf/asym.hpp"
#include "inverf/carlitz.hpp"
#include "inverf/coeffs.hpp"
#include "inverf/exact.hpp"
#include "inverf/serialize.hpp"

namespace inverf::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kTaylorOrder = 9;
constexpr std::size_t kDnRatioMax = 199;

struct ReferenceRow {
  double x;
  double inverf;
  double approx;
  std::size_t tail_end;
};

constexpr ReferenceRow kReference[] = {
    {0.7, 0.732869, 0.732751, 6},     {0.8, 0.906194, 0.905545, 7},
    {0.9, 1.16309, 1.16274, 11},      {0.99, 1.82139, 1.82121, 57},
    {0.999, 2.32675, 2.32676, 423},   {0.9999, 2.75106, 2.75105, 3685},
};

const DerivCoefficientTable& shared_table() {
  static const DerivCoefficientTable table = build_table(kDnRatioMax);
  return table;
}

// Column-oriented writer for both output formats. Cells are either numbers or
// verbatim strings; CSV keeps the header order.
class Sheet {
 public:
  explicit Sheet(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  Sheet& row() {
    rows_.emplace_back();
    return *this;
  }
  Sheet& num(double v) {
    rows_.back().push_back(Cell{format_double(v), Json(v), false});
    return *this;
  }
  Sheet& integer(std::size_t v) {
    rows_.back().push_back(Cell{std::to_string(v), Json(v), false});
    return *this;
  }
  Sheet& text(std::string v) {
    rows_.back().push_back(Cell{v, Json(v), true});
    return *this;
  }

  void write(Format format, std::ostream& out) const {
    if (format == Format::csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
      out << '\n';
      for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i].csv;
        out << '\n';
      }
      return;
    }
    Json doc = Json::array();
    for (const auto& r : rows_) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < r.size(); ++i) {
        const Json& v = r[i].json;
        // JSON has no infinities; non-finite numbers become strings.
        if (v.is_number_float() && !std::isfinite(v.get<double>())) {
          obj[columns_[i]] = r[i].csv;
        } else {
          obj[columns_[i]] = v;
        }
      }
      doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
  }

 private:
  struct Cell {
    std::string csv;
    Json json;
    bool is_text;
  };
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

double ratio_or_one(double x, double num, double den) { return x == 0.0 ? 1.0 : num / den; }

std::vector<double> stepped(long first, long last, double scale) {
  std::vector<double> xs;
  for (long i = first; i <= last; ++i) xs.push_back(static_cast<double>(i) / scale);
  return xs;
}

void figure_p10(Format format, std::ostream& out) {
  const IntPolynomial p10 = build_pn(10).back();
  const Rational fact10(factorial(10));
  const double log_fact10 = std::lgamma(11.0);
  Sheet sheet({"x", "exact_log_p10_over_10fact", "asymptotic_log_p10_over_10fact", "difference"});
  for (double x : p10_grid()) {
    const double exact = log_abs(Rational(p10.evaluate(Rational(x)) / fact10));
    const double approx = pn_asymptotic(x, 10).log_magnitude - log_fact10;
    sheet.row().num(x).num(exact).num(approx).num(approx - exact);
  }
  sheet.write(format, out);
}

void figure_dn_ratio(Format format, std::ostream& out) {
  const auto& table = shared_table();
  Sheet sheet({"n", "exact_dn_over_nfact", "asymptotic_dn_over_nfact", "ratio"});
  for (std::size_t n = 3; n <= kDnRatioMax; n += 2) {
    const double exact = taylor_coefficient(table, n);
    const double approx = dn_over_nfact_asym(n);
    sheet.row().integer(n).num(exact).num(approx).num(exact / approx);
  }
  sheet.write(format, out);
}

void figure_taylor_ratio(const std::vector<double>& grid, Format format, std::ostream& out) {
  const auto& table = shared_table();
  Sheet sheet({"x", "t9_over_inverf", "t9_r10_over_inverf", "t9_r20_over_inverf"});
  for (double x : grid) {
    const double exact = oracle_inverf(x);
    const double head = taylor_head(x, kTaylorOrder, table);
    const double r10 = tail_sum(x, kTaylorOrder, 10).value;
    const double r20 = tail_sum(x, kTaylorOrder, 20).value;
    sheet.row()
        .num(x)
        .num(ratio_or_one(x, head, exact))
        .num(ratio_or_one(x, head + r10, exact))
        .num(ratio_or_one(x, head + r20, exact));
  }
  sheet.write(format, out);
}

// Renders into a buffer first so that failed commands never leave partial files.
void emit(const std::string& body, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << body;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file: " + *path);
  file << body;
  file.flush();
  if (!file) throw IoError("failed writing output file: " + *path);
}

std::optional<std::size_t> parse_tail(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("--tail expects a non-negative integer or 'auto', got '" + text + "'");
  }
  return value;
}

constexpr const char* kFooter =
    "CSV columns (single header line):\n"
    "  coeffs: n,numerator,denominator,d_n,d_n_over_n_factorial\n"
    "  poly:   power,coefficient (nonzero coefficients only)\n"
    "  table:  x,reference_inverf,oracle_inverf,oracle_deviation,reference_approx,\n"
    "          approx,approx_deviation,N,printed_form_approx\n"
    "  figure p10: x,exact_log_p10_over_10fact,asymptotic_log_p10_over_10fact,difference\n"
    "  figure dn_ratio: n,exact_dn_over_nfact,asymptotic_dn_over_nfact,ratio\n"
    "  figure taylor_ratio[_zoom]: x,t9_over_inverf,t9_r10_over_inverf,t9_r20_over_inverf\n"
    "  eval:   x,value,method,terms_used,polish_iterations,residual\n"
    "Exit status: 0 ok, 2 usage, 3 domain, 4 I/O.";

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double oracle_inverf(double x) { return newton_oracle(x, 0.0, 1e-15); }

std::vector<double> p10_grid() { return stepped(-60, 60, 20.0); }
std::vector<double> taylor_ratio_grid() { return stepped(-99, 99, 100.0); }
std::vector<double> taylor_ratio_zoom_grid() { return stepped(900, 999, 1000.0); }

std::vector<TableRow> table_rows() {
  const auto& table = shared_table();
  std::vector<TableRow> rows;
  for (const auto& p : kReference) {
    TableRow r;
    r.x = p.x;
    r.reference_inverf = p.inverf;
    r.oracle = oracle_inverf(p.x);
    r.oracle_deviation = std::fabs(r.oracle - p.inverf);
    r.reference_approx = p.approx;
    const double head = taylor_head(p.x, kTaylorOrder, table);
    r.approx = head + tail_sum(p.x, kTaylorOrder, p.tail_end, TailForm::per_term).value;
    r.approx_deviation = std::fabs(r.approx - p.approx);
    r.tail_end = p.tail_end;
    r.printed_form_approx = head + tail_sum(p.x, kTaylorOrder, p.tail_end, TailForm::printed).value;
    rows.push_back(r);
  }
  return rows;
}

void cmd_coeffs(std::size_t max_n, Format format, std::ostream& out) {
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  const DerivCoefficientTable table = build_table(max_n);
  Sheet sheet({"n", "numerator", "denominator", "d_n", "d_n_over_n_factorial"});
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Rational& r = table.r(n);
    sheet.row()
        .integer(n)
        .text(r.get_num().get_str())
        .text(r.get_den().get_str())
        .num(dn_float(table, n))
        .num(taylor_coefficient(table, n));
  }
  sheet.write(format, out);
}

void cmd_poly(std::size_t n, Format format, std::ostream& out) {
  const IntPolynomial p = build_pn(n).back();
  if (format == Format::json) {
    out << polynomial_to_json(n, p, 2) << '\n';
    return;
  }
  out << "power,coefficient\n";
  const auto& c = p.by_power();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out << k << ',' << c[k].get_str() << '\n';
  }
}

void cmd_table(Format format, std::ostream& out) {
  Sheet sheet({"x", "reference_inverf", "oracle_inverf", "oracle_deviation", "reference_approx",
               "approx", "approx_deviation", "N", "printed_form_approx"});
  for (const auto& r : table_rows()) {
    sheet.row()
        .num(r.x)
        .num(r.reference_inverf)
        .num(r.oracle)
        .num(r.oracle_deviation)
        .num(r.reference_approx)
        .num(r.approx)
        .num(r.approx_deviation)
        .integer(r.tail_end)
        .num(r.printed_form_approx);
  }
  sheet.write(format, out);
}

void cmd_figure(const std::string& which, Format format, std::ostream& out) {
  if (which == "p10") return figure_p10(format, out);
  if (which == "dn_ratio") return figure_dn_ratio(format, out);
  if (which == "taylor_ratio") return figure_taylor_ratio(taylor_ratio_grid(), format, out);
  if (which == "taylor_ratio_zoom") return figure_taylor_ratio(taylor_ratio_zoom_grid(), format, out);
  throw UsageError("unknown figure '" + which + "'");
}

void cmd_eval(double x, const EvalConfig& config, Format format, std::ostream& out) {
  const std::size_t size = std::max<std::size_t>(config.order, kDefaultTableSize);
  const EvalReport rep = Evaluator(build_table(size)).inverf(x, config);
  Sheet sheet({"x", "value", "method", "terms_used", "polish_iterations", "residual"});
  sheet.row()
      .num(rep.x)
      .num(rep.value)
      .text(std::string(to_string(rep.method)))
      .integer(rep.terms_used)
      .integer(rep.polish_iterations)
      .num(rep.residual);
  sheet.write(format, out);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse error function: exact coefficients, asymptotics and evaluation", "inverf"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "csv";
  std::optional<std::string> out_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write to PATH instead of standard output");

  std::size_t max_n = 0;
  auto* coeffs = app.add_subcommand("coeffs", "Exact r_n with d_n = r_n pi^(n/2), n = 0..max-n");
  coeffs->add_option("--max-n", max_n, "Largest index")->required();

  std::size_t poly_n = 0;
  auto* poly = app.add_subcommand("poly", "Integer coefficients of P_n");
  poly->add_option("--n", poly_n, "Polynomial index")->required();

  auto* table = app.add_subcommand("table", "Reference table with T_9 + R_N approximants");

  std::string figure_key;
  auto* figure = app.add_subcommand("figure", "Figure data");
  figure->add_option("which", figure_key, "p10 | dn_ratio | taylor_ratio | taylor_ratio_zoom")
      ->required();

  double x = 0.0;
  EvalConfig config;
  std::string tail_text = "auto";
  std::string method_text = "auto";
  bool no_polish = false;
  auto* eval = app.add_subcommand("eval", "Evaluate inverf(x)");
  eval->add_option("--x", x, "Argument in (-1, 1)")->required();
  eval->add_option("--order", config.order, "Odd order of the exact Taylor head")
      ->capture_default_str();
  eval->add_option("--tail", tail_text, "Tail end N, or 'auto'")->capture_default_str();
  eval->add_option("--switch", config.switch_point, "Switch to the Lambert-W seed above |x|")
      ->capture_default_str();
  eval->add_flag("--no-polish", no_polish, "Skip Newton refinement");
  eval->add_option("--method", method_text, "auto | taylor | lambert | newton")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = format_name == "json" ? Format::json : Format::csv;
    std::ostringstream body;
    if (*coeffs) {
      cmd_coeffs(max_n, format, body);
    } else if (*poly) {
      cmd_poly(poly_n, format, body);
    } else if (*table) {
      cmd_table(format, body);
    } else if (*figure) {
      cmd_figure(figure_key, format, body);
    } else if (*eval) {
      config.tail_end = parse_tail(tail_text);
      const auto method = parse_method(method_text);
      if (!method) throw UsageError("unknown method '" + method_text + "'");
      config.method = *method;
      config.polish = !no_polish;
      cmd_eval(x, config, format, body);
    }
    emit(body.str(), out_path, out);
    return kExitOk;
  } catch (const IoError& e) {
    err << "inverf: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    err << "inverf: domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "inverf: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "inverf: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "inverf: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace inverf::cli

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/closed_form.hpp"
#include "qwalk/exact.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/matrix_io.hpp"
#include "qwalk/verifier.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

enum class Format { plain, json, csv };

const std::map<std::string, Format> kFormats{
    {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

struct Result {
  std::string text;
  int code = kExitOk;
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_matrix(const IntMatrix& m, Format f) {
  switch (f) {
    case Format::json: return format_matrix_json(m);
    case Format::csv: return format_matrix_csv(m);
    case Format::plain: break;
  }
  return format_matrix_text(m);
}

IntMatrix dynkin_matrix(std::size_t n, const std::string& kind) {
  const Graph g = dynkin_a(n);
  if (kind == "a") return adjacency_matrix(g);
  if (kind == "d") return degree_matrix(g);
  if (kind == "q") return signless_laplacian(g);
  if (kind == "walk-a") return a_walk_matrix(g).matrix;
  if (kind == "walk-q") return q_walk_matrix(g).matrix;
  return reduced_q_walk_matrix(n);
}

std::string join(const std::vector<BigInt>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += to_string(v[i]);
  }
  return s;
}

std::string render_snf(const SnfResult& s, Format f) {
  if (f == Format::json) {
    nlohmann::ordered_json j;
    j["rank"] = s.rank;
    auto& fac = j["invariant_factors"] = nlohmann::ordered_json::array();
    for (const auto& d : s.invariant_factors) fac.push_back(to_string(d));
    if (s.determinant_divisors) {
      auto& div = j["determinant_divisors"] = nlohmann::ordered_json::array();
      for (const auto& d : *s.determinant_divisors) div.push_back(to_string(d));
    }
    return j.dump() + "\n";
  }
  if (f == Format::csv) {
    std::string out = "rank,invariant_factors,determinant_divisors\n";
    out += std::to_string(s.rank) + "," + join(s.invariant_factors, " ") + "," +
           (s.determinant_divisors ? join(*s.determinant_divisors, " ") : "") + "\n";
    return out;
  }
  std::string out = "rank " + std::to_string(s.rank) + "; factors";
  if (!s.invariant_factors.empty()) out += " " + join(s.invariant_factors, " ");
  if (s.determinant_divisors) {
    out += "; divisors";
    if (!s.determinant_divisors->empty()) out += " " + join(*s.determinant_divisors, " ");
  }
  return out + "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Result eigencheck(std::size_t n, double tol, Format f) {
  const std::size_t r = half_up(n);
  const Parity parity = parity_of(n);
  const auto pairs = eigenpairs_for_n(n);
  const auto residuals = eigen_residuals(n);
  double max_res = 0.0;
  for (double v : residuals) max_res = std::max(max_res, v);
  const double product = dot_product_evaluated(r, parity);
  const double closed = dot_product_formula(r, parity);
  const bool pass = max_res <= tol;
  const char* family = parity == Parity::even ? "even" : "odd";

  Result res;
  res.code = pass ? kExitOk : kExitCheckFailed;
  if (f == Format::json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["r"] = r;
    j["family"] = family;
    j["tolerance"] = tol;
    auto& arr = j["pairs"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      nlohmann::ordered_json p;
      p["k"] = pairs[i].k;
      p["angle"] = pairs[i].angle;
      p["eigenvalue"] = pairs[i].eigenvalue;
      p["residual"] = residuals[i];
      p["dot"] = pairs[i].vector.sum();
      auto& vec = p["vector"] = nlohmann::ordered_json::array();
      for (double x : pairs[i].vector) vec.push_back(x);
      arr.push_back(std::move(p));
    }
    j["dot_product"] = product;
    j["dot_product_closed"] = closed;
    j["max_residual"] = max_res;
    j["passed"] = pass;
    res.text = j.dump(2) + "\n";
    return res;
  }
  if (f == Format::csv) {
    res.text = "k,angle,eigenvalue,residual,dot\n";
    for (std::size_t i = 0; i < pairs.size(); ++i)
      res.text += std::to_string(pairs[i].k) + "," + fmt_double(pairs[i].angle) + "," +
                  fmt_double(pairs[i].eigenvalue) + "," + fmt_double(residuals[i]) + "," +
                  fmt_double(pairs[i].vector.sum()) + "\n";
    return res;
  }
  res.text = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " family=" + family + "\n";
  res.text += "k angle eigenvalue residual dot\n";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    res.text += std::to_string(pairs[i].k) + " " + fmt_double(pairs[i].angle) + " " +
                fmt_double(pairs[i].eigenvalue) + " " + fmt_double(residuals[i]) + " " +
                fmt_double(pairs[i].vector.sum()) + "\n";
  res.text += "product " + fmt_double(product) + " closed " + fmt_double(closed) + "\n";
  res.text += "max_residual " + fmt_double(max_res) + " tol " + fmt_double(tol) +
              (pass ? " pass" : " FAIL") + "\n";
  return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact walk matrices, Smith normal forms and Q-walk checks for Dynkin A_n", "qwalk"};
  app.require_subcommand(1, 1);

  Format format = Format::plain;
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  std::size_t n = 0;
  std::string kind;
  auto* dynkin = app.add_subcommand("dynkin", "Print a matrix of the Dynkin graph A_n");
  dynkin->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  dynkin->add_option("--matrix", kind, "Which matrix")
      ->required()
      ->check(CLI::IsMember({"a", "d", "q", "walk-a", "walk-q", "reduced-q"}));
  add_common(dynkin);

  std::string input;
  bool with_divisors = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file (text or JSON)");
  snf->add_option("input", input, "Matrix file, or - for stdin")->required();
  snf->add_flag("--with-divisors", with_divisors, "Also report determinant divisors D(1)..D(r)");
  add_common(snf);

  std::size_t min_n = 1, max_n = 40;
  VerifyOptions vopts;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Check the rank, SNF and determinant claims on a range");
  verify->add_option("--min-n", min_n, "Smallest n")->check(CLI::PositiveNumber);
  verify->add_option("--max-n", max_n, "Largest n")->check(CLI::PositiveNumber);
  verify->add_option("--snf-cap", vopts.snf_max_n, "Largest n for Smith form checks");
  verify->add_option("--exact-cap", vopts.exact_max_n, "Largest n for exact rank/det checks");
  verify->add_option("--eigen-cap", vopts.eigen_max_n, "Largest n for eigen residual checks");
  verify->add_option("--tol", vopts.eigen_tol, "Eigen residual tolerance");
  verify->add_option("--threads", vopts.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--timing", timing, "Include per-n timings in JSON output");
  add_common(verify);

  double tol = 1e-8;
  auto* eig = app.add_subcommand("eigencheck", "Residuals of the predicted eigenpairs for A_n");
  eig->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  eig->add_option("--tol", tol, "Residual tolerance");
  add_common(eig);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qwalk: " << e.what() << "\n";
    return kExitUsage;
  }

  Result result;
  try {
    if (dynkin->parsed()) {
      result.text = render_matrix(dynkin_matrix(n, kind), format);
    } else if (snf->parsed()) {
      const IntMatrix m = parse_matrix(read_input(input));
      SnfOptions o;
      o.with_divisors = with_divisors;
      const SnfResult s = smith_normal_form(m, o);
      if (with_divisors && !s.determinant_divisors)
        err << "qwalk: matrix exceeds the " << o.oracle_cap
            << "-dimension oracle cap; divisors omitted\n";
      result.text = render_snf(s, format);
    } else if (verify->parsed()) {
      if (min_n > max_n) {
        err << "qwalk: --min-n must not exceed --max-n\n";
        return kExitUsage;
      }
      const auto rep = verify_range(min_n, max_n, vopts);
      switch (format) {
        case Format::json: result.text = format_report_json(rep, {timing}); break;
        case Format::csv: result.text = format_report_csv(rep); break;
        case Format::plain: result.text = format_report_plain(rep); break;
      }
      result.code = rep.all_passed() ? kExitOk : kExitCheckFailed;
    } else if (eig->parsed()) {
      result = eigencheck(n, tol, format);
    }
  } catch (const ParseError& e) {
    err << "qwalk: " << input << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "qwalk: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "qwalk: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    f << result.text;
  }
  return result.code;
}

}  // namespace qwalk::cli

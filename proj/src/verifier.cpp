#include "qwalk/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qwalk/closed_form.hpp"
#include "qwalk/exact.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/matrix_io.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

bool rows_mirrored(const IntMatrix& w) {
  const std::size_t n = w.rows();
  for (std::size_t i = 0; i < n / 2; ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (w(i, j) != w(n - 1 - i, j)) return false;
  return true;
}

bool fails(const std::optional<bool>& b) { return b.has_value() && !*b; }

}  // namespace

bool NRecord::passed() const {
  return !fails(rank_ok) && !fails(rank_bound_ok) && !fails(snf_ok) && !fails(det_ok) &&
         !fails(quotient_walk_ok) && !fails(symmetry_ok) && !fails(eigen_ok);
}

bool VerificationReport::all_passed() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const NRecord& r) { return !r.passed(); }));
}

NRecord verify_one(std::size_t n, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  NRecord rec;
  rec.n = n;
  rec.r = half_up(n);
  rec.predicted_rank = predicted_rank(n);
  rec.predicted_snf = predicted_snf(n).factors;
  rec.predicted_det = predicted_reduced_det(n);

  const bool exact = n <= opts.exact_max_n;
  const bool snf = n <= opts.snf_max_n;
  if (exact || snf) {
    const Graph g = dynkin_a(n);
    const IntMatrix w = q_walk_matrix(g).matrix;
    const EquitablePartition pi = partition_pi(n);

    if (exact) {
      rec.exact_rank = rank_exact(w);
      rec.rank_ok = *rec.exact_rank == rec.predicted_rank;
      rec.rank_bound_ok = is_equitable(g, pi) && *rec.exact_rank <= pi.size();

      const IntMatrix reduced = reduced_q_walk_matrix(n);
      rec.reduced_det = det_exact(reduced);
      rec.det_ok = *rec.reduced_det == rec.predicted_det;
      rec.quotient_walk_ok = reduced == walk_matrix(reduced_generator(n)).matrix;
      rec.symmetry_ok = rows_mirrored(w);
    }
    if (snf) {
      const SnfResult s = smith_normal_form(w);
      rec.snf_ok = s.invariant_factors == rec.predicted_snf && s.rank == rec.r;
      rec.exact_snf = s.invariant_factors;
    }
  }
  if (n <= opts.eigen_max_n) {
    const auto res = eigen_residuals(n);
    rec.eigen_max_residual = *std::max_element(res.begin(), res.end());
    rec.eigen_ok = *rec.eigen_max_residual <= opts.eigen_tol;
  }
  rec.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

VerificationReport verify_range(std::size_t n_min, std::size_t n_max, const VerifyOptions& opts) {
  if (n_min < 1 || n_min > n_max)
    throw std::invalid_argument("verify_range: need 1 <= n_min <= n_max");
  VerificationReport rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  const std::size_t count = n_max - n_min + 1;
  rep.records.resize(count);

  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  // Largest n first: the tail of the range dominates the cost.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < count;) {
      const std::size_t slot = count - 1 - t;
      rep.records[slot] = verify_one(n_min + slot, opts);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  pool.clear();
  return rep;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson factors_json(const std::vector<BigInt>& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

template <class T>
ojson opt_json(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

std::vector<BigInt> factors_from(const nlohmann::json& a) {
  if (!a.is_array()) throw ParseError(0, "expected an array of decimal strings");
  std::vector<BigInt> out;
  for (const auto& e : a) {
    if (!e.is_string()) throw ParseError(0, "expected a decimal string");
    out.push_back(parse_bigint(e.get<std::string>()));
  }
  return out;
}

template <class T>
std::optional<T> opt_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

std::string csv_bool(const std::optional<bool>& b) {
  return b ? (*b ? "true" : "false") : "skip";
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string format_report_json(const VerificationReport& rep, ReportFormat fmt) {
  ojson j;
  j["n_min"] = rep.n_min;
  j["n_max"] = rep.n_max;
  j["all_passed"] = rep.all_passed();
  auto& arr = j["records"] = ojson::array();
  for (const auto& r : rep.records) {
    ojson o;
    o["n"] = r.n;
    o["r"] = r.r;
    o["exact_rank"] = opt_json(r.exact_rank);
    o["predicted_rank"] = r.predicted_rank;
    o["rank_ok"] = opt_json(r.rank_ok);
    o["rank_bound_ok"] = opt_json(r.rank_bound_ok);
    o["exact_snf"] = r.exact_snf ? factors_json(*r.exact_snf) : ojson(nullptr);
    o["predicted_snf"] = factors_json(r.predicted_snf);
    o["snf_ok"] = opt_json(r.snf_ok);
    o["reduced_det"] = r.reduced_det ? ojson(to_string(*r.reduced_det)) : ojson(nullptr);
    o["predicted_det"] = to_string(r.predicted_det);
    o["det_ok"] = opt_json(r.det_ok);
    o["quotient_walk_ok"] = opt_json(r.quotient_walk_ok);
    o["symmetry_ok"] = opt_json(r.symmetry_ok);
    o["eigen_max_residual"] = opt_json(r.eigen_max_residual);
    o["eigen_ok"] = opt_json(r.eigen_ok);
    if (fmt.include_timing) o["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

VerificationReport parse_report_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  try {
    VerificationReport rep;
    rep.n_min = j.at("n_min").get<std::size_t>();
    rep.n_max = j.at("n_max").get<std::size_t>();
    for (const auto& o : j.at("records")) {
      NRecord r;
      r.n = o.at("n").get<std::size_t>();
      r.r = o.at("r").get<std::size_t>();
      r.exact_rank = opt_from<std::size_t>(o, "exact_rank");
      r.predicted_rank = o.at("predicted_rank").get<std::size_t>();
      r.rank_ok = opt_from<bool>(o, "rank_ok");
      r.rank_bound_ok = opt_from<bool>(o, "rank_bound_ok");
      if (!o.at("exact_snf").is_null()) r.exact_snf = factors_from(o["exact_snf"]);
      r.predicted_snf = factors_from(o.at("predicted_snf"));
      r.snf_ok = opt_from<bool>(o, "snf_ok");
      if (!o.at("reduced_det").is_null())
        r.reduced_det = parse_bigint(o["reduced_det"].get<std::string>());
      r.predicted_det = parse_bigint(o.at("predicted_det").get<std::string>());
      r.det_ok = opt_from<bool>(o, "det_ok");
      r.quotient_walk_ok = opt_from<bool>(o, "quotient_walk_ok");
      r.symmetry_ok = opt_from<bool>(o, "symmetry_ok");
      r.eigen_max_residual = opt_from<double>(o, "eigen_max_residual");
      r.eigen_ok = opt_from<bool>(o, "eigen_ok");
      r.elapsed_ms = o.value("elapsed_ms", 0.0);
      rep.records.push_back(std::move(r));
    }
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

std::string format_report_csv(const VerificationReport& rep) {
  std::string out = "n,r,rank_ok,snf_ok,det_ok,quotient_walk_ok,symmetry_ok,eigen_max_residual\n";
  for (const auto& r : rep.records) {
    out += std::to_string(r.n) + "," + std::to_string(r.r) + "," + csv_bool(r.rank_ok) + "," +
           csv_bool(r.snf_ok) + "," + csv_bool(r.det_ok) + "," + csv_bool(r.quotient_walk_ok) +
           "," + csv_bool(r.symmetry_ok) + "," +
           (r.eigen_max_residual ? fmt_double(*r.eigen_max_residual) : "skip") + "\n";
  }
  return out;
}

std::string format_report_plain(const VerificationReport& rep) {
  auto mark = [](const std::optional<bool>& b) { return b ? (*b ? "ok" : "FAIL") : "skip"; };
  std::string out;
  for (const auto& r : rep.records) {
    out += "n=" + std::to_string(r.n) + " r=" + std::to_string(r.r);
    out += " rank=" + (r.exact_rank ? std::to_string(*r.exact_rank) : std::string("-")) + " " +
           mark(r.rank_ok);
    out += " snf=[" + (r.exact_snf ? join(*r.exact_snf) : std::string("-")) + "] " +
           mark(r.snf_ok);
    out += " det=" + (r.reduced_det ? to_string(*r.reduced_det) : std::string("-")) + " " +
           mark(r.det_ok);
    out += std::string(" quotient_walk ") + mark(r.quotient_walk_ok);
    out += std::string(" symmetry ") + mark(r.symmetry_ok);
    out += " eigen=" + (r.eigen_max_residual ? fmt_double(*r.eigen_max_residual) : "-") + " " +
           mark(r.eigen_ok);
    out += "\n";
  }
  const std::size_t bad = rep.failure_count();
  out += bad == 0 ? "all checks passed for n=" + std::to_string(rep.n_min) + ".." +
                        std::to_string(rep.n_max) + "\n"
                  : std::to_string(bad) + " of " + std::to_string(rep.records.size()) +
                        " values of n failed\n";
  return out;
}

FuzzSummary oracle_snf_fuzz(std::size_t count, std::size_t dim, long bound, std::uint64_t seed) {
  if (dim == 0 || dim > kDefaultOracleCap)
    throw std::invalid_argument("oracle_snf_fuzz: dim must be in 1.." +
                                std::to_string(kDefaultOracleCap));
  if (bound < 0) throw std::invalid_argument("oracle_snf_fuzz: bound must be non-negative");
  FuzzSummary sum{count, dim, bound, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-bound, bound);
  for (std::size_t t = 0; t < count; ++t) {
    IntMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = entry(rng);
    const auto elim = smith_normal_form(m);
    const auto oracle = invariant_factors_from_divisors(determinant_divisors(m));
    if (elim.invariant_factors != oracle || elim.rank != oracle.size()) {
      ++sum.mismatches;
      sum.offending.push_back(std::move(m));
    }
  }
  return sum;
}

}  // namespace qwalk

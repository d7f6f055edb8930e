#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/int_matrix.hpp"

namespace qwalk {

struct VerifyOptions {
  std::size_t snf_max_n = 40;     // Smith form checks for n <= snf_max_n
  std::size_t exact_max_n = 60;   // rank, determinant, quotient walk, symmetry
  std::size_t eigen_max_n = 128;  // float eigen residuals
  double eigen_tol = 1e-8;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Outcome for one n. Unset optionals mark checks outside the configured
/// windows; a skipped check is neither a pass nor a failure.
struct NRecord {
  std::size_t n = 0;
  std::size_t r = 0;

  std::optional<std::size_t> exact_rank;
  std::size_t predicted_rank = 0;
  std::optional<bool> rank_ok;
  std::optional<bool> rank_bound_ok;  // rank <= number of partition cells

  std::optional<std::vector<BigInt>> exact_snf;
  std::vector<BigInt> predicted_snf;
  std::optional<bool> snf_ok;

  std::optional<BigInt> reduced_det;
  BigInt predicted_det;
  std::optional<bool> det_ok;

  std::optional<bool> quotient_walk_ok;  // reduced W_Q(A_n) == W(B + D-bar)
  std::optional<bool> symmetry_ok;       // row i == row n+1-i

  std::optional<double> eigen_max_residual;
  std::optional<bool> eigen_ok;

  double elapsed_ms = 0.0;

  bool passed() const;
  friend bool operator==(const NRecord&, const NRecord&) = default;
};

struct VerificationReport {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::vector<NRecord> records;  // ascending n

  bool all_passed() const;
  std::size_t failure_count() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs every check for each n in [n_min, n_max]. Per-n work is spread over
/// worker threads; records come back in n order. Check failures are recorded,
/// never thrown. Throws std::invalid_argument unless 1 <= n_min <= n_max.
VerificationReport verify_range(std::size_t n_min, std::size_t n_max,
                                const VerifyOptions& opts = {});

/// Single-n worker behind verify_range.
NRecord verify_one(std::size_t n, const VerifyOptions& opts = {});

struct ReportFormat {
  bool include_timing = false;
};

std::string format_report_json(const VerificationReport& rep, ReportFormat fmt = {});
/// Header plus one row per n:
/// n,r,rank_ok,snf_ok,det_ok,quotient_walk_ok,symmetry_ok,eigen_max_residual
std::string format_report_csv(const VerificationReport& rep);
std::string format_report_plain(const VerificationReport& rep);
/// Inverse of format_report_json; throws ParseError.
VerificationReport parse_report_json(std::string_view text);

struct FuzzSummary {
  std::size_t count = 0;
  std::size_t dim = 0;
  long bound = 0;
  std::size_t mismatches = 0;
  std::vector<IntMatrix> offending;

  bool passed() const { return mismatches == 0; }
};

/// Compares elimination SNF with the determinant-divisor SNF on `count`
/// random dim x dim matrices with entries in [-bound, bound]. Deterministic
/// for a given seed. Throws std::invalid_argument when dim is 0 or exceeds
/// the oracle cap.
FuzzSummary oracle_snf_fuzz(std::size_t count, std::size_t dim, long bound,
                            std::uint64_t seed = 0x5eed);

}  // namespace qwalk

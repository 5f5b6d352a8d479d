#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rghw/error.hpp"
#include "rghw/groebner.hpp"
#include "rghw/points.hpp"

namespace rghw::cli {

/// Malformed configuration; line() is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : Error(line > 0 ? "config line " + std::to_string(line) + ": " + what : "config: " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class PointSource { torus, cartesian, file, ideal };

struct Range {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
};

struct QuerySpec {
  Range degrees;
  /// nullopt means every r in [1, k - k1].
  std::optional<Range> ranks;
  std::vector<std::string> subcode;
  /// Selected function for the matrix subcommand.
  std::string function = "fp";
  std::size_t line = 0;
};

struct ProblemConfig {
  std::uint32_t q = 0;
  std::size_t s = 0;
  PointSource source = PointSource::torus;
  std::vector<std::vector<std::int64_t>> factors;
  std::filesystem::path points_file;
  std::string generators;
  std::size_t generators_line = 0;
  std::string order = "grevlex";
  std::uint64_t budget = 10'000'000;
  std::vector<QuerySpec> queries;
};

/// Flat key = value lines, '#' comments, one [query] section per query.
/// Relative points_file paths are resolved against base_dir.
ProblemConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
ProblemConfig load_config(const std::filesystem::path& path);

enum class Format { table, csv };

struct RunOptions {
  Format format = Format::table;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> order;
  bool with_bruteforce = false;
  unsigned threads = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBudget = 3;

/// The ideal to work with and, when available, a point set X with I = I_X.
struct Problem {
  RingPtr ring;
  Ideal ideal;
  std::optional<ProjectivePointSet> points;
  /// I_X for the points; the same ideal as `ideal` when certified.
  std::optional<Ideal> vanishing;
  /// I = I_X has been verified (always true for point-based sources).
  bool certified = false;
  /// Human-readable outcome of the certification.
  std::string certificate;
};

Problem build_problem(const ProblemConfig& config, const RunOptions& options);

int run_hilbert(const ProblemConfig& config, const RunOptions& options, std::ostream& out);
int run_vanishing_ideal(const ProblemConfig& config, const RunOptions& options, std::ostream& out);
int run_code_info(const ProblemConfig& config, const RunOptions& options, std::ostream& out);
int run_weights(const ProblemConfig& config, const RunOptions& options, std::ostream& out);
int run_matrix(const ProblemConfig& config, const RunOptions& options, std::ostream& out);

/// Dispatches on the subcommand name; maps errors to exit codes and
/// writes diagnostics to err.
int run(std::string_view subcommand, const ProblemConfig& config, const RunOptions& options,
        std::ostream& out, std::ostream& err);

}  // namespace rghw::cli

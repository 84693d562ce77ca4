#pragma once

// Batch front end: JSON requests in, CSV result tables out.

#include "finstrain/errors.hpp"
#include "finstrain/invariants.hpp"
#include "finstrain/stress.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace finstrain::batch {

struct BatchEntry {
  std::string id;
  Tensor3 F;
  std::optional<CoordinateChart> chart;
  std::optional<VarianceCase> variance;
};

struct BatchRequest {
  Frame frame = Frame::Eulerian;
  StrainFamily family = StrainFamily::builtin("hencky");
  std::vector<BatchEntry> entries;
  std::optional<EnergyPotential> energy;
};

/// Malformed request. Carries one diagnostic per offending entry/field.
class RequestError : public InvalidInput {
public:
  explicit RequestError(std::vector<std::string> diagnostics);
  const std::vector<std::string> &diagnostics() const noexcept {
    return diagnostics_;
  }

private:
  std::vector<std::string> diagnostics_;
};

/// Parses and validates a request document. Every entry must have an id and
/// a 3x3 F (flat or nested, row-major) with det F > 0. All problems are
/// collected before throwing RequestError.
BatchRequest parse_request(std::string_view json_text);

/// Command-line overrides applied on top of a parsed request.
struct Overrides {
  std::optional<std::string> family;
  std::optional<Frame> frame;
  std::optional<VarianceCase> variance;
};

void apply_overrides(BatchRequest &request, const Overrides &overrides);

using Sym6 = std::array<double, 6>; ///< (11, 22, 33, 12, 23, 13)

Sym6 to_sym6(const Tensor3 &t);

struct ResultRow {
  std::string id;
  std::optional<double> v, j, y, z, zeta;
  std::string character;
  std::optional<double> sqrt_y;
  std::optional<Sym6> E, D;
  std::optional<Sym6> tau, sigma;
  std::optional<double> mean;
  std::optional<std::array<double, 9>> sigma_tilde; ///< row-major
  std::string error;

  friend bool operator==(const ResultRow &, const ResultRow &) = default;
};

enum class TableKind { Strain, Stress };

struct RunOptions {
  bool parallel = false;
  unsigned threads = 0; ///< 0 = hardware concurrency
};

/// One row per entry in input order. Domain failures land in `error`.
std::vector<ResultRow> run(const BatchRequest &request, TableKind kind,
                           const RunOptions &options = {});

ResultRow compute_row(const BatchEntry &entry, const BatchRequest &request,
                      TableKind kind);

/// Shortest round-trip decimal by default, N significant digits otherwise.
struct NumberFormat {
  std::optional<int> digits;
};

std::string format_number(double x, const NumberFormat &fmt = {});

std::vector<std::string> header(TableKind kind);

/// Comma separated, header row, LF line endings, RFC 4180 quoting.
std::string write_csv(const std::vector<ResultRow> &rows, TableKind kind,
                      const NumberFormat &fmt = {});

/// Inverse of write_csv. Throws InvalidInput on malformed tables.
std::vector<ResultRow> read_csv(std::string_view text, TableKind kind);

/// Evenly spaced samples (x, f̃(x)) for x in [lo, hi]; samples >= 2.
std::string curve_csv(const StrainFamily &family, double lo, double hi,
                      int samples, const NumberFormat &fmt = {});

} // namespace finstrain::batch

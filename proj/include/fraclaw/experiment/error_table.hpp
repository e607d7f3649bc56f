#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fraclaw {

/// Index into the per-norm arrays: p = 1, 2, infinity.
enum NormColumn : std::size_t { kL1 = 0, kL2 = 1, kLinf = 2 };

struct ErrorRow {
  double dx = 0.0;
  std::array<double, 3> error{};     // E_{dx,p}
  std::array<double, 3> relative{};  // R_{dx,p} = E / |reference|_p
  /// (log E_dx - log E_{dx/2}) / log 2; unset on the last row or when an
  /// error vanishes.
  std::array<std::optional<double>, 3> alpha{};

  bool operator==(const ErrorRow&) const = default;
};

class ErrorTable {
 public:
  std::vector<ErrorRow> rows;

  /// Fills alpha from consecutive rows (which must halve dx).
  void compute_rates();

  /// Header dx,E_1,R_1,alpha_1,E_2,R_2,alpha_2,E_inf,R_inf,alpha_inf; values
  /// with 17 significant digits, undefined rates as empty fields.
  std::string to_csv() const;
  /// Inverse of to_csv, bit exact. Throws std::runtime_error on malformed text.
  static ErrorTable from_csv(const std::string& text);

  /// Fixed-width text table with 4 decimals.
  std::string to_display() const;

  bool operator==(const ErrorTable&) const = default;
};

}  // namespace fraclaw

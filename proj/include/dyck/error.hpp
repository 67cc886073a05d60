#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dyck {

enum class errc {
  wrong_length,
  growth_violation,
  null_germ,
  order_mismatch,
  rank_out_of_range,
  k_too_small,
  digit_overflow,
  pivot_missing,
  invalid_depth,
  not_dyck,
  unrealizable,
  out_of_bounds,
  no_difference,
  multiple_differences,
  color_out_of_range,
  no_dyck_rotation,
  too_large,
  unknown_suite,
  bad_prefix,
};

inline const char *errc_name(errc c) {
  switch (c) {
  case errc::wrong_length: return "WrongLength";
  case errc::growth_violation: return "GrowthViolation";
  case errc::null_germ: return "NullGerm";
  case errc::order_mismatch: return "OrderMismatch";
  case errc::rank_out_of_range: return "RankOutOfRange";
  case errc::k_too_small: return "KTooSmall";
  case errc::digit_overflow: return "DigitOverflow";
  case errc::pivot_missing: return "PivotMissing";
  case errc::invalid_depth: return "InvalidDepth";
  case errc::not_dyck: return "NotDyck";
  case errc::unrealizable: return "Unrealizable";
  case errc::out_of_bounds: return "OutOfBounds";
  case errc::no_difference: return "NoDifference";
  case errc::multiple_differences: return "MultipleDifferences";
  case errc::color_out_of_range: return "ColorOutOfRange";
  case errc::no_dyck_rotation: return "NoDyckRotation";
  case errc::too_large: return "TooLarge";
  case errc::unknown_suite: return "UnknownSuite";
  case errc::bad_prefix: return "BadPrefix";
  }
  return "Unknown";
}

// All library failures throw this one type.  `code` identifies the failure
// class; `detail` carries machine-readable extras (e.g. the offending
// positions for a multi-entry mismatch).
class error : public std::runtime_error {
public:
  error(errc code, const std::string &msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  error(errc code, const std::string &msg, std::vector<long long> detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code), detail_(std::move(detail)) {}

  errc code() const { return code_; }
  const std::vector<long long> &detail() const { return detail_; }

private:
  errc code_;
  std::vector<long long> detail_;
};

} // namespace dyck

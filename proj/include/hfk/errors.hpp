#pragma once

#include <stdexcept>
#include <string>

namespace hfk {

enum class errc {
  invalid_argument,
  parse_error,
  validation_error,
  coset_mismatch,
  illegal_basis_change,
  no_tower,
  not_knot_like,
  non_integer_v,
  no_balance_point,
  multiple_balance_points,
  hat_rank_not_one,
  invalid_alexander_data,
  not_coprime,
  not_staircase_polynomial,
  cable_condition_violated,
  conj_d_mismatch,
  symmetry_violation,
};

inline const char* errc_name(errc e)
{
  switch (e) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::coset_mismatch: return "CosetMismatch";
    case errc::illegal_basis_change: return "IllegalBasisChange";
    case errc::no_tower: return "NoTower";
    case errc::not_knot_like: return "NotKnotLike";
    case errc::non_integer_v: return "NonIntegerV";
    case errc::no_balance_point: return "NoBalancePoint";
    case errc::multiple_balance_points: return "MultipleBalancePoints";
    case errc::hat_rank_not_one: return "HatRankNotOne";
    case errc::invalid_alexander_data: return "InvalidAlexanderData";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_staircase_polynomial: return "NotStaircasePolynomial";
    case errc::cable_condition_violated: return "CableConditionViolated";
    case errc::conj_d_mismatch: return "ConjDMismatch";
    case errc::symmetry_violation: return "SymmetryViolation";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
  {
  }

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace hfk

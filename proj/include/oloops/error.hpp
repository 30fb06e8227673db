#pragma once

#include <stdexcept>
#include <string>

namespace oloops {

enum class errc {
  bad_dimensions,
  duplicate_in_row,
  duplicate_in_column,
  no_identity,
  index_out_of_range,
  power_ambiguity,
  empty_generators,
  not_closed,
  pair_covered_twice,
  pair_uncovered,
  bad_block,
  inadmissible_order,
  same_point,
  dim_too_large,
  bad_order,
  not_a_difference_family,
  not_hall,
  size_mismatch,
  not_a_loop,
  disagreement_detected,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_dimensions: return "BadDimensions";
    case errc::duplicate_in_row: return "DuplicateInRow";
    case errc::duplicate_in_column: return "DuplicateInColumn";
    case errc::no_identity: return "NoIdentity";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::power_ambiguity: return "PowerAmbiguity";
    case errc::empty_generators: return "EmptyGenerators";
    case errc::not_closed: return "NotClosed";
    case errc::pair_covered_twice: return "PairCoveredTwice";
    case errc::pair_uncovered: return "PairUncovered";
    case errc::bad_block: return "BadBlock";
    case errc::inadmissible_order: return "InadmissibleOrder";
    case errc::same_point: return "SamePoint";
    case errc::dim_too_large: return "DimTooLarge";
    case errc::bad_order: return "BadOrder";
    case errc::not_a_difference_family: return "NotADifferenceFamily";
    case errc::not_hall: return "NotHall";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_a_loop: return "NotALoop";
    case errc::disagreement_detected: return "DisagreementDetected";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable error kind plus a human message.
class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

}  // namespace oloops

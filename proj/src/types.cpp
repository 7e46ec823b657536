#include <tfact/types.hpp>

#include <Eigen/SVD>

namespace tfact {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_unit_argument: return "NonUnitArgument";
    case errc::denominator_near_zero: return "DenominatorNearZero";
    case errc::grid_too_coarse: return "GridTooCoarse";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::not_bounded_away_from_zero: return "NotBoundedAwayFromZero";
    case errc::non_integer_winding: return "NonIntegerWinding";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::ambiguous_spectrum: return "AmbiguousSpectrum";
    case errc::inconsistent_table: return "InconsistentTable";
    case errc::not_analytic: return "NotAnalytic";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::not_nonincreasing: return "NotNonincreasing";
    case errc::unsupported_representation: return "UnsupportedRepresentation";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

double operator_norm(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

} // namespace tfact

#include "cycov/errors.hpp"

namespace cycov {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::non_prime_degree: return "NonPrimeDegree";
        case errc::duplicate_branch_points: return "DuplicateBranchPoints";
        case errc::zero_exponent: return "ZeroExponent";
        case errc::ramified_at_infinity: return "RamifiedAtInfinity";
        case errc::too_few_branch_points: return "TooFewBranchPoints";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::modulus_mismatch: return "ModulusMismatch";
        case errc::zero_vector: return "ZeroVector";
        case errc::entry_out_of_range: return "EntryOutOfRange";
        case errc::empty_vector: return "EmptyVector";
        case errc::not_degree_zero: return "NotDegreeZero";
        case errc::trivial_cover: return "TrivialCover";
        case errc::invalid_profile: return "InvalidProfile";
        case errc::divisibility_failure: return "DivisibilityFailure";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::not_isomorphic: return "NotIsomorphic";
        case errc::orientation_mismatch: return "OrientationMismatch";
        case errc::equal_positions: return "EqualPositions";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::degree_not_divisible: return "DegreeNotDivisible";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::constant_factor: return "ConstantFactor";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::inexact_division: return "InexactDivision";
        case errc::invalid_rational: return "InvalidRational";
        case errc::invalid_curve_file: return "InvalidCurveFile";
        case errc::invalid_equation_text: return "InvalidEquationText";
        case errc::invalid_equation_json: return "InvalidEquationJson";
        case errc::io_error: return "IoError";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace cycov

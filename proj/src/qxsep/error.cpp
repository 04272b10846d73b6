#include "qxsep/error.hpp"

namespace qxsep {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::parse_error: return "ParseError";
        case Errc::internal: return "InternalError";
        case Errc::division_by_zero_poly: return "DivisionByZeroPoly";
        case Errc::both_zero: return "BothZero";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::ambient_mismatch: return "AmbientMismatch";
        case Errc::not_primary: return "NotPrimary";
        case Errc::zero_element: return "ZeroElement";
        case Errc::prime_mismatch: return "PrimeMismatch";
        case Errc::rank_mismatch: return "RankMismatch";
        case Errc::not_in_ambient: return "NotInAmbient";
        case Errc::element_in_subgroup: return "ElementInSubgroup";
        case Errc::not_isolated: return "NotIsolated";
    }
    return "Error";
}

}  // namespace qxsep

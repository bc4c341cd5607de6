#include "ctmc/types.hpp"

namespace ctmc {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotSquare: return "NotSquare";
        case Errc::NegativeRate: return "NegativeRate";
        case Errc::ColumnSumNonzero: return "ColumnSumNonzero";
        case Errc::Reducible: return "Reducible";
        case Errc::SingularBeyondTolerance: return "SingularBeyondTolerance";
        case Errc::NegativeTime: return "NegativeTime";
        case Errc::StepTooLarge: return "StepTooLarge";
        case Errc::BadSize: return "BadSize";
        case Errc::ToleranceViolation: return "ToleranceViolation";
        case Errc::SmallStationaryEntry: return "SmallStationaryEntry";
        case Errc::NotSkew: return "NotSkew";
        case Errc::SpectrumDriftTooLarge: return "SpectrumDriftTooLarge";
        case Errc::DegenerateRecombinationFailure: return "DegenerateRecombinationFailure";
        case Errc::CanonicalizationFailure: return "CanonicalizationFailure";
        case Errc::DegeneratePair: return "DegeneratePair";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotSkewFlow: return "NotSkewFlow";
        case Errc::InfiniteEntropyProduction: return "InfiniteEntropyProduction";
        case Errc::IdentityViolation: return "IdentityViolation";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool Error::is_input_error() const {
    switch (code_) {
        case Errc::NotSquare:
        case Errc::NegativeRate:
        case Errc::ColumnSumNonzero:
        case Errc::Reducible:
        case Errc::NegativeTime:
        case Errc::BadSize:
        case Errc::DimensionMismatch:
        case Errc::ParseError:
            return true;
        default:
            return false;
    }
}

}  // namespace ctmc

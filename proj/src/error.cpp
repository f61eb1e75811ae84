#include "nadyn/error.hpp"

namespace nadyn {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotPrime: return "NotPrime";
        case Errc::NonSquareResidue: return "NonSquareResidue";
        case Errc::EvenPrimeUnsupported: return "EvenPrimeUnsupported";
        case Errc::OddValuation: return "OddValuation";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::InvalidPoint: return "InvalidPoint";
        case Errc::ChartMismatch: return "ChartMismatch";
        case Errc::SupNormExceedsOne: return "SupNormExceedsOne";
        case Errc::DegenerateMap: return "DegenerateMap";
        case Errc::DiskNotPreserved: return "DiskNotPreserved";
        case Errc::PoleInDisk: return "PoleInDisk";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::CertificationFailed: return "CertificationFailed";
        case Errc::OverlappingCells: return "OverlappingCells";
        case Errc::UncoveredPoint: return "UncoveredPoint";
        case Errc::HorizonTooShort: return "HorizonTooShort";
        case Errc::CompositionNotContained: return "CompositionNotContained";
        case Errc::SizeBound: return "SizeBound";
        case Errc::NotAHomomorphism: return "NotAHomomorphism";
        case Errc::NotContinuous: return "NotContinuous";
        case Errc::NotACover: return "NotACover";
        case Errc::SearchBudget: return "SearchBudget";
        case Errc::Schema: return "Schema";
    }
    return "Unknown";
}

}  // namespace nadyn

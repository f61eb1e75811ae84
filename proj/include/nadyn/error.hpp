#pragma once

#include <stdexcept>
#include <string>

namespace nadyn {

/// Error kinds raised by the toolkit. The names returned by errc_name() are
/// stable and surface verbatim through the C API and the CLI.
enum class Errc {
    InvalidArgument,
    NotPrime,
    NonSquareResidue,
    EvenPrimeUnsupported,
    OddValuation,
    ZeroPolynomial,
    InvalidPoint,
    ChartMismatch,
    SupNormExceedsOne,
    DegenerateMap,
    DiskNotPreserved,
    PoleInDisk,
    BudgetExceeded,
    SingularMatrix,
    CertificationFailed,
    OverlappingCells,
    UncoveredPoint,
    HorizonTooShort,
    CompositionNotContained,
    SizeBound,
    NotAHomomorphism,
    NotContinuous,
    NotACover,
    SearchBudget,
    Schema,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace nadyn

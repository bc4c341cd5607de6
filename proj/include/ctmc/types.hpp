#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace ctmc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Error codes surfaced by the library. The CLI maps Input* codes to exit
/// code 1 and post-hoc invariant violations to exit code 2.
enum class Errc {
    NotSquare,
    NegativeRate,
    ColumnSumNonzero,
    Reducible,
    SingularBeyondTolerance,
    NegativeTime,
    StepTooLarge,
    BadSize,
    ToleranceViolation,
    SmallStationaryEntry,
    NotSkew,
    SpectrumDriftTooLarge,
    DegenerateRecombinationFailure,
    CanonicalizationFailure,
    DegeneratePair,
    DimensionMismatch,
    NotSkewFlow,
    InfiniteEntropyProduction,
    IdentityViolation,
    ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

    /// True for errors caused by bad user input rather than a numerical
    /// failure discovered mid-computation.
    bool is_input_error() const;

  private:
    Errc code_;
};

inline double inf_norm(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double inf_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace ctmc

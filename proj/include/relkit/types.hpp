#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace relkit {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;
using Index   = Eigen::Index;

/// Numerical policy knobs. Rank decisions are made only through singular
/// values with the relative cutoff `rank`; no entry-wise thresholds.
struct Tolerances {
    double rank   = 1e-10;  ///< relative singular-value cutoff
    double orth   = 1e-12;  ///< orthonormality slack on stored bases
    double member = 1e-9;   ///< membership / residual / subspace-equality slack
    double psd    = 1e-10;  ///< eigenvalue negativity slack

    void validate() const {
        if (!(rank > 0.0 && orth > 0.0 && member > 0.0 && psd > 0.0))
            throw std::invalid_argument("Tolerances: all entries must be strictly positive");
    }
};

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidInput : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class NotInRange : public Error {
  public:
    using Error::Error;
};

/// Membership residual fell into the undecidable band; the caller gets an
/// explicit error instead of a guess.
class IllConditioned : public Error {
  public:
    using Error::Error;
};

class NotPositive : public Error {
  public:
    using Error::Error;
};

class InvalidContraction : public Error {
  public:
    using Error::Error;
};

class NotClosable : public Error {
  public:
    using Error::Error;
};

class NotRegular : public Error {
  public:
    using Error::Error;
};

class NotPseudoOrthogonal : public Error {
  public:
    using Error::Error;
};

class ConditionsViolated : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace relkit

#pragma once

#include <stdexcept>
#include <string>

namespace polemono {

// Error identifiers. The CLI maps these 1:1 to process exit codes, so the
// numeric values are part of the external interface and must stay stable.
enum class Errc : int {
  syntax = 2,
  not_homogeneous = 3,
  zero_polynomial = 4,
  non_reduced = 5,
  central_pencil = 6,
  certificate_failed = 7,
  io = 8,
  internal = 9,
  invalid_degree = 10,
  degree_mismatch = 11,
  bad_prime = 12,
  not_stabilized = 13,
  retry_exhausted = 14,
  negative_dimension = 15,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax: return "SyntaxError";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::non_reduced: return "NonReduced";
    case Errc::central_pencil: return "CentralPencil";
    case Errc::certificate_failed: return "CertificateFailed";
    case Errc::io: return "IOError";
    case Errc::internal: return "InternalError";
    case Errc::invalid_degree: return "InvalidDegree";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::bad_prime: return "BadPrime";
    case Errc::not_stabilized: return "NotStabilized";
    case Errc::retry_exhausted: return "RetryExhausted";
    case Errc::negative_dimension: return "NegativeDimension";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  Errc code_;
};

#define POLEMONO_ERROR_TYPE(Name, Code)                                \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(Code, what) {}      \
  }

POLEMONO_ERROR_TYPE(SyntaxError, Errc::syntax);
POLEMONO_ERROR_TYPE(NotHomogeneousError, Errc::not_homogeneous);
POLEMONO_ERROR_TYPE(ZeroPolynomialError, Errc::zero_polynomial);
POLEMONO_ERROR_TYPE(NonReducedError, Errc::non_reduced);
POLEMONO_ERROR_TYPE(CentralPencilError, Errc::central_pencil);
POLEMONO_ERROR_TYPE(IoError, Errc::io);
POLEMONO_ERROR_TYPE(InternalError, Errc::internal);
POLEMONO_ERROR_TYPE(InvalidDegreeError, Errc::invalid_degree);
POLEMONO_ERROR_TYPE(DegreeMismatchError, Errc::degree_mismatch);
POLEMONO_ERROR_TYPE(BadPrimeError, Errc::bad_prime);
POLEMONO_ERROR_TYPE(NotStabilizedError, Errc::not_stabilized);
POLEMONO_ERROR_TYPE(RetryExhaustedError, Errc::retry_exhausted);
POLEMONO_ERROR_TYPE(NegativeDimensionError, Errc::negative_dimension);

#undef POLEMONO_ERROR_TYPE

}  // namespace polemono

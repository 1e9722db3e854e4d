#pragma once

#include <stdexcept>
#include <string>

namespace destab {

// Error families map onto CLI exit codes: input errors -> 2, failed
// verification oracles -> 3, resource guards -> 4.
enum class ErrorKind { Input, Oracle, Guard, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define DESTAB_DEFINE_ERROR(NAME, KIND)                                        \
  class NAME : public Error {                                                  \
   public:                                                                     \
    explicit NAME(const std::string& what) : Error(ErrorKind::KIND, what) {}   \
  }

DESTAB_DEFINE_ERROR(InputError, Input);        // malformed or inconsistent input
DESTAB_DEFINE_ERROR(CentralSubgroup, Input);   // constant weight vector where a direction is needed
DESTAB_DEFINE_ERROR(SingularMatrix, Input);    // non-invertible matrix where a frame/group element is needed
DESTAB_DEFINE_ERROR(NotInParabolic, Input);    // group element outside the limit-compatible subgroup
DESTAB_DEFINE_ERROR(ZeroVector, Input);        // identically-zero coordinate vector
DESTAB_DEFINE_ERROR(ZeroPolynomial, Input);    // zero polynomial where an equation is needed
DESTAB_DEFINE_ERROR(DegenerateDegree, Input);  // graded piece is zero or everything
DESTAB_DEFINE_ERROR(EmptyScheme, Input);       // unit ideal: no projective scheme to work with
DESTAB_DEFINE_ERROR(Degenerate, Input);        // linear form present: embedding not by a complete system
DESTAB_DEFINE_ERROR(NotStabilized, Input);     // enumerative data did not become polynomial in the window
DESTAB_DEFINE_ERROR(FlatnessViolation, Oracle);
DESTAB_DEFINE_ERROR(OracleMismatch, Oracle);
DESTAB_DEFINE_ERROR(TooLarge, Guard);
DESTAB_DEFINE_ERROR(InternalError, Internal);  // broken invariant inside the library

#undef DESTAB_DEFINE_ERROR

// Budget for combinatorial enumerations (monomials, subsets, sweep grids).
// Defaults to 1e6 and can be overridden through the DESTAB_MAX_CELLS
// environment variable.
unsigned long long max_cells();

// Throws TooLarge when `needed` exceeds the budget; `what` names the
// enumeration for the diagnostic.
void guard_cells(unsigned long long needed, const std::string& what);

}  // namespace destab

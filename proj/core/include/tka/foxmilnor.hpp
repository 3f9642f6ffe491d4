#pragma once

// Decides whether d0 = a * conj(a) * d1 up to a unit for some nonzero a in
// the fraction field of the Laurent ring.
//
// With n_pi the multiplicity of the irreducible class pi in d0 minus that in
// d1, such an a exists iff n_pi = n_conj(pi) for every class and n_pi is even
// whenever pi is associate to its own conjugate.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tka/diagram.hpp"
#include "tka/laurent.hpp"

namespace tka {

enum class FMStatus { Pass, Fail, Vacuous };

enum class FMReason { OddSelfConjugate, ConjugateMismatch, ZeroMismatch };

/// a = p / q, so d0 * q * conj(q) and d1 * p * conj(p) are associate.
struct FMWitness {
  LaurentPoly p;
  LaurentPoly q;
};

struct FMCertificate {
  LaurentPoly factor;   // canonical irreducible; zero for ZeroMismatch
  int net_exponent = 0;
  FMReason reason = FMReason::OddSelfConjugate;
};

struct FMVerdict {
  FMStatus status = FMStatus::Fail;
  std::optional<FMWitness> witness;
  std::optional<FMCertificate> certificate;
  /// Result of square_pretest; absent when an input is zero.
  std::optional<bool> pretest;

  /// Pass and Vacuous both mean the relation holds.
  bool holds() const noexcept { return status != FMStatus::Fail; }
};

const char* to_string(FMStatus s);
const char* to_string(FMReason r);

/// Necessary condition at t = -1, x = 1: |d0 * d1| there is a perfect
/// square. Throws DomainError if either input is zero.
bool square_pretest(const LaurentPoly& d0, const LaurentPoly& d1);

/// Nonzero n_pi, keyed by canonical irreducible and sorted. Throws
/// DomainError if either input is zero.
std::vector<std::pair<LaurentPoly, int>> net_exponents(const LaurentPoly& d0, const LaurentPoly& d1);

/// Inputs from different rings are compared in the larger one. A passing
/// verdict carries a witness that has been multiplied out and checked.
FMVerdict fm_check(const LaurentPoly& d0, const LaurentPoly& d1);

/// fm_check on the Alexander polynomials. Throws ContextMismatch when the
/// genera differ.
FMVerdict fm_check_diagrams(const MarkedDiagram& a, const MarkedDiagram& b);

}  // namespace tka

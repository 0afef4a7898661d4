#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/errors.hpp"
#include "fusion/ring.hpp"

namespace fusion {

enum class Axiom {
  DimensionPositive,
  DualInvolution,
  UnitLaw,
  Duality,
  Frobenius,
  Conjugation,
  Associativity,
  DimensionHomomorphism,
};

std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::vector<std::string> witness;  // labels (a, b, c, ...)
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Set for generated rings: identities were checked on the truncation only.
  std::optional<int> checked_depth;

  bool ok() const { return violations.empty(); }
  bool has(Axiom axiom) const;
  std::string summary() const;
};

// Checks every fusion-ring axiom on the truncation. Identities that need a
// product outside the explored basis are skipped.
ValidationReport validate_ring(Truncation const& basis);
ValidationReport validate_ring(FusionRing const& ring, int depth = 6);

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(ValidationReport report)
      : Error("fusion ring axioms violated: " + report.summary()),
        report_(std::move(report)) {}

  ValidationReport const& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace fusion

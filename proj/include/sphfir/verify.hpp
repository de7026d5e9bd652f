#ifndef SPHFIR_VERIFY_HPP
#define SPHFIR_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sphfir {

// Self-contained numerical verification suites: orthonormality, unitarity,
// the rotation theorem, and the SO(3) product-form equivalences. The full
// level adds the brute-force SO(3) comparisons at L = 4.

enum class VerifyLevel { Quick, Full };

struct VerifyCheck {
  std::string name;
  double measured;   // worst error observed
  double tolerance;
  bool pass;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

VerifyReport run_verify(VerifyLevel level, std::ostream* progress = nullptr);

}  // namespace sphfir

#endif

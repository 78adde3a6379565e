#pragma once
// Randomized and exhaustive verification suites shared by the command line and the acceptance run.

#include <cstdint>
#include <string>

namespace opgpd {

struct SuiteResult {
  std::string name;
  long long instances = 0;
  long long failures = 0;
  std::string first_failure;  // empty when everything passed
  bool ok() const { return failures == 0 && instances > 0; }
};

// Operad axioms: sequential and parallel associativity, units, interchange of the two insertions,
// equivariance and (where present) functoriality in the morphisms.
SuiteResult copb_axioms(std::uint64_t seed, int count);      // n + m <= 5, braid words <= 8
SuiteResult prime_axioms(std::uint64_t seed, int count);     // decomposed parenthesized model
SuiteResult cd_axioms(std::uint64_t seed, int count);        // N = 3, r <= 4
SuiteResult papcd_axioms(std::uint64_t seed, int count);     // N = 2
SuiteResult voronov_axioms(std::uint64_t seed, int count);   // N = 2

// apply_phi against open and closed insertion at N = 2.
SuiteResult apply_phi_morphism(std::uint64_t seed, int count);
// recompose o decompose and evaluate o to_generator_word on random morphisms with n + m <= 4.
SuiteResult decomposition_roundtrip(std::uint64_t seed, int count);
// zeta_inverse then zeta on every morphism with n, m <= 2 and braid words of at most 4 letters.
SuiteResult zeta_exhaustive();
// Composition transported through the triple description.
SuiteResult zeta_composition(std::uint64_t seed, int count);

}  // namespace opgpd

#ifndef MCGORBIT_SELFTEST_HPP_
#define MCGORBIT_SELFTEST_HPP_

// Structural verification suites: exact mapping-class-group relation checks
// (generator/inverse identities, braid and disjoint-support commutation,
// fixed elements, relator conjugacy, the mixing-twist delta image) and
// randomized representation-action axioms (validity preservation, the left
// action law, canonical-form/conjugator-oracle agreement, puncture conjugacy
// under pure words).

#include <cstdint>
#include <string>
#include <vector>

namespace mcgorbit {

struct SelftestReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// rounds scales the randomized part; the relation part is deterministic.
SelftestReport run_selftest(std::uint64_t seed = 0x5eed5eed, int rounds = 40);

}  // namespace mcgorbit

#endif  // MCGORBIT_SELFTEST_HPP_

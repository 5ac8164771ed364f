#ifndef MCGORBIT_ORBIT_HPP_
#define MCGORBIT_ORBIT_HPP_

// Breadth-first enumeration of mapping class group orbits of canonical
// conjugacy classes, under the full group or its pure (puncture-fixing)
// subgroup. Pure orbits are computed by tracking the induced puncture
// permutation alongside each class and keeping the classes reached with the
// identity permutation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcgorbit/mcg.hpp"
#include "mcgorbit/reps.hpp"

namespace mcgorbit {

enum class OrbitGroup { Pure, Full };
enum class OrbitStatus { Finite, CapExceeded };

struct OrbitWitness {
  std::vector<GenName> word;  // path from the start class to the last new class
  std::string from_class;
  std::string to_class;
};

struct OrbitResult {
  OrbitStatus status = OrbitStatus::Finite;
  OrbitGroup group = OrbitGroup::Full;
  std::int64_t size = 0;       // classes in the requested orbit flavor
  std::int64_t full_size = 0;  // distinct classes reached in total
  std::int64_t cap = 0;
  std::vector<std::string> generators_used;
  std::optional<OrbitWitness> witness;  // present when the cap was exceeded
};

// Requires a valid representation and cap >= 1. Finite status means the
// class set is closed under every generator and inverse; CapExceeded is
// evidence of growth, never a proof of infinitude.
OrbitResult orbit(const AnyRep& rep, OrbitGroup group, std::int64_t cap);

// True iff the first `count` iterates gen^0, gen^1, ..., gen^{count-1}
// applied to rep produce pairwise distinct canonical classes.
bool suborbit_probe(const AnyRep& rep, const GenName& gen, int count);

std::string to_string(OrbitGroup group);
std::string to_string(OrbitStatus status);

}  // namespace mcgorbit

#endif  // MCGORBIT_ORBIT_HPP_

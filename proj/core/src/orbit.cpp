#include "mcgorbit/orbit.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mcgorbit {

namespace {

std::string perm_key(const std::vector<int>& perm) {
  std::string s;
  for (int v : perm) {
    s += std::to_string(v);
    s += '.';
  }
  return s;
}

std::vector<int> compose_perm(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[static_cast<std::size_t>(inner[i])];
  }
  return out;
}

bool is_identity_perm(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != static_cast<int>(i)) return false;
  }
  return true;
}

struct State {
  AnyRep rep;  // canonical representative
  std::vector<int> perm;
  std::int64_t parent = -1;
  GenName via;
};

}  // namespace

OrbitResult orbit(const AnyRep& rep, OrbitGroup group, std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("orbit cap must be >= 1");
  if (!validate(rep)) throw std::invalid_argument("orbit requires a valid representation");

  const int g = genus_of(rep);
  const int n = punctures_of(rep);
  const AutTable table(g, n);

  std::vector<GenName> moves;
  for (const GenName& gen : table.generators()) {
    moves.push_back(gen);
    moves.push_back(gen.inverse());
  }

  OrbitResult result;
  result.group = group;
  result.cap = cap;
  for (const GenName& gen : table.generators()) {
    result.generators_used.push_back(to_string(gen));
  }

  const bool pure = group == OrbitGroup::Pure;

  std::vector<State> states;
  std::unordered_set<std::string> visited_states;   // class bytes (+ perm in pure mode)
  std::unordered_map<std::string, std::int64_t> class_ids;
  std::unordered_set<std::string> pure_classes;     // classes reached with identity perm

  Canonicalized start = canonicalize(rep);
  std::vector<int> id_perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id_perm[static_cast<std::size_t>(i)] = i;

  states.push_back({start.representative, id_perm, -1, tau(1)});
  visited_states.insert(pure ? start.cls.bytes + "#" + perm_key(id_perm) : start.cls.bytes);
  class_ids.emplace(start.cls.bytes, 0);
  pure_classes.insert(start.cls.bytes);

  std::deque<std::int64_t> queue{0};
  bool capped = false;
  std::int64_t cap_state = -1;
  std::string cap_class;

  while (!queue.empty() && !capped) {
    const std::int64_t cur = queue.front();
    queue.pop_front();
    for (const GenName& mv : moves) {
      AnyRep moved = act(mv, states[static_cast<std::size_t>(cur)].rep, table);
      Canonicalized canon = canonicalize(moved);
      std::vector<int> perm;
      if (pure) {
        // Puncture permutation of mv; powers share it since half-twist
        // permutations are involutions.
        const std::vector<int>& mv_perm = table.forward({mv.family, mv.index, 1}).perm;
        perm = compose_perm(mv_perm, states[static_cast<std::size_t>(cur)].perm);
      }
      const std::string state_key = pure ? canon.cls.bytes + "#" + perm_key(perm) : canon.cls.bytes;
      if (!visited_states.insert(state_key).second) continue;

      auto [it, fresh] = class_ids.emplace(canon.cls.bytes,
                                           static_cast<std::int64_t>(class_ids.size()));
      if (pure && is_identity_perm(perm)) pure_classes.insert(canon.cls.bytes);

      states.push_back({std::move(canon.representative), std::move(perm), cur, mv});
      const std::int64_t sid = static_cast<std::int64_t>(states.size()) - 1;
      if (fresh && static_cast<std::int64_t>(class_ids.size()) > cap) {
        capped = true;
        cap_state = sid;
        cap_class = it->first;
        break;
      }
      queue.push_back(sid);
    }
    // The expanded representative is no longer needed; witnesses only use
    // the parent chain.
    states[static_cast<std::size_t>(cur)].rep = AnyRep{};
  }

  result.full_size = static_cast<std::int64_t>(class_ids.size());
  result.size = pure ? static_cast<std::int64_t>(pure_classes.size()) : result.full_size;
  if (capped) {
    result.status = OrbitStatus::CapExceeded;
    OrbitWitness w;
    for (std::int64_t s = cap_state; s > 0; s = states[static_cast<std::size_t>(s)].parent) {
      w.word.push_back(states[static_cast<std::size_t>(s)].via);
    }
    std::reverse(w.word.begin(), w.word.end());
    w.from_class = start.cls.bytes;
    w.to_class = cap_class;
    result.witness = std::move(w);
  } else {
    result.status = OrbitStatus::Finite;
  }
  return result;
}

bool suborbit_probe(const AnyRep& rep, const GenName& gen, int count) {
  if (count < 1) throw std::invalid_argument("suborbit_probe count must be >= 1");
  if (!validate(rep)) throw std::invalid_argument("suborbit_probe requires a valid representation");
  const AutTable table(genus_of(rep), punctures_of(rep));
  std::unordered_set<std::string> seen;
  AnyRep cur = rep;
  for (int k = 0; k < count; ++k) {
    if (!seen.insert(canonicalize(cur).cls.bytes).second) return false;
    if (k + 1 < count) cur = act(gen, cur, table);
  }
  return true;
}

std::string to_string(OrbitGroup group) { return group == OrbitGroup::Pure ? "pure" : "full"; }

std::string to_string(OrbitStatus status) {
  return status == OrbitStatus::Finite ? "finite" : "cap_exceeded";
}

}  // namespace mcgorbit

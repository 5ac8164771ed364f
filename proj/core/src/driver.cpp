#include "mcgorbit/driver.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "mcgorbit/classify.hpp"
#include "mcgorbit/cyclo.hpp"
#include "mcgorbit/mcg.hpp"
#include "mcgorbit/orbit.hpp"
#include "mcgorbit/reps.hpp"
#include "mcgorbit/selftest.hpp"

namespace mcgorbit {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Problem {
  int g = 1;
  int n = 0;
  FieldPtr field;
  AnyRep rep;
  std::int64_t cap = 100000;
  OrbitGroup group = OrbitGroup::Pure;
};

CycloElt parse_elt(const ordered_json& j, const FieldPtr& field, const std::string& where) {
  if (!j.is_array()) {
    throw std::invalid_argument(where + ": expected an array of rational strings");
  }
  std::vector<std::string> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) {
      throw std::invalid_argument(where + ": coefficients must be exact strings, not numbers");
    }
    coeffs.push_back(c.get<std::string>());
  }
  try {
    return CycloElt::from_strings(field, coeffs);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

ordered_json elt_to_json(const CycloElt& e) {
  ordered_json out = ordered_json::array();
  for (const std::string& s : e.to_strings()) out.push_back(s);
  return out;
}

std::string gen_label(int slot, int g, int n) {
  const Letter l = letter_at(slot, g, n);
  static const char* kKind[3] = {"alpha", "beta", "gamma"};
  return std::string(kKind[static_cast<int>(l.kind())]) + "_" + std::to_string(l.index());
}

AnyRep parse_rep(const ordered_json& j, int g, int n, const FieldPtr& field) {
  const std::string kind = j.at("kind").get<std::string>();
  const int m = generator_count(g, n);
  auto entry_at = [&](int slot) -> const ordered_json& {
    const Letter l = letter_at(slot, g, n);
    static const char* kKey[3] = {"alpha", "beta", "gamma"};
    const auto& arr = j.at(kKey[static_cast<int>(l.kind())]);
    const int expected = l.kind() == Kind::Gamma ? n : g;
    if (!arr.is_array() || static_cast<int>(arr.size()) != expected) {
      throw std::invalid_argument(std::string(kKey[static_cast<int>(l.kind())]) + ": expected " +
                                  std::to_string(expected) + " entries");
    }
    return arr.at(static_cast<std::size_t>(l.index() - 1));
  };

  if (kind == "scalar") {
    ScalarRep rep{g, n, field, {}};
    for (int s = 0; s < m; ++s) {
      CycloElt v = parse_elt(entry_at(s), field, gen_label(s, g, n));
      if (v.is_zero()) {
        throw std::invalid_argument(gen_label(s, g, n) + ": scalar value must be nonzero");
      }
      rep.values.push_back(std::move(v));
    }
    return rep;
  }
  if (kind == "affine") {
    AffineRep rep{g, n, field, {}};
    for (int s = 0; s < m; ++s) {
      const auto& e = entry_at(s);
      CycloElt a = parse_elt(e.at("a"), field, gen_label(s, g, n) + ".a");
      CycloElt b = parse_elt(e.at("b"), field, gen_label(s, g, n) + ".b");
      if (a.is_zero()) {
        throw std::invalid_argument(gen_label(s, g, n) + ": linear part must be nonzero");
      }
      rep.values.push_back({std::move(a), std::move(b)});
    }
    return rep;
  }
  if (kind == "gl2_upper") {
    Gl2Rep rep{g, n, field, {}};
    for (int s = 0; s < m; ++s) {
      const auto& e = entry_at(s);
      CycloElt top = parse_elt(e.at("top"), field, gen_label(s, g, n) + ".top");
      CycloElt corner = parse_elt(e.at("corner"), field, gen_label(s, g, n) + ".corner");
      CycloElt bottom = parse_elt(e.at("bottom"), field, gen_label(s, g, n) + ".bottom");
      if (top.is_zero() || bottom.is_zero()) {
        throw std::invalid_argument(gen_label(s, g, n) + ": diagonal entries must be nonzero");
      }
      rep.values.push_back({std::move(top), std::move(corner), std::move(bottom)});
    }
    return rep;
  }
  throw std::invalid_argument("unknown representation kind '" + kind + "'");
}

ordered_json rep_to_json(const AnyRep& rep) {
  ordered_json out;
  out["kind"] = kind_name(kind_of(rep));
  const int g = genus_of(rep);
  const int n = punctures_of(rep);
  ordered_json alpha_arr = ordered_json::array();
  ordered_json beta_arr = ordered_json::array();
  ordered_json gamma_arr = ordered_json::array();
  auto emit = [&](int slot) -> ordered_json {
    return std::visit(
        [&](const auto& r) -> ordered_json {
          using T = std::decay_t<decltype(r)>;
          const auto& v = r.values[static_cast<std::size_t>(slot)];
          if constexpr (std::is_same_v<T, ScalarRep>) {
            return elt_to_json(v);
          } else if constexpr (std::is_same_v<T, AffineRep>) {
            return ordered_json{{"a", elt_to_json(v.lin)}, {"b", elt_to_json(v.trans)}};
          } else {
            return ordered_json{{"top", elt_to_json(v.top)},
                                {"corner", elt_to_json(v.corner)},
                                {"bottom", elt_to_json(v.bottom)}};
          }
        },
        rep);
  };
  for (int s = 0; s < generator_count(g, n); ++s) {
    const Letter l = letter_at(s, g, n);
    switch (l.kind()) {
      case Kind::Alpha: alpha_arr.push_back(emit(s)); break;
      case Kind::Beta: beta_arr.push_back(emit(s)); break;
      case Kind::Gamma: gamma_arr.push_back(emit(s)); break;
    }
  }
  out["alpha"] = std::move(alpha_arr);
  out["beta"] = std::move(beta_arr);
  out["gamma"] = std::move(gamma_arr);
  return out;
}

Problem parse_problem(const std::string& config_text) {
  ordered_json j = ordered_json::parse(config_text);
  Problem p;
  p.g = j.at("g").get<int>();
  p.n = j.at("n").get<int>();
  if (p.g < 1) throw std::invalid_argument("g must be >= 1 (genus zero is out of range)");
  if (p.n < 0) throw std::invalid_argument("n must be >= 0");
  const std::int64_t order = j.at("N").get<std::int64_t>();
  if (order < 1) throw std::invalid_argument("N must be >= 1");
  p.field = make_field(order);
  p.rep = parse_rep(j.at("representation"), p.g, p.n, p.field);
  if (j.contains("options")) {
    const auto& o = j.at("options");
    if (o.contains("cap")) {
      p.cap = o.at("cap").get<std::int64_t>();
      if (p.cap < 1) throw std::invalid_argument("options.cap must be >= 1");
    }
    if (o.contains("group")) {
      const std::string flavor = o.at("group").get<std::string>();
      if (flavor == "pure") {
        p.group = OrbitGroup::Pure;
      } else if (flavor == "full") {
        p.group = OrbitGroup::Full;
      } else {
        throw std::invalid_argument("options.group must be 'pure' or 'full'");
      }
    }
  }
  return p;
}

std::string relator_value(const AnyRep& rep) {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        const auto v = eval(r, presentation(r.g, r.n).relator);
        if constexpr (std::is_same_v<T, ScalarRep>) {
          return v.serialize();
        } else if constexpr (std::is_same_v<T, AffineRep>) {
          return v.lin.serialize() + "|" + v.trans.serialize();
        } else {
          return v.top.serialize() + "|" + v.corner.serialize() + "|" + v.bottom.serialize();
        }
      },
      rep);
}

ordered_json bounds_to_json(const Bounds& b) {
  ordered_json out = ordered_json::array();
  for (const mpz_class& v : {b.lower, b.upper}) {
    if (v.fits_slong_p()) {
      out.push_back(static_cast<std::int64_t>(v.get_si()));
    } else {
      out.push_back(v.get_str());
    }
  }
  return out;
}

ordered_json classification_to_json(const Classification& c) {
  ordered_json out;
  out["verdict"] = to_string(c.verdict);
  out["reason"] = to_string(c.reason);
  out["bounds"] = c.bounds ? bounds_to_json(*c.bounds) : ordered_json(nullptr);
  if (c.genus1) {
    ordered_json g1;
    g1["mu"] = elt_to_json(c.genus1->mu);
    g1["mu_order"] = c.genus1->mu_order;
    ordered_json carr = ordered_json::array();
    for (const CycloElt& cj : c.genus1->c) carr.push_back(elt_to_json(cj));
    g1["c"] = std::move(carr);
    g1["n_prime"] = c.genus1->n_prime;
    out["genus1"] = std::move(g1);
  } else {
    out["genus1"] = nullptr;
  }
  if (c.prepared_word) out["prepared_word"] = to_string(*c.prepared_word);
  out["algebraizability_note"] = c.note;
  return out;
}

RunOutcome render(int exit_code, const ordered_json& j) {
  return {exit_code, j.dump()};
}

RunOutcome run_parsed(const std::string& command, const std::string& config_text,
                      const RunOptions& options) {
  if (command == "selftest") {
    const int rounds = options.rounds ? static_cast<int>(*options.rounds) : 40;
    const SelftestReport report = run_selftest(0x5eed5eed, rounds);
    ordered_json j;
    j["command"] = "selftest";
    j["checks"] = report.checks;
    j["failures"] = report.failures;
    return render(report.ok() ? 0 : 1, j);
  }

  Problem p = parse_problem(config_text);
  if (options.cap) {
    if (*options.cap < 1) throw std::invalid_argument("--cap must be >= 1");
    p.cap = *options.cap;
  }
  if (options.group) {
    if (*options.group == "pure") {
      p.group = OrbitGroup::Pure;
    } else if (*options.group == "full") {
      p.group = OrbitGroup::Full;
    } else {
      throw std::invalid_argument("--group must be 'pure' or 'full'");
    }
  }

  const bool valid = validate(p.rep);
  if (command == "validate") {
    ordered_json j;
    j["command"] = "validate";
    j["kind"] = kind_name(kind_of(p.rep));
    j["valid"] = valid;
    if (!valid) j["relator_value"] = relator_value(p.rep);
    j["abelian"] = is_abelian(p.rep);
    if (const auto* gl2 = std::get_if<Gl2Rep>(&p.rep)) {
      j["totally_reducible"] = is_totally_reducible(*gl2);
    }
    return render(valid ? 0 : 2, j);
  }
  if (!valid) {
    ordered_json j;
    j["error"] = "representation does not satisfy the relator";
    j["relator_value"] = relator_value(p.rep);
    return render(2, j);
  }

  if (command == "act") {
    if (!options.word) throw std::invalid_argument("act requires --word");
    const std::vector<GenName> word = parse_mcg_word(*options.word, p.g, p.n);
    const AutTable table(p.g, p.n);
    const AnyRep moved = act_word(word, p.rep, table);
    ordered_json j;
    j["command"] = "act";
    j["word"] = to_string(word);
    j["representation"] = rep_to_json(moved);
    j["canonical_class"] = canonicalize(moved).cls.bytes;
    return render(0, j);
  }
  if (command == "orbit") {
    const OrbitResult result = orbit(p.rep, p.group, p.cap);
    ordered_json j;
    j["command"] = "orbit";
    j["status"] = to_string(result.status);
    j["orbit_size"] = result.size;
    j["full_orbit_size"] = result.full_size;
    j["group"] = to_string(result.group);
    j["cap"] = result.cap;
    j["generators_used"] = result.generators_used;
    if (result.witness) {
      ordered_json w;
      w["word"] = to_string(result.witness->word);
      w["from_class"] = result.witness->from_class;
      w["to_class"] = result.witness->to_class;
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    return render(0, j);
  }
  if (command == "classify" || command == "bounds") {
    try {
      const Classification c = classify(p.rep, p.cap);
      ordered_json j = classification_to_json(c);
      ordered_json out;
      out["command"] = command;
      if (command == "bounds") {
        out["verdict"] = j["verdict"];
        out["reason"] = j["reason"];
        out["bounds"] = j["bounds"];
      } else {
        for (auto& [k, v] : j.items()) out[k] = v;
      }
      return render(0, out);
    } catch (const SearchCapExhausted& e) {
      ordered_json j;
      j["error"] = std::string("search cap exhausted: ") + e.what();
      return render(3, j);
    }
  }
  throw std::invalid_argument("unknown command '" + command + "'");
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

RunOutcome run_command(const std::string& command, const std::string& config_text,
                       const RunOptions& options) {
  try {
    return run_parsed(command, config_text, options);
  } catch (const std::exception& e) {
    ordered_json j;
    j["error"] = e.what();
    return {1, j.dump()};
  }
}

int run_sweep(const std::string& input_path, const std::string& out_path) {
  std::ifstream in(input_path);
  if (!in) return 1;

  std::unordered_set<std::string> done;
  {
    std::ifstream existing(out_path);
    std::string line;
    while (std::getline(existing, line)) {
      line = trim(line);
      if (line.empty()) continue;
      try {
        const auto j = ordered_json::parse(line);
        if (j.contains("key")) done.insert(j.at("key").get<std::string>());
      } catch (const std::exception&) {
        // Unreadable result lines are ignored; their inputs will rerun.
      }
    }
  }

  std::ofstream out(out_path, std::ios::app);
  if (!out) return 1;

  std::string line;
  while (std::getline(in, line)) {
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    char keybuf[32];
    std::snprintf(keybuf, sizeof(keybuf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(trimmed)));
    const std::string key(keybuf);
    if (done.count(key)) continue;

    std::string command = "?";
    RunOutcome outcome;
    try {
      const auto j = ordered_json::parse(trimmed);
      command = j.at("command").get<std::string>();
      RunOptions options;
      if (j.contains("word")) options.word = j.at("word").get<std::string>();
      outcome = run_command(command, trimmed, options);
    } catch (const std::exception& e) {
      ordered_json err;
      err["error"] = e.what();
      outcome = {1, err.dump()};
    }

    ordered_json result;
    result["key"] = key;
    result["command"] = command;
    result["exit"] = outcome.exit_code;
    result["report"] = ordered_json::parse(outcome.report);
    out << result.dump() << "\n";
    out.flush();
    done.insert(key);
  }
  return 0;
}

}  // namespace mcgorbit

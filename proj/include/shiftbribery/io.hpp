#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "shiftbribery/hardness.hpp"
#include "shiftbribery/pricing.hpp"

namespace shiftbribery {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

struct InstanceBundle {
  Instance instance;
  Rule rule;
};

/// Instance file, one canonical text form:
///   shiftbribery v1
///   <m> <n>
///   p <index>
///   rule borda | rule scoring | rule copeland <alpha>
///   then per voter: a line of m candidate indices (rank 1 first), with
///   " | w: <m rationals>" appended under the scoring rule, followed by
///   "prices: <psi(1..T) as rationals or inf>".
std::string serialize_instance(const Instance& inst, const Rule& rule);
InstanceBundle parse_instance(const std::string& text);

/// First line "n m", then m lines "u v" (0-based endpoints).
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// First line "N M", then M lines of space-separated element indices.
SetCoverInstance parse_setcover(const std::string& text);

/// One line of per-voter shift counts.
std::string serialize_action(const ShiftAction& action);
ShiftAction parse_action(const std::string& text);

enum class RandomPriceFamily { Unit, UniformAon, OneInfAon, General };

std::optional<RandomPriceFamily> random_family_from_name(const std::string& name);
const char* to_string(RandomPriceFamily family);

/// Deterministic per seed: uniform preference permutations, prices drawn
/// from the requested family ((1, inf) voters infinite with probability
/// 1/3; general prices use nondecreasing integer steps in [0, 5]). Optional
/// random nonincreasing integer scoring vectors.
Instance random_instance(uint64_t seed, int m, int n, RandomPriceFamily family,
                         bool with_scoring_vectors = false);

struct RunReport {
  std::string algorithm;
  std::optional<Rational> eps;
  ExtRational cost = ExtRational::infinity();
  long long unit_shifts = 0;
  bool success = false;
  std::optional<ExtRational> oracle_cost;
  double wall_ms = 0;
  std::optional<ShiftAction> action;
};

/// One JSON object per line; rationals are serialized as canonical strings.
std::string to_json_line(const RunReport& report);

}  // namespace shiftbribery

#include "shiftbribery/io.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

namespace shiftbribery {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

struct LineReader {
  std::vector<std::string> lines;
  int next = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }

  bool done() const { return next >= static_cast<int>(lines.size()); }
  int line_no() const { return next; }  // 1-based number of the line just read
  std::string take(const char* what) {
    if (done()) throw ParseError(static_cast<int>(lines.size()) + 1,
                                 std::string("missing ") + what);
    return lines[next++];
  }
};

int parse_int(const std::string& token, int line, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
  }
}

}  // namespace

std::string serialize_instance(const Instance& inst, const Rule& rule) {
  std::ostringstream os;
  os << "shiftbribery v1\n";
  os << inst.candidate_count() << " " << inst.voter_count() << "\n";
  os << "p " << inst.preferred << "\n";
  if (rule.is_copeland())
    os << "rule copeland " << to_string(rule.alpha) << "\n";
  else
    os << "rule " << (inst.election.has_scoring_vectors() ? "scoring" : "borda") << "\n";
  for (int v = 0; v < inst.voter_count(); ++v) {
    for (int r = 1; r <= inst.candidate_count(); ++r) {
      if (r > 1) os << " ";
      os << inst.election.candidate_at(v, r);
    }
    if (inst.election.has_scoring_vectors()) {
      os << " | w:";
      for (const auto& w : inst.election.scoring_vectors()[v]) os << " " << to_string(w);
    }
    os << "\nprices:";
    for (int t = 1; t <= inst.max_shift(v); ++t) os << " " << to_string(inst.price(v, t));
    os << "\n";
  }
  return os.str();
}

InstanceBundle parse_instance(const std::string& text) {
  LineReader reader(text);
  if (reader.done() || reader.take("header") != "shiftbribery v1")
    throw ParseError(1, "missing header 'shiftbribery v1'");

  auto dims = split_ws(reader.take("size line"));
  if (dims.size() != 2) throw ParseError(reader.line_no(), "expected '<m> <n>'");
  int m = parse_int(dims[0], reader.line_no(), "candidate count");
  int n = parse_int(dims[1], reader.line_no(), "voter count");
  if (m < 1 || n < 1) throw ParseError(reader.line_no(), "m and n must be positive");

  auto pline = split_ws(reader.take("preferred-candidate line"));
  if (pline.size() != 2 || pline[0] != "p")
    throw ParseError(reader.line_no(), "expected 'p <index>'");
  int p = parse_int(pline[1], reader.line_no(), "preferred candidate");
  if (p < 0 || p >= m) throw ParseError(reader.line_no(), "preferred candidate out of range");

  auto rline = split_ws(reader.take("rule line"));
  Rule rule = Rule::positional();
  bool scoring = false;
  if (rline.size() == 2 && rline[0] == "rule" && rline[1] == "borda") {
  } else if (rline.size() == 2 && rline[0] == "rule" && rline[1] == "scoring") {
    scoring = true;
  } else if (rline.size() == 3 && rline[0] == "rule" && rline[1] == "copeland") {
    try {
      rule = Rule::copeland(parse_rational(rline[2]));
    } catch (const std::exception& e) {
      throw ParseError(reader.line_no(), e.what());
    }
  } else {
    throw ParseError(reader.line_no(), "expected 'rule borda|scoring|copeland <alpha>'");
  }

  std::vector<std::vector<int>> prefs;
  std::vector<std::vector<Rational>> weights;
  std::vector<PriceFunction> prices;
  for (int v = 0; v < n; ++v) {
    std::string pref_line = reader.take("preference line");
    int pref_no = reader.line_no();
    std::string weight_part;
    auto bar = pref_line.find('|');
    if (bar != std::string::npos) {
      weight_part = pref_line.substr(bar + 1);
      pref_line = pref_line.substr(0, bar);
    }
    auto tokens = split_ws(pref_line);
    if (static_cast<int>(tokens.size()) != m)
      throw ParseError(pref_no, "expected " + std::to_string(m) + " candidate indices");
    std::vector<int> order;
    std::vector<bool> seen(m, false);
    for (const auto& tok : tokens) {
      int c = parse_int(tok, pref_no, "candidate index");
      if (c < 0 || c >= m) throw ParseError(pref_no, "candidate index out of range");
      if (seen[c]) throw ParseError(pref_no, "rank list is not a permutation");
      seen[c] = true;
      order.push_back(c);
    }
    prefs.push_back(std::move(order));

    // 'scoring' requires a weight suffix; 'copeland' permits one (the
    // vectors live in the election); 'borda' forbids it.
    if (scoring && bar == std::string::npos)
      throw ParseError(pref_no, "scoring rule needs ' | w: <weights>' per voter");
    if (!scoring && !rule.is_copeland() && bar != std::string::npos)
      throw ParseError(pref_no, "scoring vector given but the rule line says 'borda'");
    if (bar != std::string::npos) {
      auto wtokens = split_ws(weight_part);
      if (wtokens.empty() || wtokens[0] != "w:")
        throw ParseError(pref_no, "expected ' | w: <weights>'");
      if (static_cast<int>(wtokens.size()) != m + 1)
        throw ParseError(pref_no, "expected " + std::to_string(m) + " weights");
      std::vector<Rational> w;
      for (size_t i = 1; i < wtokens.size(); ++i) {
        try {
          w.push_back(parse_rational(wtokens[i]));
        } catch (const std::exception& e) {
          throw ParseError(pref_no, e.what());
        }
      }
      weights.push_back(std::move(w));
    }

    std::string price_line = reader.take("prices line");
    int price_no = reader.line_no();
    auto ptokens = split_ws(price_line);
    if (ptokens.empty() || ptokens[0] != "prices:")
      throw ParseError(price_no, "expected 'prices: ...'");
    std::vector<ExtRational> psi;
    for (size_t i = 1; i < ptokens.size(); ++i) {
      try {
        psi.push_back(parse_ext_rational(ptokens[i]));
      } catch (const std::exception& e) {
        throw ParseError(price_no, e.what());
      }
    }
    try {
      prices.emplace_back(std::move(psi));
    } catch (const std::exception& e) {
      throw ParseError(price_no, e.what());  // non-monotone prices
    }
  }
  if (!reader.done()) {
    auto rest = split_ws(reader.take("end"));
    if (!rest.empty()) throw ParseError(reader.line_no(), "trailing content");
  }

  try {
    Election election(m, std::move(prefs), std::move(weights));
    return InstanceBundle{Instance(std::move(election), p, std::move(prices)), rule};
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
}

Graph parse_graph(const std::string& text) {
  LineReader reader(text);
  auto head = split_ws(reader.take("graph header"));
  if (head.size() != 2) throw ParseError(reader.line_no(), "expected 'n m'");
  int n = parse_int(head[0], reader.line_no(), "vertex count");
  int m = parse_int(head[1], reader.line_no(), "edge count");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    auto tok = split_ws(reader.take("edge line"));
    if (tok.size() != 2) throw ParseError(reader.line_no(), "expected 'u v'");
    edges.emplace_back(parse_int(tok[0], reader.line_no(), "endpoint"),
                       parse_int(tok[1], reader.line_no(), "endpoint"));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices << " " << g.edges.size() << "\n";
  for (const auto& [u, v] : g.edges) os << u << " " << v << "\n";
  return os.str();
}

SetCoverInstance parse_setcover(const std::string& text) {
  LineReader reader(text);
  auto head = split_ws(reader.take("set cover header"));
  if (head.size() != 2) throw ParseError(reader.line_no(), "expected 'N M'");
  int universe = parse_int(head[0], reader.line_no(), "universe size");
  int count = parse_int(head[1], reader.line_no(), "set count");
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < count; ++i) {
    auto tok = split_ws(reader.take("set line"));
    std::vector<int> s;
    for (const auto& t : tok) s.push_back(parse_int(t, reader.line_no(), "element"));
    sets.push_back(std::move(s));
  }
  try {
    return SetCoverInstance(universe, std::move(sets));
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_action(const ShiftAction& action) {
  std::ostringstream os;
  for (size_t v = 0; v < action.shifts.size(); ++v) {
    if (v > 0) os << " ";
    os << action.shifts[v];
  }
  os << "\n";
  return os.str();
}

ShiftAction parse_action(const std::string& text) {
  ShiftAction action;
  for (const auto& tok : split_ws(text)) action.shifts.push_back(parse_int(tok, 1, "shift"));
  return action;
}

namespace {

// mt19937_64 output is pinned by the standard, so instances reproduce
// across platforms; rejection sampling avoids the implementation-defined
// distributions.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}

  int below(int n) {
    uint64_t limit = ~0ULL - ~0ULL % static_cast<uint64_t>(n);
    uint64_t x;
    do {
      x = gen();
    } while (x >= limit);
    return static_cast<int>(x % static_cast<uint64_t>(n));
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
    return p;
  }
};

}  // namespace

std::optional<RandomPriceFamily> random_family_from_name(const std::string& name) {
  if (name == "unit") return RandomPriceFamily::Unit;
  if (name == "uniform-aon") return RandomPriceFamily::UniformAon;
  if (name == "one-inf-aon") return RandomPriceFamily::OneInfAon;
  if (name == "general") return RandomPriceFamily::General;
  return std::nullopt;
}

const char* to_string(RandomPriceFamily family) {
  switch (family) {
    case RandomPriceFamily::Unit: return "unit";
    case RandomPriceFamily::UniformAon: return "uniform-aon";
    case RandomPriceFamily::OneInfAon: return "one-inf-aon";
    case RandomPriceFamily::General: return "general";
  }
  return "unit";
}

Instance random_instance(uint64_t seed, int m, int n, RandomPriceFamily family,
                         bool with_scoring_vectors) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m, n >= 1");
  Rng rng(seed);
  std::vector<std::vector<int>> prefs;
  for (int v = 0; v < n; ++v) prefs.push_back(rng.permutation(m));
  std::vector<std::vector<Rational>> weights;
  if (with_scoring_vectors) {
    for (int v = 0; v < n; ++v) {
      std::vector<Rational> w(m);
      w[m - 1] = 0;
      for (int r = m - 2; r >= 0; --r) w[r] = w[r + 1] + rng.below(4);
      weights.push_back(std::move(w));
    }
  }
  int p = rng.below(m);
  Election election(m, std::move(prefs), std::move(weights));
  std::vector<PriceFunction> prices;
  for (int v = 0; v < n; ++v) {
    int max_shift = election.rank_of(v, p) - 1;
    switch (family) {
      case RandomPriceFamily::Unit:
        prices.push_back(PriceFunction::unit(max_shift));
        break;
      case RandomPriceFamily::UniformAon:
        prices.push_back(PriceFunction::all_or_nothing(max_shift, ExtRational(1)));
        break;
      case RandomPriceFamily::OneInfAon:
        prices.push_back(PriceFunction::all_or_nothing(
            max_shift, rng.below(3) == 0 ? ExtRational::infinity() : ExtRational(1)));
        break;
      case RandomPriceFamily::General: {
        std::vector<ExtRational> psi;
        long long total = 0;
        for (int t = 1; t <= max_shift; ++t) {
          total += rng.below(6);
          psi.emplace_back(total);
        }
        prices.emplace_back(std::move(psi));
        break;
      }
    }
  }
  return Instance(std::move(election), p, std::move(prices));
}

std::string to_json_line(const RunReport& report) {
  nlohmann::json j;
  j["algorithm"] = report.algorithm;
  j["eps"] = report.eps ? nlohmann::json(to_string(*report.eps)) : nlohmann::json(nullptr);
  j["cost"] = to_string(report.cost);
  j["unit_shifts"] = report.unit_shifts;
  j["success"] = report.success;
  j["oracle_cost"] =
      report.oracle_cost ? nlohmann::json(to_string(*report.oracle_cost)) : nlohmann::json(nullptr);
  if (report.oracle_cost && report.oracle_cost->is_finite() && report.cost.is_finite() &&
      report.oracle_cost->value() != 0)
    j["ratio"] = to_string(Rational(report.cost.value() / report.oracle_cost->value()));
  else
    j["ratio"] = nullptr;
  j["wall_ms"] = report.wall_ms;
  if (report.action) j["action"] = report.action->shifts;
  return j.dump();
}

}  // namespace shiftbribery

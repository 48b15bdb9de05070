#include "conecheck/betti.hpp"

#include <algorithm>
#include <stdexcept>

namespace conecheck {

namespace {

std::vector<std::vector<BettiEntry>> tag_none(
    std::vector<std::vector<Int>> degrees) {
  std::vector<std::vector<BettiEntry>> steps;
  steps.reserve(degrees.size());
  for (auto& step : degrees) {
    std::vector<BettiEntry> s;
    s.reserve(step.size());
    for (auto& d : step) s.push_back({std::move(d), Strand::none});
    steps.push_back(std::move(s));
  }
  return steps;
}

const char* strand_name(Strand s) {
  switch (s) {
    case Strand::base: return "base";
    case Strand::cone: return "cone";
    default: return "none";
  }
}

Strand strand_from_name(const std::string& name) {
  if (name == "base") return Strand::base;
  if (name == "cone") return Strand::cone;
  if (name == "none") return Strand::none;
  throw ShapeError("BettiTable: unknown strand tag '" + name + "'");
}

}  // namespace

BettiTable::BettiTable(Int ambient, std::vector<std::vector<Int>> step_degrees)
    : BettiTable(std::move(ambient), tag_none(std::move(step_degrees))) {}

BettiTable::BettiTable(Int ambient, std::vector<std::vector<BettiEntry>> steps)
    : ambient_(std::move(ambient)), steps_(std::move(steps)) {
  while (!steps_.empty() && steps_.back().empty()) steps_.pop_back();
  for (auto& step : steps_) {
    std::sort(step.begin(), step.end(),
              [](const BettiEntry& a, const BettiEntry& b) {
                if (a.degree != b.degree) return a.degree < b.degree;
                return static_cast<int>(a.strand) < static_cast<int>(b.strand);
              });
  }
  validate();
}

void BettiTable::validate() const {
  if (ambient_ < 1) throw ShapeError("BettiTable: ambient dimension must be >= 1");
  if (steps_.empty()) throw ShapeError("BettiTable: no steps");
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k].empty())
      throw ShapeError("BettiTable: interior step " + std::to_string(k + 1) +
                       " is empty");
    for (const auto& entry : steps_[k]) {
      if (entry.degree < static_cast<long>(k) + 2)
        throw ShapeError("BettiTable: degree " + to_string(entry.degree) +
                         " at step " + std::to_string(k + 1) +
                         " violates the minimality bound b >= k + 1");
    }
  }
}

std::vector<Int> BettiTable::step_degrees(std::size_t k) const {
  std::vector<Int> out;
  if (k == 0 || k > steps_.size()) return out;
  for (const auto& entry : steps_[k - 1]) out.push_back(entry.degree);
  return out;
}

bool BettiTable::has_strands() const {
  for (const auto& step : steps_)
    for (const auto& entry : step)
      if (entry.strand != Strand::none) return true;
  return false;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json doc;
  doc["ambient"] = ambient_.get_si();
  auto& steps = doc["steps"] = nlohmann::json::array();
  for (const auto& step : steps_) {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& entry : step) s.push_back(entry.degree.get_si());
    steps.push_back(std::move(s));
  }
  if (has_strands()) {
    auto& strands = doc["strands"] = nlohmann::json::array();
    for (const auto& step : steps_) {
      nlohmann::json s = nlohmann::json::array();
      for (const auto& entry : step) s.push_back(strand_name(entry.strand));
      strands.push_back(std::move(s));
    }
  }
  return doc;
}

BettiTable BettiTable::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("ambient") || !doc.contains("steps"))
    throw ShapeError("BettiTable: document needs 'ambient' and 'steps'");
  if (!doc["ambient"].is_number_integer() || !doc["steps"].is_array())
    throw ShapeError("BettiTable: malformed 'ambient' or 'steps'");
  Int ambient = doc["ambient"].get<long>();
  std::vector<std::vector<BettiEntry>> steps;
  for (const auto& s : doc["steps"]) {
    if (!s.is_array()) throw ShapeError("BettiTable: step is not an array");
    std::vector<BettiEntry> step;
    for (const auto& d : s) {
      if (!d.is_number_integer())
        throw ShapeError("BettiTable: degree is not an integer");
      step.push_back({Int(d.get<long>()), Strand::none});
    }
    steps.push_back(std::move(step));
  }
  if (doc.contains("strands")) {
    const auto& strands = doc["strands"];
    if (!strands.is_array() || strands.size() != steps.size())
      throw ShapeError("BettiTable: 'strands' does not match 'steps'");
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (!strands[k].is_array() || strands[k].size() != steps[k].size())
        throw ShapeError("BettiTable: strand row " + std::to_string(k + 1) +
                         " does not match its step");
      for (std::size_t j = 0; j < steps[k].size(); ++j)
        steps[k][j].strand = strand_from_name(strands[k][j].get<std::string>());
    }
  }
  return BettiTable(std::move(ambient), std::move(steps));
}

BettiTable cg_transform(const BettiTable& betti_y, const Int& m) {
  if (m < 2)
    throw UnsupportedMultiplicity("cg_transform: m must be >= 2");
  const Int r = betti_y.ambient() + 1;  // the base curve lives in P^{r-1}
  if (Int(betti_y.step_count()) > r - 2)
    throw ShapeError("cg_transform: table has " +
                     std::to_string(betti_y.step_count()) +
                     " steps but ambient dimension allows at most " +
                     to_string(Int(r - 2)));

  // beta(k), absent steps of a short table counting as empty.
  auto beta = [&](const Int& k) -> std::vector<Int> {
    if (k < 1 || k > Int(betti_y.step_count())) return {};
    return betti_y.step_degrees(k.get_ui());
  };

  std::vector<std::vector<BettiEntry>> steps;
  for (Int k = 1; k <= r - 1; ++k) {
    std::vector<BettiEntry> step;
    if (k == 1) {
      for (Int i = 0; i < r - 1; ++i) step.push_back({m + 1, Strand::cone});
    } else if (k < r - 1) {
      const Int copies = binomial(r - 1, k.get_ui());
      for (Int i = 0; i < copies; ++i) step.push_back({m + k, Strand::cone});
    } else {
      step.push_back({m + r - 1, Strand::cone});
    }
    if (k < r - 1)
      for (const auto& b : beta(k)) step.push_back({b, Strand::base});
    if (k >= 2)
      for (const auto& b : beta(k - 1)) step.push_back({m + b, Strand::cone});
    steps.push_back(std::move(step));
  }
  return BettiTable(r, std::move(steps));
}

RationalPoly hilbert_polynomial(const BettiTable& table) {
  const unsigned long n = table.ambient().get_ui();
  RationalPoly chi = binomial_in_t(0, n);
  Rat sign(-1);
  for (const auto& step : table.steps()) {
    for (const auto& entry : step)
      chi = chi + sign * binomial_in_t(entry.degree, n);
    sign = -sign;
  }
  return chi;
}

BettiTable rational_normal_betti(const Int& e) {
  if (e < 2)
    throw std::invalid_argument("rational_normal_betti: e must be >= 2");
  std::vector<std::vector<Int>> steps;
  for (Int i = 1; i <= e - 1; ++i) {
    const Int count = i * binomial(e, i.get_ui() + 1);
    std::vector<Int> step;
    for (Int c = 0; c < count; ++c) step.push_back(i + 1);
    steps.push_back(std::move(step));
  }
  return BettiTable(e, std::move(steps));
}

BettiTable pure_betti_from_hilbert(const BaseCurve& curve) {
  if (!curve.cg_range())
    throw HypothesisError("pure_betti_from_hilbert: needs e >= 2*gamma + 1");
  const Int& e = curve.marked_degree;
  const Int& gamma = curve.genus;
  // The curve lives in P^{e-gamma}, so the coordinate ring has
  // r = e - gamma + 1 variables and the numerator is (1-t)^r * H(t).
  const Int r = e - gamma + 1;

  // H(t) = 1 + sum_{n>=1} (ne + 1 - gamma) t^n
  //      = e*t/(1-t)^2 + (1-gamma)/(1-t) + gamma, so the numerator is
  // N(t) = e*t*(1-t)^{r-2} + (1-gamma)*(1-t)^{r-1} + gamma*(1-t)^r.
  const RationalPoly one_minus_t({Rat(1), Rat(-1)});
  auto power = [&](Int k) {
    RationalPoly p = RationalPoly::constant(Rat(1));
    for (Int i = 0; i < k; ++i) p = p * one_minus_t;
    return p;
  };
  RationalPoly numerator =
      Rat(e) * (RationalPoly::monomial(Rat(1), 1) * power(r - 2)) +
      Rat(1 - gamma) * power(r - 1) + Rat(gamma) * power(r);

  if (numerator.coeff(0) != 1 || numerator.coeff(1) != 0)
    throw PurityError("pure_betti_from_hilbert: numerator does not start 1 + 0*t",
                      numerator);
  std::vector<std::vector<Int>> steps;
  for (long n = 2; n <= numerator.degree(); ++n) {
    const Rat c = numerator.coeff(static_cast<std::size_t>(n));
    if (c.get_den() != 1)
      throw PurityError("pure_betti_from_hilbert: non-integer coefficient",
                        numerator);
    const Int value(c.get_num());
    // coefficient of t^n belongs to homological step n-1, sign (-1)^{n-1}
    const bool sign_ok = (n % 2 == 0) ? value <= 0 : value >= 0;
    if (!sign_ok)
      throw PurityError(
          "pure_betti_from_hilbert: coefficient of t^" + std::to_string(n) +
              " has the wrong sign for a pure resolution",
          numerator);
    std::vector<Int> step;
    const Int count = abs(value);
    for (Int i = 0; i < count; ++i) step.push_back(Int(n));
    steps.push_back(std::move(step));
  }
  return BettiTable(e - gamma, std::move(steps));
}

bool degree_separation_check(const BettiTable& betti_x, const Int& m) {
  // Quadric-strand degrees at step 2 and cone-strand degrees at step 1.
  // Untagged entries are split by degree: <= m quadric, >= m+1 cone.
  std::vector<Int> quadric_syzygies;
  if (betti_x.step_count() >= 2) {
    for (const auto& entry : betti_x.steps()[1]) {
      const bool quadric = entry.strand == Strand::base ||
                           (entry.strand == Strand::none && entry.degree <= m);
      if (quadric) quadric_syzygies.push_back(entry.degree);
    }
  }
  std::vector<Int> cone_generators;
  for (const auto& entry : betti_x.steps()[0]) {
    const bool cone = entry.strand == Strand::cone ||
                      (entry.strand == Strand::none && entry.degree >= m + 1);
    if (cone) cone_generators.push_back(entry.degree);
  }
  for (const auto& s : quadric_syzygies)
    for (const auto& g : cone_generators)
      if (!(s < g)) return false;
  return true;
}

}  // namespace conecheck

#include "boxicity/derand.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace boxicity {

PartialPermutation::PartialPermutation(const Graph& g)
    : position_(g.order(), kNone), first_(g.order(), kNone) {
  order_.reserve(g.order());
}

PartialPermutation::PartialPermutation(const Graph& g,
                                       std::span<const Vertex> prefix)
    : PartialPermutation(g) {
  for (const Vertex v : prefix) {
    place(g, v);
  }
}

void PartialPermutation::place(const Graph& g, Vertex u) {
  if (u < 1 || u > position_.size() || is_placed(u)) {
    throw std::invalid_argument("cannot place vertex " + std::to_string(u));
  }
  order_.push_back(u);
  const std::size_t pos = order_.size();
  position_[u - 1] = pos;
  if (first_[u - 1] == kNone) {
    first_[u - 1] = pos;
  }
  for (const Vertex w : g.neighbors(u)) {
    if (first_[w - 1] == kNone) {
      first_[w - 1] = pos;
    }
  }
}

void PartialPermutation::undo(const Graph& g) {
  if (order_.empty()) {
    throw std::logic_error("undo on an empty prefix");
  }
  const Vertex u = order_.back();
  const std::size_t pos = order_.size();
  order_.pop_back();
  position_[u - 1] = kNone;
  // Exactly the entries this placement filled in carry its position.
  if (first_[u - 1] == pos) {
    first_[u - 1] = kNone;
  }
  for (const Vertex w : g.neighbors(u)) {
    if (first_[w - 1] == pos) {
      first_[w - 1] = kNone;
    }
  }
}

Rational SurvivalTerm::value() const {
  switch (kind) {
    case Kind::zero:
      return Rational(0);
    case Kind::one:
      return Rational(1);
    case Kind::single:
      return Rational(1, static_cast<long>(a) + 2);
    case Kind::pair:
      return Rational(1, static_cast<long>(a) + 2) +
             Rational(1, static_cast<long>(b) + 2);
  }
  return Rational(0);
}

namespace {

constexpr SurvivalTerm kZero{SurvivalTerm::Kind::zero, 0, 0};
constexpr SurvivalTerm kOne{SurvivalTerm::Kind::one, 0, 0};

// `placed` is in the prefix, `other` is not.
SurvivalTerm one_placed(const PartialPermutation& pp, Vertex placed,
                        Vertex other) {
  const std::size_t t = pp.first_position(other);
  if (t == PartialPermutation::kNone) {
    return kOne;  // other's interval starts after placed's ends
  }
  // other's interval starts at t and ends after the prefix.
  return pp.position(placed) > t ? kZero : kOne;
}

void check_non_edge(const Graph& g, const Edge& e) {
  if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v) {
    throw std::invalid_argument("bad vertex pair (" + std::to_string(e.u) +
                                "," + std::to_string(e.v) + ")");
  }
  if (g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("(" + std::to_string(e.u) + "," +
                                std::to_string(e.v) +
                                ") is an edge of the graph");
  }
}

}  // namespace

SurvivalTerm survival_term(const Graph& g, const PartialPermutation& pp,
                           const Edge& e) {
  const Vertex u = e.u;
  const Vertex v = e.v;
  const bool pu = pp.is_placed(u);
  const bool pv = pp.is_placed(v);
  if (pu && pv) {
    return intersects(pp.interval(u), pp.interval(v)) ? kZero : kOne;
  }
  if (pu) {
    return one_placed(pp, u, v);
  }
  if (pv) {
    return one_placed(pp, v, u);
  }
  const bool tu = pp.first_position(u) != PartialPermutation::kNone;
  const bool tv = pp.first_position(v) != PartialPermutation::kNone;
  if (tu && tv) {
    return kZero;
  }
  if (!tu && !tv) {
    return {SurvivalTerm::Kind::pair, g.degree(u), g.degree(v)};
  }
  // Exactly one endpoint already has a placed neighbour; the other one's
  // closed neighbourhood must all come after it.
  return {SurvivalTerm::Kind::single, tv ? g.degree(u) : g.degree(v), 0};
}

Rational cond_prob(const Graph& g, const PartialPermutation& pp,
                   const Edge& e) {
  check_non_edge(g, e);
  return survival_term(g, pp, e).value();
}

Rational cond_expectation(const Graph& g, const PartialPermutation& pp,
                          std::span<const Edge> targets) {
  Rational sum(0);
  for (const Edge& e : targets) {
    sum += cond_prob(g, pp, e);
  }
  return sum;
}

namespace {

// Every term is an integer multiple of 1/L with L = lcm(2, ..., maxdeg + 2),
// so expectations are tracked as exact integers scaled by L.
class ScaledTerms {
 public:
  explicit ScaledTerms(std::size_t max_degree)
      : weight_(max_degree + 1),
        delta_(max_degree + 1, 0),
        listed_(max_degree + 1, 0) {
    scale_ = 1;
    for (std::size_t k = 2; k <= max_degree + 2; ++k) {
      scale_ = scale_ / boost::multiprecision::gcd(scale_, BigInt(k)) * k;
    }
    for (std::size_t k = 0; k <= max_degree; ++k) {
      weight_[k] = scale_ / (k + 2);
    }
  }

  const BigInt& scale() const { return scale_; }

  BigInt scaled(const SurvivalTerm& t) const {
    switch (t.kind) {
      case SurvivalTerm::Kind::zero:
        return 0;
      case SurvivalTerm::Kind::one:
        return scale_;
      case SurvivalTerm::Kind::single:
        return weight_[t.a];
      case SurvivalTerm::Kind::pair:
        return weight_[t.a] + weight_[t.b];
    }
    return 0;
  }

  void reset() {
    for (const std::size_t k : touched_) {
      delta_[k] = 0;
      listed_[k] = 0;
    }
    touched_.clear();
    ones_ = 0;
  }

  void add(const SurvivalTerm& t, std::int64_t sign) {
    switch (t.kind) {
      case SurvivalTerm::Kind::zero:
        break;
      case SurvivalTerm::Kind::one:
        ones_ += sign;
        break;
      case SurvivalTerm::Kind::single:
        bump(t.a, sign);
        break;
      case SurvivalTerm::Kind::pair:
        bump(t.a, sign);
        bump(t.b, sign);
        break;
    }
  }

  BigInt accumulated() const {
    BigInt total = BigInt(ones_) * scale_;
    for (const std::size_t k : touched_) {
      if (delta_[k] != 0) {
        total += BigInt(delta_[k]) * weight_[k];
      }
    }
    return total;
  }

 private:
  void bump(std::size_t k, std::int64_t sign) {
    // a count can return to zero and move again; list each degree once
    if (!listed_[k]) {
      listed_[k] = 1;
      touched_.push_back(k);
    }
    delta_[k] += sign;
  }

  BigInt scale_;
  std::vector<BigInt> weight_;
  std::vector<std::int64_t> delta_;
  std::vector<char> listed_;
  std::vector<std::size_t> touched_;
  std::int64_t ones_ = 0;
};

}  // namespace

GreedySupergraph derand_supergraph(const Graph& g,
                                   std::span<const Edge> targets) {
  if (targets.empty()) {
    throw std::invalid_argument("derand_supergraph: empty target set");
  }
  const std::size_t n = g.order();
  const std::size_t h = targets.size();
  std::vector<std::vector<std::uint32_t>> incident(n + 1);
  {
    std::vector<Edge> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("derand_supergraph: repeated target");
    }
  }
  for (std::size_t i = 0; i < h; ++i) {
    check_non_edge(g, targets[i]);
    incident[targets[i].u].push_back(static_cast<std::uint32_t>(i));
    incident[targets[i].v].push_back(static_cast<std::uint32_t>(i));
  }

  ScaledTerms terms(g.max_degree());
  PartialPermutation pp(g);
  std::vector<SurvivalTerm> current(h);
  BigInt expectation = 0;
  for (std::size_t i = 0; i < h; ++i) {
    current[i] = survival_term(g, pp, targets[i]);
    expectation += terms.scaled(current[i]);
  }

  GreedySupergraph out;
  out.expectation_chain.reserve(n + 1);
  out.expectation_chain.emplace_back(expectation, terms.scale());

  std::vector<std::uint32_t> stamp(h, 0);
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> affected;
  // Placing w can only change terms of targets touching N(w) + w.
  const auto collect = [&](Vertex w) {
    ++epoch;
    affected.clear();
    const auto visit = [&](Vertex x) {
      for (const std::uint32_t idx : incident[x]) {
        if (stamp[idx] != epoch) {
          stamp[idx] = epoch;
          affected.push_back(idx);
        }
      }
    };
    visit(w);
    for (const Vertex x : g.neighbors(w)) {
      visit(x);
    }
  };

  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    BigInt best_gain;
    for (Vertex w = 1; w <= n; ++w) {
      if (pp.is_placed(w)) {
        continue;
      }
      collect(w);
      pp.place(g, w);
      terms.reset();
      for (const std::uint32_t idx : affected) {
        const SurvivalTerm next = survival_term(g, pp, targets[idx]);
        if (!(next == current[idx])) {
          terms.add(current[idx], -1);
          terms.add(next, +1);
        }
      }
      pp.undo(g);
      BigInt gain = terms.accumulated();
      if (best == 0 || gain > best_gain) {
        best = w;
        best_gain = std::move(gain);
      }
    }

    collect(best);
    pp.place(g, best);
    for (const std::uint32_t idx : affected) {
      current[idx] = survival_term(g, pp, targets[idx]);
    }
    expectation += best_gain;
    out.expectation_chain.emplace_back(expectation, terms.scale());
    if (out.expectation_chain.back() < out.expectation_chain[step]) {
      throw std::logic_error("conditional expectation decreased at step " +
                             std::to_string(step + 1));
    }
  }

  out.order = Permutation::from_order(
      std::vector<Vertex>(pp.placed().begin(), pp.placed().end()));
  out.rep = interval_supergraph(g, out.order);
  for (const Edge& e : targets) {
    if (!out.rep.adjacent(e.u, e.v)) {
      out.covered.push_back(e);
    }
  }
  if (out.expectation_chain.back() != Rational(out.covered.size())) {
    throw std::logic_error(
        "final conditional expectation differs from the covered count");
  }
  if (out.covered.size() * (g.max_degree() + 2) < 2 * h) {
    throw std::logic_error("greedy supergraph covers fewer targets than "
                           "2|H|/(max_degree + 2)");
  }
  return out;
}

BoxRepresentation build_derandomized(const Graph& g, DerandStats* stats) {
  BoxRepresentation rep;
  rep.n = g.order();
  if (g.is_complete()) {
    return rep;
  }
  if (g.max_degree() <= 1) {
    rep.dims.push_back(matching_interval_layout(g));
    if (stats != nullptr) {
      stats->covered_per_dimension.push_back(g.non_edges().size());
    }
    return rep;
  }
  std::vector<Edge> remaining = g.non_edges();
  while (!remaining.empty()) {
    GreedySupergraph step = derand_supergraph(g, remaining);
    if (step.covered.empty()) {
      throw std::logic_error("greedy supergraph covered no target");
    }
    std::vector<Edge> rest;
    rest.reserve(remaining.size() - step.covered.size());
    std::set_difference(remaining.begin(), remaining.end(),
                        step.covered.begin(), step.covered.end(),
                        std::back_inserter(rest));
    remaining = std::move(rest);
    if (stats != nullptr) {
      stats->covered_per_dimension.push_back(step.covered.size());
    }
    rep.dims.push_back(std::move(step.rep));
  }
  if (!verify(g, rep).valid) {
    throw VerificationFailure(
        "derandomized build produced an invalid representation");
  }
  return rep;
}

double sharper_dimension_estimate(std::size_t max_degree, std::size_t h) {
  if (max_degree < 2 || h == 0) {
    return 0.0;
  }
  const double d = static_cast<double>(max_degree);
  return d * d / (2.0 * (d - 1.0)) * std::log(static_cast<double>(h));
}

}  // namespace boxicity

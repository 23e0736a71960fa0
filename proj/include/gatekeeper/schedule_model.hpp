#pragma once

// Core domain types for gate assignment: flights, schedules, model
// configuration and the pairwise interval / probability arithmetic.
//
// Times are real-valued minutes since midnight of a single day.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gatekeeper/error.hpp"

namespace gatekeeper {

using Minutes = double;
using FlightId = std::string;

struct Flight {
  FlightId id;
  Minutes arrival{};
  Minutes departure{};

  friend bool operator==(const Flight&, const Flight&) = default;
};

// Throws InvariantError unless 0 <= arrival < departure and both are finite.
inline void validate(const Flight& f) {
  if (!std::isfinite(f.arrival) || !std::isfinite(f.departure))
    throw InvariantError("flight " + f.id + ": non-finite time");
  if (f.arrival < 0) throw InvariantError("flight " + f.id + ": arrival before midnight");
  if (!(f.arrival < f.departure))
    throw InvariantError("flight " + f.id + ": arrival must precede departure");
  if (f.id.empty()) throw InvariantError("flight with empty id");
}

// An ordered collection of validated flights with distinct ids.
class Schedule {
 public:
  Schedule() = default;

  explicit Schedule(std::vector<Flight> flights) : flights_{std::move(flights)} {
    index_.reserve(flights_.size());
    for (std::size_t i = 0; i < flights_.size(); ++i) {
      validate(flights_[i]);
      if (!index_.emplace(flights_[i].id, i).second)
        throw DuplicateIdError("duplicate flight id: " + flights_[i].id);
    }
  }

  std::span<const Flight> flights() const noexcept { return flights_; }
  const Flight& operator[](std::size_t i) const { return flights_[i]; }
  std::size_t size() const noexcept { return flights_.size(); }
  bool empty() const noexcept { return flights_.empty(); }

  auto begin() const noexcept { return flights_.begin(); }
  auto end() const noexcept { return flights_.end(); }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(std::string{id});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw UnknownFlightError("unknown flight id: " + std::string{id});
  }

  friend bool operator==(const Schedule& a, const Schedule& b) { return a.flights_ == b.flights_; }

 private:
  std::vector<Flight> flights_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class ObjectiveVariant {
  buffered,    // 1 / (gap + 2b)
  opl_compat,  // 1 / gap
};

enum class OverlapPolicy {
  hard,  // overlapping same-gate pairs are forbidden
  soft,  // overlapping same-gate pairs are allowed and cost 1 each
};

struct ModelConfig {
  Minutes buffer{15};
  ObjectiveVariant objective_variant{ObjectiveVariant::buffered};
  OverlapPolicy overlap_policy{OverlapPolicy::hard};
};

inline void validate(const ModelConfig& cfg) {
  if (!(cfg.buffer >= 0) || !std::isfinite(cfg.buffer))
    throw InvariantError("buffer must be a finite non-negative number of minutes");
}

struct LockedInterval {
  Minutes start{};
  Minutes end{};

  friend bool operator==(const LockedInterval&, const LockedInterval&) = default;
};

// The span during which a flight holds its gate: [arrival - b, departure + b].
inline LockedInterval locked_interval(const Flight& f, Minutes buffer) {
  return {f.arrival - buffer, f.departure + buffer};
}

// Positive-measure intersection; intervals sharing only an endpoint do not intersect.
inline bool intersects(const LockedInterval& x, const LockedInterval& y) {
  return x.start < y.end && y.start < x.end;
}

// Signed idle time between `first` leaving and `second` arriving.
inline Minutes gap(const Flight& first, const Flight& second) {
  return second.arrival - first.departure;
}

inline bool conflicts_hard(const Flight& fi, const Flight& fj, Minutes buffer) {
  return intersects(locked_interval(fi, buffer), locked_interval(fj, buffer));
}

// Gap of the pair in its positive orientation (later arrival minus earlier
// departure). Negative when the raw ground times overlap.
inline Minutes oriented_gap(const Flight& fi, const Flight& fj) {
  return std::max(gap(fi, fj), gap(fj, fi));
}

// Collision probability 2b / (gap + 2b) for a same-gate pair, clamped to 1
// on a hard conflict. Requires b > 0.
inline double conflict_probability(const Flight& fi, const Flight& fj, Minutes buffer) {
  if (!(buffer > 0)) throw InvariantError("conflict probability requires a positive buffer");
  if (conflicts_hard(fi, fj, buffer)) return 1.0;
  const double two_b = 2 * buffer;
  return two_b / (oriented_gap(fi, fj) + two_b);
}

// Expected-conflict term for a raw gap value.
inline double expected_term_for_gap(Minutes g, const ModelConfig& cfg) {
  const double denom =
      cfg.objective_variant == ObjectiveVariant::buffered ? g + 2 * cfg.buffer : g;
  if (!(denom > 0)) throw UndefinedTermError("expected term denominator is not positive");
  return 1.0 / denom;
}

// Objective contribution of fi followed by fj on one gate, oriented as
// gap(fi, fj).
inline double expected_term(const Flight& fi, const Flight& fj, const ModelConfig& cfg) {
  return expected_term_for_gap(gap(fi, fj), cfg);
}

// Full objective cost of placing two flights on the same gate: the expected
// term for the positive-gap orientation (if any), plus 1 for a hard conflict
// under the soft policy. Returns nullopt for a hard conflict under the hard
// policy, i.e. the pair may not share a gate.
inline std::optional<double> same_gate_pair_cost(const Flight& fi, const Flight& fj,
                                                 const ModelConfig& cfg) {
  double cost = 0;
  if (conflicts_hard(fi, fj, cfg.buffer)) {
    if (cfg.overlap_policy == OverlapPolicy::hard) return std::nullopt;
    cost += 1.0;
  }
  const Minutes g = oriented_gap(fi, fj);
  if (g > 0) cost += expected_term_for_gap(g, cfg);
  return cost;
}

}  // namespace gatekeeper

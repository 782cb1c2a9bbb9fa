/*
 * Copyright 2026 The cakecut authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef CAKECUT_INTERVAL_SET_HPP
#define CAKECUT_INTERVAL_SET_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cakecut/rational.hpp"

namespace cakecut {

/// One piece of the cake: the half-open interval [lo, hi), except that a
/// piece ending at 1 also contains the point 1 (so [x, 1] closes the cake).
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }

  bool contains(const Rational& p) const {
    if (lo <= p && p < hi) return true;
    return hi == 1 && p == 1;
  }

  bool operator==(const Interval& other) const = default;
};

/// A finite union of disjoint intervals, normalized so that pieces are sorted
/// and adjacent pieces are merged. Atom ownership is positional by default
/// (an atom belongs to the piece whose half-open span contains it); a set
/// built with an explicit atom list owns exactly those locations instead,
/// which lets a point mass travel independently of the intervals.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet whole() { return of({Interval{Rational(0), Rational(1)}}); }

  static IntervalSet of(std::vector<Interval> pieces) {
    IntervalSet s;
    s.pieces_ = normalize(std::move(pieces));
    return s;
  }

  static IntervalSet of(std::vector<Interval> pieces, std::set<Rational> atoms) {
    IntervalSet s;
    s.pieces_ = normalize(std::move(pieces));
    for (const auto& p : atoms) {
      if (p < 0 || p > 1) {
        throw std::invalid_argument("atom location " + to_string(p) + " outside [0,1]");
      }
    }
    s.atoms_ = std::move(atoms);
    return s;
  }

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty() && (!atoms_ || atoms_->empty()); }

  bool has_explicit_atoms() const { return atoms_.has_value(); }
  const std::set<Rational>& explicit_atoms() const { return *atoms_; }

  /// Positional containment under the piece convention.
  bool covers(const Rational& p) const {
    for (const auto& piece : pieces_) {
      if (piece.contains(p)) return true;
    }
    return false;
  }

  /// Whether an atom at p belongs to this portion.
  bool owns_atom(const Rational& p) const {
    if (atoms_) return atoms_->count(p) > 0;
    return covers(p);
  }

  Rational total_length() const {
    Rational total(0);
    for (const auto& piece : pieces_) total += piece.length();
    return total;
  }

  bool operator==(const IntervalSet& other) const = default;

 private:
  static std::vector<Interval> normalize(std::vector<Interval> pieces) {
    for (const auto& piece : pieces) {
      if (!(piece.lo < piece.hi)) {
        throw std::invalid_argument("interval [" + to_string(piece.lo) + ", " +
                                    to_string(piece.hi) + ") is empty or reversed");
      }
      if (piece.lo < 0 || piece.hi > 1) {
        throw std::invalid_argument("interval [" + to_string(piece.lo) + ", " +
                                    to_string(piece.hi) + ") escapes [0,1]");
      }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (auto& piece : pieces) {
      if (!merged.empty() && piece.lo < merged.back().hi) {
        throw std::invalid_argument("overlapping intervals at " + to_string(piece.lo));
      }
      if (!merged.empty() && piece.lo == merged.back().hi) {
        merged.back().hi = piece.hi;
      } else {
        merged.push_back(piece);
      }
    }
    return merged;
  }

  std::vector<Interval> pieces_;
  std::optional<std::set<Rational>> atoms_;
};

/// True iff the pieces of the given sets are pairwise disjoint and tile
/// [0,1] exactly. Atom ownership is checked separately where measures are
/// available (see allocation_is_partition in procedures.hpp).
inline bool pieces_tile_cake(const std::vector<IntervalSet>& portions) {
  std::vector<Interval> all;
  for (const auto& s : portions) {
    all.insert(all.end(), s.pieces().begin(), s.pieces().end());
  }
  if (all.empty()) return false;
  std::sort(all.begin(), all.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  if (all.front().lo != 0) return false;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].lo != all[i - 1].hi) return false;
  }
  return all.back().hi == 1;
}

}  // namespace cakecut

#endif  // CAKECUT_INTERVAL_SET_HPP

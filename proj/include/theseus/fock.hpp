// Copyright 2026 The Theseus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace theseus {

/// Photon count in one (vertex, mode) slot.
struct ModeCount {
  int vertex = 0;
  int mode = 0;
  int count = 0;
  friend auto operator<=>(const ModeCount&, const ModeCount&) = default;
};

/// Sparse Fock occupation, sorted by (vertex, mode), no zero counts.
class FockOccupation {
 public:
  FockOccupation() = default;
  /// Sorts and merges; drops zero counts.
  explicit FockOccupation(std::vector<ModeCount> slots);

  const std::vector<ModeCount>& slots() const { return slots_; }
  bool empty() const { return slots_.empty(); }
  int total() const;
  int photons_at(int vertex) const;
  int count(int vertex, int mode) const;
  /// Keeps only slots whose vertex is in `vertices` (sorted).
  FockOccupation restricted_to(const std::vector<int>& vertices) const;
  std::string to_string() const;

  friend auto operator<=>(const FockOccupation&, const FockOccupation&) = default;
  friend bool operator==(const FockOccupation&, const FockOccupation&) = default;

 private:
  std::vector<ModeCount> slots_;
};

inline constexpr double kAmplitudeFloor = 1e-14;

/// Sparse map from occupations to amplitudes. Entries with modulus below the
/// floor are not stored.
class FockState {
 public:
  explicit FockState(double floor = kAmplitudeFloor) : floor_(floor) {}

  void add(const FockOccupation& occ, std::complex<double> amplitude);
  /// Drops entries that cancelled below the floor.
  void prune();

  std::complex<double> amplitude(const FockOccupation& occ) const;
  const std::map<FockOccupation, std::complex<double>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  double squared_norm() const;
  double floor() const { return floor_; }

 private:
  double floor_;
  std::map<FockOccupation, std::complex<double>> terms_;
};

}  // namespace theseus

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

#include "theseus/fock.hpp"

#include <algorithm>
#include <sstream>

namespace theseus {

FockOccupation::FockOccupation(std::vector<ModeCount> slots) {
  std::sort(slots.begin(), slots.end(), [](const ModeCount& a, const ModeCount& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.mode < b.mode;
  });
  for (const ModeCount& s : slots) {
    if (!slots_.empty() && slots_.back().vertex == s.vertex && slots_.back().mode == s.mode)
      slots_.back().count += s.count;
    else
      slots_.push_back(s);
  }
  std::erase_if(slots_, [](const ModeCount& s) { return s.count == 0; });
}

int FockOccupation::total() const {
  int t = 0;
  for (const auto& s : slots_) t += s.count;
  return t;
}

int FockOccupation::photons_at(int vertex) const {
  int t = 0;
  for (const auto& s : slots_)
    if (s.vertex == vertex) t += s.count;
  return t;
}

int FockOccupation::count(int vertex, int mode) const {
  for (const auto& s : slots_)
    if (s.vertex == vertex && s.mode == mode) return s.count;
  return 0;
}

FockOccupation FockOccupation::restricted_to(const std::vector<int>& vertices) const {
  FockOccupation out;
  for (const auto& s : slots_)
    if (std::binary_search(vertices.begin(), vertices.end(), s.vertex)) out.slots_.push_back(s);
  return out;
}

std::string FockOccupation::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& s : slots_) {
    if (!first) os << ',';
    first = false;
    os << s.vertex << ':' << s.mode << 'x' << s.count;
  }
  os << '}';
  return os.str();
}

void FockState::add(const FockOccupation& occ, std::complex<double> amplitude) {
  terms_[occ] += amplitude;
}

void FockState::prune() {
  std::erase_if(terms_, [this](const auto& kv) { return std::abs(kv.second) < floor_; });
}

std::complex<double> FockState::amplitude(const FockOccupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

double FockState::squared_norm() const {
  double s = 0.0;
  for (const auto& [occ, a] : terms_) s += std::norm(a);
  return s;
}

}  // namespace theseus

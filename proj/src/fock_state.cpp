/*
 * Copyright 2026 The fockgate Authors
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

#include "fockgate/fock_state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fockgate {

ModeRegistry::ModeRegistry(std::vector<std::string> labels, int photon_cap)
    : labels_(std::move(labels)), photon_cap_(photon_cap)
{
  if (labels_.empty())
    throw std::invalid_argument("mode registry needs at least one mode");
  if (photon_cap_ < 1)
    throw std::invalid_argument("photon cap must be positive");
  std::set<std::string> seen;
  for (const auto &label : labels_) {
    if (label.empty())
      throw std::invalid_argument("empty mode label");
    if (!seen.insert(label).second)
      throw std::invalid_argument("duplicate mode label '" + label + "'");
  }
}

std::size_t ModeRegistry::index_of(const std::string &label) const
{
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::out_of_range("unknown mode label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool ModeRegistry::contains(const std::string &label) const
{
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

ModeRegistry ModeRegistry::concat(const ModeRegistry &other) const
{
  std::vector<std::string> joined = labels_;
  for (const auto &label : other.labels_) {
    if (contains(label))
      throw std::invalid_argument("overlapping mode label '" + label + "'");
    joined.push_back(label);
  }
  return ModeRegistry(std::move(joined), std::max(photon_cap_, other.photon_cap_));
}

ModeRegistry gate_registry()
{
  return ModeRegistry({"q1H", "q1V", "q2H", "q2V", "loss1", "loss2"});
}

FockBasisState::FockBasisState(std::vector<int> occupations)
    : occupations_(std::move(occupations))
{
  for (int n : occupations_)
    if (n < 0)
      throw std::invalid_argument("negative photon occupation");
}

int FockBasisState::total() const noexcept
{
  return std::accumulate(occupations_.begin(), occupations_.end(), 0);
}

FockBasisState FockBasisState::concat(const FockBasisState &other) const
{
  std::vector<int> joined = occupations_;
  joined.insert(joined.end(), other.occupations_.begin(), other.occupations_.end());
  return FockBasisState(std::move(joined));
}

std::string to_string(const FockBasisState &state)
{
  std::ostringstream os;
  os << '|';
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i)
      os << ';';
    os << state[i];
  }
  os << '>';
  return os.str();
}

namespace {

void check_basis(const ModeRegistry &registry, const FockBasisState &basis)
{
  if (basis.size() != registry.count())
    throw std::invalid_argument("occupation vector has " + std::to_string(basis.size()) +
                                " entries, registry has " + std::to_string(registry.count()) +
                                " modes");
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] > registry.photon_cap())
      throw std::out_of_range("mode " + registry.label(i) + " holds " +
                              std::to_string(basis[i]) + " photons, cap is " +
                              std::to_string(registry.photon_cap()));
}

void check_same_registry(const PureState &a, const PureState &b)
{
  if (a.registry().labels() != b.registry().labels())
    throw std::invalid_argument("states are defined over different mode registries");
}

} // namespace

PureState::PureState(ModeRegistry registry) : registry_(std::move(registry)) {}

PureState::PureState(ModeRegistry registry, Terms terms)
    : registry_(std::move(registry)), terms_(std::move(terms))
{
  for (auto it = terms_.begin(); it != terms_.end();) {
    check_basis(registry_, it->first);
    if (std::abs(it->second) < kPruneThreshold)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Complex PureState::amplitude(const FockBasisState &basis) const
{
  auto it = terms_.find(basis);
  return it == terms_.end() ? Complex{} : it->second;
}

int PureState::max_photon_number() const
{
  int max_n = 0;
  for (const auto &[basis, amp] : terms_)
    max_n = std::max(max_n, basis.total());
  return max_n;
}

PureState make_basis_state(const ModeRegistry &registry, std::vector<int> occupations)
{
  FockBasisState basis(std::move(occupations));
  check_basis(registry, basis);
  return PureState(registry, {{std::move(basis), Complex{1.0, 0.0}}});
}

PureState vacuum(const ModeRegistry &registry)
{
  return make_basis_state(registry, std::vector<int>(registry.count(), 0));
}

Complex inner_product(const PureState &a, const PureState &b)
{
  check_same_registry(a, b);
  Complex sum{};
  for (const auto &[basis, amp] : a.terms())
    sum += std::conj(amp) * b.amplitude(basis);
  return sum;
}

PureState tensor(const PureState &a, const PureState &b)
{
  ModeRegistry joined = a.registry().concat(b.registry());
  PureState::Terms terms;
  for (const auto &[basis_a, amp_a] : a.terms())
    for (const auto &[basis_b, amp_b] : b.terms())
      terms.emplace(basis_a.concat(basis_b), amp_a * amp_b);
  return PureState(std::move(joined), std::move(terms));
}

double norm_squared(const PureState &state)
{
  double sum = 0.0;
  for (const auto &[basis, amp] : state.terms())
    sum += std::norm(amp);
  return sum;
}

std::pair<PureState, double> normalize(const PureState &state)
{
  const double n2 = norm_squared(state);
  if (std::sqrt(n2) < kTolerance)
    throw std::domain_error("cannot normalize a zero state");
  return {Complex(1.0 / std::sqrt(n2), 0.0) * state, n2};
}

PureState operator+(const PureState &a, const PureState &b)
{
  check_same_registry(a, b);
  PureState::Terms terms = a.terms();
  for (const auto &[basis, amp] : b.terms())
    terms[basis] += amp;
  return PureState(a.registry(), std::move(terms));
}

PureState operator-(const PureState &a, const PureState &b)
{
  return a + Complex(-1.0, 0.0) * b;
}

PureState operator*(Complex factor, const PureState &state)
{
  PureState::Terms terms = state.terms();
  for (auto &[basis, amp] : terms)
    amp *= factor;
  return PureState(state.registry(), std::move(terms));
}

double max_amplitude_difference(const PureState &a, const PureState &b)
{
  check_same_registry(a, b);
  double worst = 0.0;
  for (const auto &[basis, amp] : a.terms())
    worst = std::max(worst, std::abs(amp - b.amplitude(basis)));
  for (const auto &[basis, amp] : b.terms())
    if (!a.terms().contains(basis))
      worst = std::max(worst, std::abs(amp));
  return worst;
}

std::string to_string(const PureState &state)
{
  if (state.empty())
    return "0";
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto &[basis, amp] : state.terms()) {
    if (!first)
      os << " + ";
    first = false;
    os << '(' << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)"
       << to_string(basis);
  }
  return os.str();
}

} // namespace fockgate

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

#include "fockgate/optics.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fockgate {

bool is_unitary(const ComplexMatrix &matrix, double tolerance)
{
  if (matrix.rows() != matrix.cols())
    return false;
  const ComplexMatrix gram = matrix.adjoint() * matrix;
  const ComplexMatrix eye = ComplexMatrix::Identity(matrix.rows(), matrix.cols());
  return (gram - eye).cwiseAbs().maxCoeff() <= tolerance;
}

ModeUnitary::ModeUnitary(ComplexMatrix matrix) : matrix_(std::move(matrix))
{
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw std::invalid_argument("mode unitary must be a non-empty square matrix");
  if (!is_unitary(matrix_))
    throw std::invalid_argument("mode matrix is not unitary within tolerance");
}

ModeUnitary ModeUnitary::identity(std::size_t dimension)
{
  const auto n = static_cast<Eigen::Index>(dimension);
  return ModeUnitary(ComplexMatrix::Identity(n, n));
}

ModeUnitary ModeUnitary::adjoint() const { return ModeUnitary(matrix_.adjoint()); }

ModeUnitary ModeUnitary::after(const ModeUnitary &first) const
{
  if (first.dimension() != dimension())
    throw std::invalid_argument("cannot compose mode unitaries of different dimension");
  return ModeUnitary(matrix_ * first.matrix_);
}

ModeUnitary operator*(const ModeUnitary &a, const ModeUnitary &b) { return a.after(b); }

ModeUnitary beam_splitter_matrix(double reflectivity)
{
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0))
    throw std::invalid_argument("reflectivity must lie in [0, 1]");
  const Complex reflect{std::sqrt(reflectivity), 0.0};
  const Complex transmit{0.0, -std::sqrt(1.0 - reflectivity)};
  ComplexMatrix m(2, 2);
  m << reflect, transmit, transmit, reflect;
  return ModeUnitary(std::move(m));
}

ModeUnitary embed(const ModeUnitary &small, std::span<const std::string> targets,
                  const ModeRegistry &registry)
{
  if (targets.size() != small.dimension())
    throw std::invalid_argument("target count does not match the block dimension");
  std::vector<Eigen::Index> index;
  std::set<std::size_t> seen;
  for (const auto &label : targets) {
    const std::size_t i = registry.index_of(label);
    if (!seen.insert(i).second)
      throw std::invalid_argument("duplicate target mode '" + label + "'");
    index.push_back(static_cast<Eigen::Index>(i));
  }
  const auto n = static_cast<Eigen::Index>(registry.count());
  ComplexMatrix full = ComplexMatrix::Identity(n, n);
  for (std::size_t r = 0; r < index.size(); ++r)
    for (std::size_t c = 0; c < index.size(); ++c)
      full(index[r], index[c]) = small(r, c);
  return ModeUnitary(std::move(full));
}

namespace {

std::pair<std::size_t, std::size_t> port_modes(const std::string &port,
                                               const ModeRegistry &registry)
{
  const std::string h = port + "H";
  const std::string v = port + "V";
  if (!registry.contains(h) || !registry.contains(v))
    throw std::invalid_argument("port '" + port + "' lacks an H or V mode");
  return {registry.index_of(h), registry.index_of(v)};
}

} // namespace

ModeUnitary pbs_routing(std::span<const std::string> ports, const ModeRegistry &registry)
{
  if (ports.empty() || ports.size() > 2)
    throw std::invalid_argument("a polarizing beam splitter routes one or two ports");
  const auto n = static_cast<Eigen::Index>(registry.count());
  ComplexMatrix perm = ComplexMatrix::Identity(n, n);
  if (ports.size() == 1) {
    port_modes(ports[0], registry);
    return ModeUnitary(std::move(perm));
  }
  if (ports[0] == ports[1])
    throw std::invalid_argument("polarizing beam splitter ports must differ");
  // H rails are transmitted unchanged; only the V rails swap
  const auto av = static_cast<Eigen::Index>(port_modes(ports[0], registry).second);
  const auto bv = static_cast<Eigen::Index>(port_modes(ports[1], registry).second);
  perm(av, av) = 0.0;
  perm(bv, bv) = 0.0;
  perm(bv, av) = 1.0;
  perm(av, bv) = 1.0;
  return ModeUnitary(std::move(perm));
}

ModeUnitary element_unitary(const ElementSpec &element, const ModeRegistry &registry)
{
  struct Visitor {
    const ModeRegistry &registry;

    ModeUnitary operator()(const BeamSplitter &bs) const
    {
      const std::vector<std::string> targets{bs.mode_a, bs.mode_b};
      return embed(beam_splitter_matrix(bs.reflectivity), targets, registry);
    }
    ModeUnitary operator()(const Attenuator &att) const
    {
      const std::vector<std::string> targets{att.signal, att.loss};
      return embed(beam_splitter_matrix(att.reflectivity), targets, registry);
    }
    ModeUnitary operator()(const PolarizingBS &pbs) const
    {
      std::vector<std::string> ports{pbs.port_a};
      if (pbs.port_b)
        ports.push_back(*pbs.port_b);
      return pbs_routing(ports, registry);
    }
    ModeUnitary operator()(const PhaseShift &ps) const
    {
      ComplexMatrix phase(1, 1);
      phase(0, 0) = std::polar(1.0, ps.angle);
      const std::vector<std::string> targets{ps.mode};
      return embed(ModeUnitary(std::move(phase)), targets, registry);
    }
  };
  return std::visit(Visitor{registry}, element);
}

std::string describe(const ElementSpec &element)
{
  struct Visitor {
    std::string operator()(const BeamSplitter &bs) const
    {
      std::ostringstream os;
      os << "BS(R=" << bs.reflectivity << ") " << bs.mode_a << "," << bs.mode_b;
      return os.str();
    }
    std::string operator()(const Attenuator &att) const
    {
      std::ostringstream os;
      os << "ATT(R=" << att.reflectivity << ") " << att.signal << "->" << att.loss;
      return os.str();
    }
    std::string operator()(const PolarizingBS &pbs) const
    {
      return "PBS " + pbs.port_a + (pbs.port_b ? "," + *pbs.port_b : std::string{});
    }
    std::string operator()(const PhaseShift &ps) const
    {
      std::ostringstream os;
      os << "PS(" << ps.angle << ") " << ps.mode;
      return os.str();
    }
  };
  return std::visit(Visitor{}, element);
}

ModeUnitary compose(const Circuit &circuit)
{
  ModeUnitary total = ModeUnitary::identity(circuit.registry.count());
  for (const auto &element : circuit.elements) {
    try {
      total = element_unitary(element, circuit.registry) * total;
    } catch (const std::exception &e) {
      throw std::invalid_argument("invalid element '" + describe(element) + "': " + e.what());
    }
  }
  return total;
}

} // namespace fockgate

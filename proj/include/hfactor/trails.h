// Copyright 2026 The hfactor Authors
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

#ifndef HFACTOR_TRAILS_H_
#define HFACTOR_TRAILS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfactor/errors.h"
#include "hfactor/graph.h"
#include "hfactor/prescription.h"
#include "hfactor/subgraph.h"

// Changeable trails relative to a reference subgraph F.
//
// A trail v0 v1 ... vk (edges distinct, vertices may repeat) is changeable
// when every prefix v0 ... vl satisfies:
//   (a) v0 is in B0 and the first edge is not in F;
//   (b) every vertex of the prefix other than v0 and vl is feasible both in
//       F and in F with the prefix edges flipped;
//   (c) if vl != v0, flipping the prefix strictly lowers the deficiency of v0.
// A trail is odd when its last edge is outside F and even otherwise; the
// length-zero trail at a B0 vertex is even. A trail may close at v0.
namespace hfactor::trails {

enum class Parity { kEven, kOdd };

const char* to_string(Parity parity);

struct ChangeableTrail {
  std::vector<Vertex> vertices;  // v0 ... vk
  std::vector<EdgeId> edges;     // edge i joins vertices[i], vertices[i+1]
  std::vector<bool> in_f;        // membership in F when the trail was built

  int length() const { return static_cast<int>(edges.size()); }
  Vertex start() const { return vertices.front(); }
  Vertex end() const { return vertices.back(); }
  Parity parity() const {
    return in_f.empty() || in_f.back() ? Parity::kEven : Parity::kOdd;
  }
};

// Raised for structurally broken trails and for flags that no longer match F.
class TrailError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Builds a trail along `vertices`, reading edge ids from F's host and flags
// from F. Throws TrailError if consecutive vertices are not adjacent or an
// edge repeats.
ChangeableTrail make_trail(const SpanningSubgraph& f,
                           const std::vector<Vertex>& vertices);

// F with every trail edge toggled. Throws TrailError when the trail is
// malformed or its flags disagree with F.
SpanningSubgraph apply_trail(const SpanningSubgraph& f,
                             const ChangeableTrail& trail);

struct TrailVerdict {
  bool valid = false;
  // 'a', 'b' or 'c'; 0 when valid.
  char condition = 0;
  // Prefix length at which the violation first appears.
  int position = 0;
  std::string reason;
  Parity parity = Parity::kEven;

  explicit operator bool() const { return valid; }
};

// Checks conditions (a)-(c) on the whole trail and on every prefix. The trail
// must be structurally sound (see make_trail).
TrailVerdict is_changeable_trail(const SpanningSubgraph& f,
                                 const PrescriptionMap& h,
                                 const ChangeableTrail& trail);

// B0: vertices with d_F(x) < mH(x). Meaningful for edge-minimal F.
VertexSet compute_b0(const SpanningSubgraph& f, const PrescriptionMap& h);

struct Options {
  int edge_cap = 16;
};

// First changeable trail P with def_H[F xor P] < def_H[F], searching roots of
// B0 in ascending order and extensions in ascending edge id, depth first.
// Requires d_F <= MH everywhere (std::invalid_argument otherwise); throws
// CapExceeded when the host has more than options.edge_cap edges.
std::optional<ChangeableTrail> find_augmenting_trail(
    const SpanningSubgraph& f, const PrescriptionMap& h,
    const Options& options = {});

struct Reachability {
  std::vector<bool> even;
  std::vector<bool> odd;

  VertexSet even_set() const;
  VertexSet odd_set() const;
};

// Endpoints of all even and odd changeable trails, by exhaustive search.
Reachability reachability(const SpanningSubgraph& f, const PrescriptionMap& h,
                          const Options& options = {});

struct TrailPartition {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  VertexSet d;
  std::vector<VertexSet> d_components;  // components of G[D]

  int tau() const { return static_cast<int>(d_components.size()); }
};

TrailPartition partition_from_reachability(const SpanningSubgraph& f,
                                           const PrescriptionMap& h,
                                           const Reachability& reach);

// (A, B, C, D) for an H-optimal, edge-minimal F with d_F <= MH.
TrailPartition trail_partition(const SpanningSubgraph& f,
                               const PrescriptionMap& h,
                               const Options& options = {});

}  // namespace hfactor::trails

#endif  // HFACTOR_TRAILS_H_

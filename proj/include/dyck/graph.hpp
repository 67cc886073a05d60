#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dyck/nest.hpp"

namespace dyck {

// Order k recovered from an odd-length bit string; the weight must be k or
// k+1 (lower or upper level).
int order_of_bits(const std::string &bits);

// Rotation: position p of the result reads position (p - t) mod n of the
// input, so the string's content shifts t places to the right.
std::string translate(const std::string &bits, int t);
std::string untranslate(const std::string &bits, int t);

// Reverse, then complement every bit.  Involution; swaps weight k and k+1.
std::string aleph(const std::string &bits);

// Identity on weight-k strings, aleph on weight-(k+1) strings.
std::string theta(const std::string &bits);

struct cyclic_class_info {
  std::string canonical; // the unique rotation satisfying the strict prefix test
  int t = 0;             // input = translate(canonical, t)
  std::vector<std::string> members; // members[s] = translate(canonical, s)
};

cyclic_class_info cyclic_class(const std::string &bits);

// Rotations of the string followed by rotations of its aleph image.
std::vector<std::string> dihedral_class(const std::string &bits);

struct provenance {
  long long class_rank = 0;
  int t = 0;
  bool upper = false;
};

// Class rank and rotation offset of any lower- or upper-level vertex.
provenance locate(const std::string &bits);

// The position carrying value `color` in the vertex's rotated nest, among
// the vertex's 0-bits.
int p_location(const std::string &bits, int color);

// The disjoint neighbor reached along the arc of the given color, found by
// scanning the k+1 candidate neighbors for the one whose rotated nest shows
// the supplementary color at the shared position.
std::pair<std::string, provenance> modular_arc(const std::string &bits,
                                               int color);

struct lexical_edge_pair {
  std::string v;       // upper endpoint of the first edge: u plus one bit
  std::string w;       // lower endpoint of the second edge: aleph(v)
  std::string aleph_u; // upper endpoint of the second edge
};

// The two level-crossing edges of one color at a lower-level vertex.
lexical_edge_pair lexical_edges(const std::string &bits, int color);

// Vertex of class m rotated by t; `middle` switches to the two-level graph
// and `upper` picks the aleph-lifted level.
std::string retrieve(long long m, int t, int k, bool middle = false,
                     bool upper = false);

} // namespace dyck

#ifndef RIGIDKIT_GENERATORS_H_
#define RIGIDKIT_GENERATORS_H_

#include <string>
#include <vector>

#include "rigidkit/graph.h"

namespace rigidkit {

// Named graph families. Labelings are fixed and documented per family so
// every downstream result is reproducible.

// K_n on 0..n-1, n >= 1.
Graph Complete(int n);
// K_{a,b}: side A = 0..a-1, side B = a..a+b-1; a, b >= 1.
Graph CompleteBipartite(int a, int b);
// C_n: i ~ i+1 (mod n), n >= 3.
Graph Cycle(int n);
// W_n: rim cycle on 0..n-1 plus hub n joined to every rim vertex, n >= 3.
// Equal to Cone(Cycle(n)).
Graph Wheel(int n);
// P_n on n >= 1 vertices: i ~ i+1.
Graph Path(int n);
// Icosahedron skeleton: 0 = north pole, 1..5 upper ring, 6..10 lower ring,
// 11 = south pole; upper i+1 is joined to lower 6+i and 6+(i+1)%5.
Graph Icosahedron();
// Icosahedron plus the lexicographically least pair at graph distance 2.
Graph IcosahedronBraced();
// l copies of K4 - e glued along the missing edge: hubs 0 and 1 (not
// adjacent), copy i uses the adjacent pair {2+2i, 3+2i}, each joined to both
// hubs. 2l + 2 vertices, 5l edges; l >= 1.
Graph K4eChain(int l);

struct GeneratorSpec {
  std::string family;
  std::vector<int> params;
};

// Dispatches on family name: complete n | complete_bipartite a b | cycle n |
// wheel n | path n | icosahedron | icosahedron_braced | k4e_chain l.
// Throws std::invalid_argument for unknown names, wrong arity or parameters
// out of range.
Graph Generate(const GeneratorSpec& spec);

std::vector<std::string> GeneratorFamilies();

}  // namespace rigidkit

#endif  // RIGIDKIT_GENERATORS_H_

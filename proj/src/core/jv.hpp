#pragma once

#include <string>
#include <vector>

#include "core/coset_tree.hpp"
#include "core/sparse.hpp"

namespace qka {

/// The Julg-Valette operator for origin type i: the origin goes to zero,
/// every other vertex goes to the unique incident edge on its geodesic
/// toward the origin; equivalently the adjoint sends each edge to its
/// endpoint furthest from the origin.
PartialMap julg_valette(const CosetTree& t, int type);

/// Same, with the origin sent to an extra unit coordinate appended to the
/// edge basis; a bijection on the truncation, so exactly unitary.
PartialMap tilde_phi(const CosetTree& t, int type);

/// Left translation by a product of (factor, element) letters on the edge
/// basis (cosets of H). Entries are defined wherever the image stays inside
/// the truncation. Classical trees only.
PartialMap edge_action(const CosetTree& t,
                       const std::vector<std::pair<int, int>>& g);

/// Left translation on both vertex blocks (cosets of G1 and G2).
PartialMap vertex_action(const CosetTree& t,
                         const std::vector<std::pair<int, int>>& g);

/// The self-adjoint unitary exchanging the two origin vertices.
PartialMap origin_swap(const CosetTree& t);

struct GenLetter {
  int factor = 1;
  int elem = 0;
  std::string name;
};

/// All non-identity elements of both factors, factor 1 first, table order.
std::vector<GenLetter> amalgam_generators(const AmalgamGroup& g);

struct FredholmReport {
  std::string tree;
  int depth = 0;
  int phi_type = 1;
  i64 vertices = 0;
  i64 edges = 0;
  i64 interior_edges = 0;
  int rank = 0;
  i64 kernel_dim = 0;
  i64 cokernel_dim = 0;
  i64 index = 0;
  bool bijection_ok = false;  // edge -> furthest endpoint hits every
                              // non-origin vertex exactly once
  bool ok() const { return index == 1 && kernel_dim == 1 && cokernel_dim == 0; }
};

FredholmReport fredholm_report(const CosetTree& t, int phi_type);

struct CommutatorReport {
  std::string generator;
  int interior_depth = 0;
  int margin = 0;
  bool all_interior_columns_evaluated = false;
  i64 interior_max_abs = 0;  // entries outside the origin zone, exact
  int rank = 0;              // rank of the whole evaluated commutator
  int nnz = 0;
  bool ok() const { return all_interior_columns_evaluated && interior_max_abs == 0; }
};

/// pi(g) Phi - Phi rho(g), evaluated on every column where both composites
/// stay inside the truncation. Requires margin >= word length of g; the
/// interior is the ball of depth (tree depth - margin).
CommutatorReport commutator_report(const CosetTree& t, int phi_type,
                                   const std::vector<std::pair<int, int>>& g,
                                   const std::string& gen_name, int margin);

struct HomotopySample {
  double t = 0;
  double unitarity_defect = 0;
  bool pass = false;
};

struct HomotopyReport {
  std::string tree;
  int interior_depth = 0;
  int margin = 0;
  std::vector<HomotopySample> samples;
  bool u_commutes_with_h = false;   // exact, integer
  bool h_definitions_agree = false; // via factor 1 and via factor 2
  bool endpoint_evaluated = false;  // interior columns all evaluated at t*
  i64 endpoint_defect = 0;          // exact intertwining defect at t* = pi/2
  i64 t0_defect = -1;               // negative control; -1 when vacuous
  bool ok() const;
};

/// Unitarity of u_t at the sampled parameters, exact commutation of u with
/// the subgroup action, consistency of the two subgroup pictures, and the
/// exact intertwining identity at the endpoint t* = pi/2 where conjugation
/// by u_t equals conjugation by u. Classical trees only.
HomotopyReport homotopy_check(const CosetTree& t, int t_samples, int margin);

struct PsiBijectionReport {
  int type = 1;
  bool ok = false;
  std::string detail;
};

/// (vertex word of type i, transversal representative) -> reduced edge word
/// is a bijection onto the depth-consistent edge basis, compatible with the
/// coset projection back to the vertex.
PsiBijectionReport check_psi_bijection(const CosetTree& t, int type);

}  // namespace qka

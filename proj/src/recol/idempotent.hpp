#pragma once

#include "recol/intermediate.hpp"
#include "recol/module_category.hpp"

namespace stratakit::recol {

using ModuleRecollement = Recollement<ModuleCategory, ModuleCategory, ModuleCategory>;

/// Bimodules and algebras attached to an idempotent e = sum of vertex idempotents.
struct IdempotentData {
  alg::Algebra algebra;
  alg::VertexSet u_vertices;  ///< vertices summed in e
  alg::VertexSet z_vertices;
  la::Matrix e;
  alg::CornerAlgebra corner;        ///< eAe
  alg::QuotientAlgebra quotient;    ///< A/AeA
  la::Matrix ea_basis;              ///< columns: basis of eA in A
  la::Matrix ae_basis;              ///< columns: basis of Ae in A
  std::vector<la::Matrix> ea_left;  ///< per eAe basis element c: u -> c u on eA
  std::vector<la::Matrix> ea_right; ///< per A basis element b: u -> u b on eA
  std::vector<la::Matrix> ae_left;  ///< per A basis element b: u -> b u on Ae
  std::vector<la::Matrix> ae_right; ///< per eAe basis element c: u -> u c on Ae
  la::Matrix e_in_ea;               ///< coordinates of e in ea_basis
  la::Matrix e_in_ae;               ///< coordinates of e in ae_basis

  bool degenerate() const { return u_vertices.empty() || z_vertices.empty(); }
};

struct IdempotentRecollement {
  std::shared_ptr<const IdempotentData> data;
  ModuleRecollement r;
};

/// The recollement mod-A/AeA -> mod-A -> mod-eAe for e = sum of e_v, v in u.
/// e = 0 and e = 1 give the trivial recollements.
IdempotentRecollement make_idempotent_recollement(const mod::ModCat& cat, const alg::VertexSet& u);

/// Simples, projectives and injectives of all three categories, labelled.
struct StandardSamples {
  Samples<mod::Module> center, left, right;
};
StandardSamples standard_samples(const IdempotentRecollement& ir);

struct TransportedCover {
  mod::Module projective;  ///< j_! P
  mod::ModuleMap map;      ///< j_! P -> j_!* x
  bool essential = false;  ///< dim j_! P equals the dimension of the direct projective cover
};

/// j_! applied to a projective cover P -> x in mod-eAe, followed by j_! x -> j_!* x.
TransportedCover cover_transport(const IdempotentRecollement& ir, const mod::Module& x, const mod::Cover& p);

}  // namespace stratakit::recol

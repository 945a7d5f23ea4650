#pragma once
// The comparison isomorphisms and adjunction checks, each computed by two
// independent routes and reported in a uniform shape.

#include <optional>
#include <string>
#include <vector>

#include "qk/bimodule.hpp"
#include "qk/comm_ring.hpp"
#include "qk/split_extension.hpp"
#include "qk/zg_module.hpp"

namespace qk {

struct ComparisonReport {
  std::string name;
  std::string inputs;
  std::vector<std::string> left;    // canonical values (groups or dimensions)
  std::vector<std::string> right;
  bool equal = false;
  std::string witness;              // first differing position and values
  std::vector<std::string> oracle;  // closed-form column, when available

  static ComparisonReport compare(std::string name, std::string inputs,
                                  std::vector<std::string> left,
                                  std::vector<std::string> right,
                                  std::vector<std::string> oracle = {});
};

// Integral homology of cyclic, dihedral (including C_2 x C_2 = D_2 and
// S_3 = D_3) and quaternion groups in degrees 0..3, recognized structurally.
std::optional<std::vector<FGAbelianGroup>> closed_form_homology(const FinGroup& g,
                                                                Index max_degree);

// H_i(G; I_G) against H_{i+1}(G; Z) for i = 0..max_degree, plus the
// closed-form column when G is in the covered family.
ComparisonReport verify_coinvariants_shift(const FinGroup& g, Index max_degree,
                                           std::int64_t entry_cap = kDefaultEntryCap,
                                           const std::string& label = "");

// dim HH_{i+1}(A; A) against dim HH_i(A; I_A) for i = 1..max_degree.
ComparisonReport verify_hochschild_shift(const FinDimAlgebra& a, Index max_degree,
                                         std::int64_t entry_cap = kDefaultEntryCap,
                                         const std::string& label = "");

// Com(G x| M) against Com(G) + M_G.
ComparisonReport verify_com_split_extension(const SplitExtensionGrp& e,
                                            const std::string& label = "");

// The chain-level map HH_1(A) -> Omega_{A/k}, a (x) b -> a db, on a
// hypersurface or monomial presentation; reports rank / injectivity /
// surjectivity, verdict equal iff it is an isomorphism.
ComparisonReport comparison_map_degree0(const CommRingPres& r,
                                        const std::string& label = "");

// Quillen-pair criterion shadow for Gp <-> Ab: sampled surjections are
// preserved by the inclusion, and Com of rank-n free data is free abelian of
// rank n for n = 1..max_rank (via the class-1 truncation).
ComparisonReport verify_quillen_pair_gp_ab(Index max_rank = 4);

// Same for Alg <-> Com: surjections preserved, and Com of the degree-2
// truncated tensor algebra is the truncated polynomial ring, as algebras.
ComparisonReport verify_quillen_pair_alg_com(Index max_gens = 3);

// |Hom_ZG(M, Triv A)| against |Hom_Ab(M_G, A)| by enumeration vs the
// invariant-factor formula, with a naturality check along sample maps.
ComparisonReport verify_module_adjunction_groups(
    const ZGRep& m, const FGAbelianGroup& a,
    const std::vector<ZGMap>& naturality_samples = {},
    const std::string& label = "");

// Hom_{Com(A)}(CQ(M), N) against Hom_{A-bimod}(M, same-action N); N is a
// module over Com(A) given by its action matrices. Finite cardinalities
// required (F_p, or hom spaces of dimension zero).
ComparisonReport verify_module_adjunction_bimodules(
    const FinDimAlgebra& a, const Bimodule& m,
    const std::vector<FMat>& n_action, Index n_dim,
    const std::string& label = "");

// Z^r + M is torsion-free iff M is.
ComparisonReport verify_torsionfree_beck(Index free_rank, const FGAbelianGroup& m,
                                         const std::string& label = "");

// Square-zero extension R + M reduced iff M = 0, with Nil(R + M) = M.
ComparisonReport verify_square_zero_reduced(const FinDimAlgebra& r,
                                            const std::vector<FMat>& module_action,
                                            const std::string& label = "");

// Regular epi - mono factorization in the module categories.
struct ZGFactorization {
  ZGRep image;
  IntMat epi;   // domain -> image, surjective
  IntMat mono;  // image -> codomain, injective
  FGAbelianGroup mono_cokernel;
};
ZGFactorization factor_epi_mono(const ZGMap& f);

struct BimoduleFactorization {
  Bimodule image;
  FMat epi;
  FMat mono;
};
BimoduleFactorization factor_epi_mono(const BimoduleMap& f);

}  // namespace qk

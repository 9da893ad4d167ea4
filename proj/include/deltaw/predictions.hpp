#pragma once

#include "deltaw/homology.hpp"
#include "deltaw/partitions.hpp"
#include "deltaw/weights.hpp"

#include <set>
#include <vector>

namespace deltaw {

/// Reduced homology of the link of the u-induced diagonal arrangement,
/// assembled with the Goresky–MacPherson decomposition
///   H~_k = ⊕_{p ≠ 0̂}  H~_{k - d(p)}( order complex of (0̂, p) )
/// where d(p) is the number of blocks and the empty interval contributes
/// H~_{-1} = Z.  Exact over Z, torsion included.
HomologyProfile gm_link_homology(const std::vector<Rational>& u);

/// Closed-form prediction for the reduced homology of Δ₀,(1,1,u):
/// gm_link_homology(u) plus one Z in degree n-4 (n = |u| + 2).
/// Requires w = (1,1,...); throws std::invalid_argument otherwise.
HomologyProfile predicted_delta0_profile(const WeightVector& w);

/// An ordered facet list.
struct ShellingOrder {
    std::vector<Face> facets;
};

/// Facets of Δ_u in lexicographic order after re-indexing so that u is
/// ascending (ties broken by original index).  The faces stay expressed in
/// the vertex indexing of build_delta_u(u).  Throws std::invalid_argument
/// when Δ_u has no facets (no vertices).
ShellingOrder lex_facet_order(const WeightVector& u);

/// Björner–Wachs condition for (possibly nonpure) shellings: for every k and
/// every a < k there are b < k and x ∈ C_k with
///   C_a ∩ C_k  ⊆  C_b ∩ C_k  =  C_k \ {x}.
/// order must list exactly the facets of K (throws std::invalid_argument
/// otherwise); returns whether it is a shelling.
bool verify_shelling(const SimplicialComplex& K, const ShellingOrder& order);

struct SphereWedge {
    long long count = 0;
    int dimension = 0;

    friend bool operator==(const SphereWedge& a, const SphereWedge& b) {
        return a.count == b.count && a.dimension == b.dimension;
    }
};

/// Heavy/light prediction: (m-2)! (m-1)^k spheres of dimension m+k-4 for
/// Δ₀ with m unit weights and k small weights (ε ≤ 1/(k+1) regime).
/// Requires m ≥ 2, k ≥ 0, m+k ≥ 4.
SphereWedge heavy_light_prediction(int m, int k);

/// Degrees where Δ₀,(1,1,(1/ℓ)^(n-2)) has nonzero reduced homology:
/// { n-4-t(ℓ-1) : 0 ≤ t ≤ ⌊(n-2)/(ℓ+1)⌋ } ∩ [0, n-4].
/// Requires n ≥ 4, ℓ ≥ 2.
std::set<int> gaps_support(int n, int ell);

/// Dimension of the induced representation carried by the top homology:
/// the sum over compositions of k into m-1 nonnegative parts of
/// (m-2)! k! / ∏ λᵢ!.  Equals heavy_light_prediction(m,k).count.
/// Requires m ≥ 2, k ≥ 0.
long long rep_dimension(int m, int k);

/// Disconnected regime ((1/m)^(2m), ε^(k)) with kε < 1/m: the complex is
/// ½ C(2m,m) disjoint spheres of dimension k-2.  Requires m ≥ 1, k ≥ 2.
SphereWedge disconnected_prediction(int m, int k);

}  // namespace deltaw

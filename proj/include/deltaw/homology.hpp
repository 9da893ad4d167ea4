#pragma once

#include "deltaw/complex.hpp"
#include "deltaw/snf.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace deltaw {

enum class Coefficients { Z, Q, Fp };

struct HomologyOptions {
    Coefficients coeffs = Coefficients::Z;
    std::uint64_t p = 0;   // prime for Fp
    bool reduced = true;
    /// For Z coefficients, cross-check SNF ranks against ranks over
    /// F_2, F_3 and a large prime.
    bool crosscheck = true;
    SnfOptions snf;
};

struct DegreeHomology {
    long long betti = 0;
    std::vector<long long> torsion;  // invariant factors > 1, ascending

    friend bool operator==(const DegreeHomology& a, const DegreeHomology& b) {
        return a.betti == b.betti && a.torsion == b.torsion;
    }
    bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// Homology groups per degree.  Degrees outside [min_degree, max_degree]
/// are implicitly zero; equality respects that.
struct HomologyProfile {
    int min_degree = 0;
    std::vector<DegreeHomology> groups;
    bool reduced = true;
    Coefficients coeffs = Coefficients::Z;
    std::uint64_t p = 0;

    int max_degree() const { return min_degree + static_cast<int>(groups.size()) - 1; }
    DegreeHomology group(int degree) const;
    long long betti(int degree) const { return group(degree).betti; }

    void set(int degree, DegreeHomology g);
    void add_free(int degree, long long rank);

    bool torsion_free() const;
    std::vector<int> support() const;  // degrees with nonzero group
    long long reduced_euler() const;   // sum (-1)^d rank_d (reduced profiles)

    /// Compare as graded groups (ignores bookkeeping flags).
    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);

    /// "H~0 = Z^2, H1 = Z/2, H2 = Z^90" (nonzero degrees only; "0" if trivial).
    std::string str() const;
};

/// "Z^7", "Z/2", "Z^90+Z/2", "0"
std::string group_str(const DegreeHomology& g);

/// Chain complex of sparse integer boundary matrices.
/// Degrees run min_degree .. min_degree + dims.size() - 1;
/// boundary[i] maps C_{min_degree+i+1} -> C_{min_degree+i}.
struct ChainComplex {
    int min_degree = 0;
    std::vector<std::size_t> dims;
    std::vector<SparseIntMatrix> boundary;

    int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
    /// Verifies boundary-of-boundary = 0; throws std::logic_error otherwise.
    void validate() const;
};

/// Boundary matrices of K with the usual alternating-sign convention on
/// strictly increasing vertex tuples.  reduced adds the augmentation row
/// (degree -1) whenever the complex is nonempty (including the {∅} case).
ChainComplex boundary_matrices(const SimplicialComplex& K, bool reduced);

/// Homology of a chain complex over Z, Q or F_p (exact in all cases).
HomologyProfile chain_homology(const ChainComplex& cc, const HomologyOptions& opts);

/// Homology of the complex.  Reduced by default.
HomologyProfile homology(const SimplicialComplex& K, const HomologyOptions& opts = {});

/// Relative homology H(K, L).  L must be a nonempty subcomplex of K sharing
/// its vertex indexing; throws std::invalid_argument otherwise.
HomologyProfile relative_homology(const SimplicialComplex& K, const SimplicialComplex& L,
                                  const HomologyOptions& opts = {});

/// Rational homology of the subcomplex of chains fixed by a simplicial
/// involution (vertex map sigma with sigma^2 = id; identity allowed).
/// The averaging idempotent (1+sigma)/2 kills faces fixed with odd sign.
/// Unreduced.  Throws std::invalid_argument when sigma is not a simplicial
/// involution of K.
HomologyProfile invariant_homology(const SimplicialComplex& K,
                                   const std::vector<std::int32_t>& sigma);

}  // namespace deltaw

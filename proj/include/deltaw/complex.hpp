#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltaw {

/// Thrown when a construction or computation exceeds a configured resource
/// cap.  Callers surface this as an explicit capacity failure (CLI exit 2),
/// never as silent truncation.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BuildLimits {
    std::size_t max_faces = 8'000'000;  // total faces per complex
};

using Face = std::vector<std::int32_t>;  // strictly increasing vertex indices

/// Finite abstract simplicial complex.
///
/// vertex_labels is an indexing space: subcomplexes built against a parent
/// complex reuse its labels, so a label may appear in no face at all.  The
/// actual vertices of the complex are faces[0].  faces[d] holds the
/// d-dimensional faces, each a strictly increasing index tuple, the list
/// sorted lexicographically and duplicate-free.
///
/// has_empty_face distinguishes the complex {∅} (reduced homology Z in
/// degree -1) from the void complex (no faces at all, homology zero).  For
/// complexes with vertices the flag is redundant (the empty simplex is
/// implicit) and is kept false by convention unless the construction
/// naturally produced it (e.g. Δ_u).
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<Face>> faces;
    bool has_empty_face = false;

    int dim() const { return static_cast<int>(faces.size()) - 1; }
    bool is_void() const { return !has_empty_face && faces.empty(); }
    bool nonempty() const { return !is_void(); }
    std::size_t face_count(int d) const {
        return (d >= 0 && d < static_cast<int>(faces.size())) ? faces[d].size() : 0;
    }
    std::size_t total_faces() const;

    /// f_vector()[d] = number of d-faces (empty face excluded).
    std::vector<std::size_t> f_vector() const;

    /// True iff `f` (sorted) is a face; dimension -1 queries has_empty_face.
    bool contains_face(const Face& f) const;

    /// Drop trailing empty dimension lists (keeps invariants tidy).
    void trim();

    /// Full invariant check: sortedness, dedup, closure under subsets.
    /// Throws std::logic_error on violation.  Test/debug helper.
    void validate() const;
};

/// f-vector, reduced Euler characteristic and component count.
struct ComplexStats {
    std::vector<std::size_t> f_vector;  // f_vector[d] = #d-faces (empty face excluded)
    long long reduced_euler = 0;        // sum (-1)^d f_d minus 1 when nonempty
    std::size_t components = 0;         // connected components (union-find on 1-skeleton)
};

ComplexStats complex_stats(const SimplicialComplex& K);

/// Flag complex: cliques of the adjacency relation on `labels`, generated
/// dimension by dimension.  adjacency is a symmetric matrix given as packed
/// bitset rows.  Throws CapacityError when limits.max_faces is exceeded.
SimplicialComplex flag_complex(std::vector<std::string> labels,
                               const std::vector<std::vector<std::uint64_t>>& adjacency,
                               const BuildLimits& limits = {});

/// Suspension: joins two fresh cone vertices to every face of K (including
/// the implicit empty face, so suspending the void or {∅} complex yields
/// S^0).  The cone vertices never share a face with each other.
SimplicialComplex suspend(const SimplicialComplex& K, const BuildLimits& limits = {});

/// True iff L's faces all appear in K.  Both must share the vertex indexing.
bool is_subcomplex(const SimplicialComplex& L, const SimplicialComplex& K);

/// Label-based equality: same labelled face family (vertex order ignored).
bool same_labeled_complex(const SimplicialComplex& A, const SimplicialComplex& B);

}  // namespace deltaw

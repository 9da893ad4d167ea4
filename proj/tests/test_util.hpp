#pragma once

// Shared helpers for the test suite.  Everything here is deliberately
// naive/dense so it can serve as an independent oracle for the sparse
// production code.

#include "deltaw/complex.hpp"
#include "deltaw/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace testutil {

/// Build the downward closure of a facet list.
inline deltaw::SimplicialComplex from_facets(std::vector<std::string> labels,
                                             const std::vector<std::vector<std::int32_t>>& facets) {
    deltaw::SimplicialComplex K;
    K.vertex_labels = std::move(labels);
    K.has_empty_face = true;
    std::set<std::vector<std::int32_t>> by_dim[16];
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        // all nonempty subsets
        const std::size_t k = f.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<std::int32_t> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            by_dim[sub.size() - 1].insert(sub);
        }
    }
    for (int d = 15; d >= 0; --d) {
        if (by_dim[d].empty()) continue;
        K.faces.resize(static_cast<std::size_t>(d) + 1);
        break;
    }
    for (std::size_t d = 0; d < K.faces.size(); ++d)
        K.faces[d].assign(by_dim[d].begin(), by_dim[d].end());
    return K;
}

/// Dense Gaussian elimination over Q.
inline std::size_t rational_rank(std::vector<std::vector<deltaw::Rational>> a) {
    if (a.empty() || a[0].empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0, pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t piv = pr;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[pr], a[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || a[i][c].is_zero()) continue;
            deltaw::Rational f = a[i][c] / a[pr][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[pr][j];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

/// Reduced Betti numbers (degrees 0..dim) by dense rational elimination on
/// boundary matrices assembled directly from the face lists.  Independent of
/// the production homology pipeline.  Only for nonempty complexes.
inline std::vector<long long> reduced_betti_oracle(const deltaw::SimplicialComplex& K) {
    using deltaw::Rational;
    const int dim = K.dim();
    if (dim < 0) return {};
    std::vector<std::map<std::vector<std::int32_t>, std::size_t>> index(
        static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d)
        for (std::size_t i = 0; i < K.faces[static_cast<std::size_t>(d)].size(); ++i)
            index[static_cast<std::size_t>(d)][K.faces[static_cast<std::size_t>(d)][i]] = i;

    // B[d]: rows = (d-1)-faces (augmentation row for d = 0), cols = d-faces
    std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
    for (int d = 0; d <= dim; ++d) {
        const auto& faces = K.faces[static_cast<std::size_t>(d)];
        std::size_t rows = (d == 0) ? 1 : index[static_cast<std::size_t>(d) - 1].size();
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(faces.size(), Rational(0)));
        for (std::size_t j = 0; j < faces.size(); ++j) {
            if (d == 0) {
                m[0][j] = Rational(1);
                continue;
            }
            int sign = 1;
            for (std::size_t drop = 0; drop < faces[j].size(); ++drop) {
                std::vector<std::int32_t> facet;
                for (std::size_t t = 0; t < faces[j].size(); ++t)
                    if (t != drop) facet.push_back(faces[j][t]);
                m[index[static_cast<std::size_t>(d) - 1].at(facet)][j] =
                    m[index[static_cast<std::size_t>(d) - 1].at(facet)][j] + Rational(sign);
                sign = -sign;
            }
        }
        rank[static_cast<std::size_t>(d)] = rational_rank(std::move(m));
    }
    std::vector<long long> betti(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d)
        betti[static_cast<std::size_t>(d)] =
            static_cast<long long>(K.faces[static_cast<std::size_t>(d)].size()) -
            static_cast<long long>(rank[static_cast<std::size_t>(d)]) -
            static_cast<long long>(rank[static_cast<std::size_t>(d) + 1]);
    return betti;
}

}  // namespace testutil

#include "deltaw/predictions.hpp"

#include "deltaw/delta0.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace deltaw {

namespace {

void add_shifted(HomologyProfile& acc, const HomologyProfile& h, int shift) {
    for (int d = h.min_degree; d <= h.max_degree(); ++d) {
        DegreeHomology g = h.group(d);
        if (g.trivial()) continue;
        DegreeHomology into = acc.group(d + shift);
        into.betti += g.betti;
        into.torsion.insert(into.torsion.end(), g.torsion.begin(), g.torsion.end());
        std::sort(into.torsion.begin(), into.torsion.end());
        acc.set(d + shift, std::move(into));
    }
}

long long to_ll_checked(const BigInt& v, const char* what) {
    if (v > BigInt(std::numeric_limits<long long>::max()))
        throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
    return static_cast<long long>(v);
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

HomologyProfile gm_link_homology(const std::vector<Rational>& u) {
    HomologyProfile acc;
    acc.reduced = true;
    acc.coeffs = Coefficients::Z;
    IntersectionLattice L = intersection_lattice(u);
    const SetPartition bottom = discrete_partition(L.r);
    for (const SetPartition& p : L.elements) {
        if (p == bottom) continue;
        SimplicialComplex oc = interval_order_complex(L, p);
        HomologyProfile h = homology(oc);  // includes H~_{-1} = Z for {∅}
        add_shifted(acc, h, p.dimension());
    }
    return acc;
}

HomologyProfile predicted_delta0_profile(const WeightVector& w) {
    const int n = w.size();
    const Rational one(1);
    if (n < 3 || !(w[1] == one) || !(w[2] == one))
        throw std::invalid_argument("predicted_delta0_profile: weights must start (1,1,...)");
    std::vector<Rational> u;
    for (int i = 3; i <= n; ++i) u.push_back(w[i]);
    HomologyProfile out = gm_link_homology(u);
    out.add_free(n - 4, 1);
    return out;
}

namespace {

std::vector<Face> facets_of(const SimplicialComplex& K) {
    std::vector<Face> out;
    const int V = static_cast<int>(K.vertex_labels.size());
    for (int d = 0; d <= K.dim(); ++d) {
        for (const Face& f : K.faces[static_cast<size_t>(d)]) {
            bool maximal = true;
            for (std::int32_t v = 0; v < V && maximal; ++v) {
                if (std::binary_search(f.begin(), f.end(), v)) continue;
                Face g = f;
                g.insert(std::upper_bound(g.begin(), g.end(), v), v);
                if (K.contains_face(g)) maximal = false;
            }
            if (maximal) out.push_back(f);
        }
    }
    return out;
}

}  // namespace

ShellingOrder lex_facet_order(const WeightVector& u) {
    SimplicialComplex K = build_delta_u(u);
    if (K.faces.empty())
        throw std::invalid_argument("lex_facet_order: Delta_u has no facets");
    std::vector<Face> facets = facets_of(K);

    // rank vertices by ascending weight, stable in the original index
    const int r = u.size();
    std::vector<int> order(static_cast<size_t>(r));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return u[a] < u[b]; });
    std::vector<int> rank(static_cast<size_t>(r) + 1, 0);
    for (int pos = 0; pos < r; ++pos) rank[static_cast<size_t>(order[static_cast<size_t>(pos)])] = pos;

    auto key = [&](const Face& f) {
        std::vector<int> k;
        for (auto v : f) k.push_back(rank[static_cast<size_t>(v) + 1]);
        std::sort(k.begin(), k.end());
        return k;
    };
    std::sort(facets.begin(), facets.end(),
              [&](const Face& a, const Face& b) { return key(a) < key(b); });
    ShellingOrder so;
    so.facets = std::move(facets);
    return so;
}

bool verify_shelling(const SimplicialComplex& K, const ShellingOrder& order) {
    std::vector<Face> expect = facets_of(K);
    std::vector<Face> given = order.facets;
    std::sort(expect.begin(), expect.end());
    std::sort(given.begin(), given.end());
    if (expect != given)
        throw std::invalid_argument("verify_shelling: order does not list the facets of K");

    const auto& C = order.facets;
    auto inter = [](const Face& a, const Face& b) {
        Face out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };
    for (size_t k = 1; k < C.size(); ++k) {
        for (size_t a = 0; a < k; ++a) {
            const Face iak = inter(C[a], C[k]);
            bool dominated = false;
            for (size_t b = 0; b < k && !dominated; ++b) {
                const Face ibk = inter(C[b], C[k]);
                if (ibk.size() + 1 != C[k].size()) continue;  // needs C_k minus one vertex
                dominated = std::includes(ibk.begin(), ibk.end(), iak.begin(), iak.end());
            }
            if (!dominated) return false;
        }
    }
    return true;
}

SphereWedge heavy_light_prediction(int m, int k) {
    if (m < 2 || k < 0 || m + k < 4)
        throw std::invalid_argument("heavy_light_prediction: need m >= 2, k >= 0, m+k >= 4");
    BigInt count = factorial(m - 2);
    for (int i = 0; i < k; ++i) count *= (m - 1);
    return SphereWedge{to_ll_checked(count, "heavy_light_prediction"), m + k - 4};
}

std::set<int> gaps_support(int n, int ell) {
    if (n < 4 || ell < 2) throw std::invalid_argument("gaps_support: need n >= 4, ell >= 2");
    std::set<int> out;
    for (int t = 0; t <= (n - 2) / (ell + 1); ++t) {
        int d = n - 4 - t * (ell - 1);
        if (d >= 0 && d <= n - 4) out.insert(d);
    }
    return out;
}

long long rep_dimension(int m, int k) {
    if (m < 2 || k < 0) throw std::invalid_argument("rep_dimension: need m >= 2, k >= 0");
    const BigInt base = factorial(m - 2);
    const BigInt kfact = factorial(k);
    BigInt total = 0;
    // walk all compositions of k into m-1 nonnegative parts
    std::vector<int> parts(static_cast<size_t>(m) - 1, 0);
    std::size_t n_comps = 0;
    const std::size_t comp_cap = 10'000'000;
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m - 2) {
            parts[static_cast<size_t>(pos)] = left;
            if (++n_comps > comp_cap)
                throw CapacityError("rep_dimension: too many compositions");
            BigInt denom = 1;
            for (int p : parts) denom *= factorial(p);
            total += base * (kfact / denom);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, k);
    return to_ll_checked(total, "rep_dimension");
}

SphereWedge disconnected_prediction(int m, int k) {
    if (m < 1 || k < 2)
        throw std::invalid_argument("disconnected_prediction: need m >= 1, k >= 2");
    BigInt binom = 1;
    for (int i = 1; i <= m; ++i) {
        binom *= (m + i);
        binom /= i;
    }
    return SphereWedge{to_ll_checked(binom / 2, "disconnected_prediction"), k - 2};
}

}  // namespace deltaw

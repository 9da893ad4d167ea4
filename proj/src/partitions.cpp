#include "deltaw/partitions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace deltaw {

void SetPartition::canonicalize() {
    std::sort(blocks.begin(), blocks.end(),
              [](MarkSet a, MarkSet b) { return a.bits < b.bits; });
}

void SetPartition::validate() const {
    std::uint32_t seen = 0;
    for (MarkSet b : blocks) {
        if (b.empty()) throw std::logic_error("partition: empty block");
        if (seen & b.bits) throw std::logic_error("partition: overlapping blocks");
        seen |= b.bits;
    }
    if (seen != MarkSet::full(r).bits) throw std::logic_error("partition: not covering");
}

std::string SetPartition::str() const {
    std::string out;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += "|";
        out += blocks[i].str();
    }
    return out;
}

bool operator<(const SetPartition& a, const SetPartition& b) {
    if (a.r != b.r) return a.r < b.r;
    auto key = [](const SetPartition& p) {
        std::vector<std::uint32_t> k;
        for (MarkSet m : p.blocks) k.push_back(m.bits);
        return k;
    };
    return key(a) < key(b);
}

SetPartition discrete_partition(int r) {
    SetPartition p;
    p.r = r;
    for (int i = 1; i <= r; ++i) p.blocks.push_back(MarkSet::single(i));
    return p;
}

SetPartition one_block_partition(int r, MarkSet A) {
    SetPartition p;
    p.r = r;
    p.blocks.push_back(A);
    for (int i = 1; i <= r; ++i)
        if (!A.contains(i)) p.blocks.push_back(MarkSet::single(i));
    p.canonicalize();
    return p;
}

bool refines(const SetPartition& a, const SetPartition& b) {
    if (a.r != b.r) throw std::invalid_argument("refines: ground sets differ");
    for (MarkSet ba : a.blocks) {
        bool inside = false;
        for (MarkSet bb : b.blocks)
            if (ba.subset_of(bb)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.r != b.r) throw std::invalid_argument("join: ground sets differ");
    // union-find over {1..r}, merging within every block of both inputs
    std::vector<int> parent(static_cast<size_t>(a.r) + 1);
    for (int i = 0; i <= a.r; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto unite_block = [&](MarkSet m) {
        int head = -1;
        for (int v : m.members()) {
            if (head < 0)
                head = find(v);
            else
                parent[static_cast<size_t>(find(v))] = head;
        }
    };
    for (MarkSet m : a.blocks) unite_block(m);
    for (MarkSet m : b.blocks) unite_block(m);
    std::vector<std::uint32_t> bits(static_cast<size_t>(a.r) + 1, 0);
    for (int v = 1; v <= a.r; ++v) bits[static_cast<size_t>(find(v))] |= 1u << (v - 1);
    SetPartition out;
    out.r = a.r;
    for (std::uint32_t bs : bits)
        if (bs) out.blocks.push_back(MarkSet(bs));
    out.canonicalize();
    return out;
}

bool IntersectionLattice::contains(const SetPartition& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

IntersectionLattice intersection_lattice(const std::vector<Rational>& u) {
    IntersectionLattice L;
    L.r = static_cast<int>(u.size());
    std::set<SetPartition> all;
    all.insert(discrete_partition(L.r));
    if (L.r > 0) {
        WeightVector uw{u};
        std::vector<SetPartition> gens;
        for (MarkSet A : heavy_family(uw, MarkSet::full(L.r)))
            gens.push_back(one_block_partition(L.r, A));
        std::vector<SetPartition> work(gens.begin(), gens.end());
        for (const SetPartition& g : gens) all.insert(g);
        while (!work.empty()) {
            SetPartition p = std::move(work.back());
            work.pop_back();
            for (const SetPartition& g : gens) {
                SetPartition j = join(p, g);
                if (all.insert(j).second) work.push_back(std::move(j));
            }
        }
    }
    L.elements.assign(all.begin(), all.end());
    return L;
}

SimplicialComplex interval_order_complex(const IntersectionLattice& L, const SetPartition& p,
                                         const BuildLimits& limits) {
    if (!L.contains(p)) throw std::invalid_argument("interval_order_complex: p not in lattice");
    const SetPartition bottom = discrete_partition(L.r);
    if (p == bottom) throw std::invalid_argument("interval_order_complex: p is the bottom");
    std::vector<SetPartition> between;
    for (const SetPartition& q : L.elements)
        if (!(q == bottom) && !(q == p) && refines(q, p)) between.push_back(q);

    const int V = static_cast<int>(between.size());
    const std::size_t words = static_cast<std::size_t>((V + 63) / 64);
    std::vector<std::vector<std::uint64_t>> adj(static_cast<size_t>(V),
                                                std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j) {
            const auto& qi = between[static_cast<size_t>(i)];
            const auto& qj = between[static_cast<size_t>(j)];
            if (refines(qi, qj) || refines(qj, qi)) {
                adj[static_cast<size_t>(i)][static_cast<size_t>(j >> 6)] |= 1ull << (j & 63);
                adj[static_cast<size_t>(j)][static_cast<size_t>(i >> 6)] |= 1ull << (i & 63);
            }
        }
    std::vector<std::string> labels;
    for (const SetPartition& q : between) labels.push_back(q.str());
    return flag_complex(std::move(labels), adj, limits);
}

}  // namespace deltaw

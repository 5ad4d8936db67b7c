#pragma once

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "ellq/cfrac.hpp"
#include "ellq/slope_seq.hpp"
#include "ellq/unimodular.hpp"

namespace ellq {

/// Successor of the pair {0, t}, t > 1: with (n_1,...,n_t) the expansion
/// of t, the sorted multiset {1} u { (n_1,...,n_j - 1) : j = 1..t }.
/// Conserves total degree and total rank (+1 entry, rank k+1).
inline SlopeSeq char_seq_base(const Slope& t) {
    if (!(t > Slope(1))) throw std::domain_error("base successor defined for slopes > 1");
    CFrac cf = to_cfrac(t);
    std::vector<Slope> es;
    es.push_back(Slope(1));
    for (size_t j = 1; j <= cf.terms.size(); ++j)
        es.push_back(eval_cfrac(decremented_prefix(cf, j)));
    return SlopeSeq(std::move(es));
}

/// The unique successor sequence of a pair t1 < t2.
/// Unimodular pairs glue to a single slope (p1+p2)/(q1+q2); otherwise
/// conjugate by the normalizing matrix, take the base successor of
/// {0, g(t2)} and pull back entrywise.
inline SlopeSeq char_seq_pair(const Slope& t1, const Slope& t2) {
    if (!(t1 < t2)) throw std::domain_error("pair successor requires t1 < t2");
    Int det = t2.num() * t1.den() - t1.num() * t2.den();
    if (det == 1)
        return SlopeSeq({Slope(t1.num() + t2.num(), t1.den() + t2.den())});
    UniMat g = normalizing_matrix(t1, t2);
    ProjSlope image = mobius(g, t2);
    SlopeSeq base = char_seq_base(image.value());
    UniMat ginv = g.inverse();
    std::vector<Slope> es;
    es.reserve(base.size());
    for (const auto& e : base.entries()) {
        ProjSlope back = mobius(ginv, e);
        if (!back.is_finite())
            throw std::logic_error("pair successor pulled back through infinity");
        es.push_back(back.value());
    }
    return SlopeSeq(std::move(es));
}

/// All sequences reachable in one step: glue one adjacent strictly
/// increasing pair; adjacent equal slopes never glue.
inline std::set<SlopeSeq> successors(const SlopeSeq& R) {
    std::set<SlopeSeq> out;
    for (size_t i = 0; i + 1 < R.size(); ++i) {
        if (!(R[i] < R[i + 1])) continue;
        SlopeSeq glued = char_seq_pair(R[i], R[i + 1]);
        std::vector<Slope> es;
        es.reserve(R.size() - 2 + glued.size());
        for (size_t j = 0; j < R.size(); ++j) {
            if (j == i || j == i + 1) continue;
            es.push_back(R[j]);
        }
        for (const auto& e : glued.entries()) es.push_back(e);
        out.insert(SlopeSeq(std::move(es)));
    }
    return out;
}

/// Directed graph of iterated successor steps from a root sequence.
struct DegenerationPoset {
    std::vector<SlopeSeq> nodes;                 // sorted by (length, lexicographic)
    std::vector<std::pair<size_t, size_t>> edges;  // indices into nodes, sorted
    size_t root = 0;

    bool contains(const SlopeSeq& s) const {
        return std::binary_search(nodes.begin(), nodes.end(), s, node_less);
    }
    static bool node_less(const SlopeSeq& a, const SlopeSeq& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Breadth-first closure of the successor relation.  Every node conserves
/// the root's total degree and rank; violation is a logic error.
inline DegenerationPoset reachable_poset(const SlopeSeq& root) {
    const Int deg = root.total_degree(), rank = root.total_rank();
    std::set<SlopeSeq> seen{root};
    std::vector<std::pair<SlopeSeq, SlopeSeq>> edge_list;
    std::deque<SlopeSeq> frontier{root};
    while (!frontier.empty()) {
        SlopeSeq cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& nxt : successors(cur)) {
            if (nxt.total_degree() != deg || nxt.total_rank() != rank)
                throw std::logic_error("successor step broke degree/rank conservation");
            edge_list.emplace_back(cur, nxt);
            if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    DegenerationPoset p;
    p.nodes.assign(seen.begin(), seen.end());
    std::sort(p.nodes.begin(), p.nodes.end(), DegenerationPoset::node_less);
    auto index_of = [&](const SlopeSeq& s) {
        auto it = std::lower_bound(p.nodes.begin(), p.nodes.end(), s, DegenerationPoset::node_less);
        return static_cast<size_t>(it - p.nodes.begin());
    };
    p.root = index_of(root);
    for (const auto& [a, b] : edge_list) p.edges.emplace_back(index_of(a), index_of(b));
    std::sort(p.edges.begin(), p.edges.end());
    p.edges.erase(std::unique(p.edges.begin(), p.edges.end()), p.edges.end());
    return p;
}

/// Reachability order: S lies below R when the closure of R contains S.
inline bool precedes(const SlopeSeq& R, const SlopeSeq& S) {
    if (R.total_degree() != S.total_degree() || R.total_rank() != S.total_rank())
        throw std::domain_error("precedes requires equal total degree and rank");
    return reachable_poset(R).contains(S);
}

/// All nondecreasing coprime sequences {p_1/q_1 <= ... <= p_l/q_l} with
///   0 < p_1/q_1,  p_l/q_l < n/k,  sum p = n,  sum q = k+1,
///   p_j + (p_1+...+p_{j-1}) q_j - p_j (q_1+...+q_{j-1}) > 0 for j >= 2.
/// Exhaustive search over entries in slope order; q_i <= k+1 bounds it.
inline std::set<SlopeSeq> admissible_sequences(const Int& n, const Int& k) {
    if (n <= 0 || k <= 0 || gcd(n, k) != 1)
        throw std::domain_error("admissible_sequences requires coprime n > 0, k > 0");
    const Slope bound(n, k);
    std::set<SlopeSeq> out;
    std::vector<Slope> cur;
    Int degree_left = n, rank_left = k + 1;

    auto rec = [&](auto&& self) -> void {
        if (degree_left == 0 && rank_left == 0) {
            if (!cur.empty() && cur.back() < bound) out.insert(SlopeSeq(cur));
            return;
        }
        if (degree_left <= 0 || rank_left <= 0) return;
        Int degree_so_far = n - degree_left, rank_so_far = (k + 1) - rank_left;
        for (Int q = 1; q <= rank_left; ++q) {
            for (Int p = 1; p <= degree_left; ++p) {
                if (gcd(p, q) != 1) continue;
                Slope s(p, q);
                if (!cur.empty() && s < cur.back()) continue;
                if (!(s < bound)) continue;  // entries below n/k; also prunes tails
                if (!cur.empty()) {
                    // running inequality for this position
                    if (!(p + degree_so_far * q - p * rank_so_far > 0)) continue;
                }
                cur.push_back(s);
                degree_left -= p; rank_left -= q;
                self(self);
                degree_left += p; rank_left += q;
                cur.pop_back();
            }
        }
    };
    rec(rec);
    return out;
}

}  // namespace ellq

#pragma once

#include "nchilb/enumerate.hpp"
#include "nchilb/errors.hpp"
#include "nchilb/fields.hpp"
#include "nchilb/forest.hpp"
#include "nchilb/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

namespace nchilb {

/// A linear-map tuple (f, phi_1..phi_m): f is d x n with k-th column f(v_k),
/// each phi_i is d x d. Rows and columns of the matrices follow the node
/// order of whatever forest basis is in play.
template <class Fld>
struct CellPoint {
    std::uint32_t m = 1;
    std::uint32_t n = 1;
    std::uint32_t d = 0;
    Fld field;
    Matrix<Fld> f;
    std::vector<Matrix<Fld>> phi;
};

template <class Fld>
void validateCellPoint(const CellPoint<Fld>& p) {
    if (p.m < 1 || p.n < 1) throw std::invalid_argument("cell point: need m >= 1, n >= 1");
    if (p.f.rows() != p.d || p.f.cols() != p.n)
        throw std::invalid_argument("cell point: f must be d x n");
    if (p.phi.size() != p.m) throw std::invalid_argument("cell point: expected m endomorphisms");
    for (const auto& ph : p.phi)
        if (ph.rows() != p.d || ph.cols() != p.d)
            throw std::invalid_argument("cell point: phi_i must be d x d");
}

/// Chart coordinates restricted to D(F): one scalar per (node, critical)
/// pair with node < critical.
template <class Fld>
struct LambdaAssignment {
    std::map<DPair, typename Fld::Value> values;
};

template <class Fld>
LambdaAssignment<Fld> randomLambda(const Forest& forest, const Fld& field, std::mt19937_64& rng) {
    LambdaAssignment<Fld> lam;
    for (const DPair& p : dPairs(forest)) lam.values.emplace(p, field.sample(rng));
    return lam;
}

namespace detail {

template <class Fld>
void checkLambdaDomain(const Forest& forest, const LambdaAssignment<Fld>& lam) {
    const std::vector<DPair> pairs = dPairs(forest);
    if (lam.values.size() != pairs.size())
        throw std::invalid_argument("lambda assignment: domain size differs from |D(F)|");
    for (const DPair& p : pairs)
        if (!lam.values.count(p))
            throw std::invalid_argument("lambda assignment: domain is not exactly D(F)");
}

/// lambda entries grouped by critical target, sources ascending.
template <class Fld>
std::map<NodeRef, std::vector<std::pair<NodeRef, typename Fld::Value>>>
groupByTarget(const LambdaAssignment<Fld>& lam) {
    std::map<NodeRef, std::vector<std::pair<NodeRef, typename Fld::Value>>> g;
    for (const auto& [pair, value] : lam.values) g[pair.target].emplace_back(pair.source, value);
    return g;
}

} // namespace detail

/// Normal form of a cell point: the four basis rules applied to the given
/// coordinates. The result lies in Z_F and recovers lambda exactly.
template <class Fld>
CellPoint<Fld> normalFormFromCell(const Forest& forest, const LambdaAssignment<Fld>& lam,
                                  const Fld& field) {
    detail::checkLambdaDomain(forest, lam);
    const std::vector<NodeRef> nodes = forest.nodes();
    const auto d = static_cast<std::uint32_t>(nodes.size());
    const std::uint32_t m = forest.arity(), n = forest.roots();
    auto indexOf = [&](const NodeRef& node) {
        return static_cast<std::size_t>(
            std::lower_bound(nodes.begin(), nodes.end(), node) - nodes.begin());
    };
    auto grouped = detail::groupByTarget(lam);

    CellPoint<Fld> p{m, n, d, field, Matrix<Fld>(d, n, field.zero()),
                     std::vector<Matrix<Fld>>(m, Matrix<Fld>(d, d, field.zero()))};
    for (std::uint32_t k = 1; k <= n; ++k) {
        if (!forest.tree(k).empty()) {
            p.f.at(indexOf({k, Word{}}), k - 1) = field.one();
        } else {
            for (const auto& [src, value] : grouped[NodeRef{k, Word{}}])
                p.f.at(indexOf(src), k - 1) = value;
        }
    }
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const NodeRef& node = nodes[j];
        const Tree& tree = forest.tree(node.component);
        for (Letter i = 1; i <= m; ++i) {
            const Word childWord = node.word.child(i);
            if (tree.contains(childWord)) {
                p.phi[i - 1].at(indexOf({node.component, childWord}), j) = field.one();
            } else {
                for (const auto& [src, value] : grouped[NodeRef{node.component, childWord}])
                    p.phi[i - 1].at(indexOf(src), j) = value;
            }
        }
    }
    return p;
}

/// Vectors phi_w f(v_k) for the nodes of F, in node order; parents always
/// precede children, so each vector is one matrix-vector product away.
template <class Fld>
std::vector<std::vector<typename Fld::Value>> nodeVectors(const CellPoint<Fld>& p,
                                                          const Forest& forest) {
    const std::vector<NodeRef> nodes = forest.nodes();
    std::vector<std::vector<typename Fld::Value>> vecs(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const NodeRef& node = nodes[j];
        if (node.word.empty()) {
            vecs[j] = p.f.column(node.component - 1);
        } else {
            const NodeRef parent{node.component, node.word.parent()};
            const std::size_t pj = static_cast<std::size_t>(
                std::lower_bound(nodes.begin(), nodes.end(), parent) - nodes.begin());
            vecs[j] = matVec(p.field, p.phi[node.word.lastLetter() - 1], vecs[pj]);
        }
    }
    return vecs;
}

/// Whether {phi_w f(v_k) : (k,w) in F} is a basis of W.
template <class Fld>
bool inChart(const CellPoint<Fld>& p, const Forest& forest) {
    if (forest.size() != p.d) return false;
    const std::vector<NodeRef> nodes = forest.nodes();
    EchelonBasis<Fld> basis(p.field, p.d);
    std::vector<std::vector<typename Fld::Value>> vecs(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const NodeRef& node = nodes[j];
        if (node.word.empty()) {
            vecs[j] = p.f.column(node.component - 1);
        } else {
            const NodeRef parent{node.component, node.word.parent()};
            const std::size_t pj = static_cast<std::size_t>(
                std::lower_bound(nodes.begin(), nodes.end(), parent) - nodes.begin());
            vecs[j] = matVec(p.field, p.phi[node.word.lastLetter() - 1], vecs[pj]);
        }
        if (!basis.insert(vecs[j])) return false;
    }
    return true;
}

namespace detail {

/// Full chart coordinates: row per node, column per critical pair.
template <class Fld>
Matrix<Fld> chartCoordinates(const CellPoint<Fld>& p, const Forest& forest) {
    const std::vector<NodeRef> nodes = forest.nodes();
    const std::vector<NodeRef> crit = criticalSet(forest);
    const auto vecs = nodeVectors(p, forest);
    Matrix<Fld> basisMat(p.d, p.d, p.field.zero());
    for (std::size_t j = 0; j < vecs.size(); ++j)
        for (std::size_t r = 0; r < p.d; ++r) basisMat.at(r, j) = vecs[j][r];
    Matrix<Fld> critMat(p.d, crit.size(), p.field.zero());
    for (std::size_t c = 0; c < crit.size(); ++c) {
        std::vector<typename Fld::Value> v;
        if (crit[c].word.empty()) {
            v = p.f.column(crit[c].component - 1);
        } else {
            const NodeRef parent{crit[c].component, crit[c].word.parent()};
            const std::size_t pj = static_cast<std::size_t>(
                std::lower_bound(nodes.begin(), nodes.end(), parent) - nodes.begin());
            v = matVec(p.field, p.phi[crit[c].word.lastLetter() - 1], vecs[pj]);
        }
        for (std::size_t r = 0; r < p.d; ++r) critMat.at(r, c) = v[r];
    }
    auto solved = solveColumns(p.field, basisMat, critMat);
    if (!solved)
        throw NotInChart("point is not in the chart of the given forest");
    return *solved;
}

} // namespace detail

/// Coordinates restricted to D(F); throws NotInChart when the node vectors
/// fail to form a basis.
template <class Fld>
LambdaAssignment<Fld> lambdaCoordinates(const CellPoint<Fld>& p, const Forest& forest) {
    validateCellPoint(p);
    if (forest.size() != p.d) throw NotInChart("forest size differs from d");
    const std::vector<NodeRef> nodes = forest.nodes();
    const std::vector<NodeRef> crit = criticalSet(forest);
    const Matrix<Fld> x = detail::chartCoordinates(p, forest);
    LambdaAssignment<Fld> lam;
    for (std::size_t c = 0; c < crit.size(); ++c)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (nodes[j] < crit[c]) lam.values.emplace(DPair{nodes[j], crit[c]}, x.at(j, c));
    return lam;
}

/// Membership in the cell Z_F: chart membership plus vanishing of every
/// coordinate indexed by a node following its critical pair.
template <class Fld>
bool inCell(const CellPoint<Fld>& p, const Forest& forest) {
    if (forest.size() != p.d || !inChart(p, forest)) return false;
    const std::vector<NodeRef> nodes = forest.nodes();
    const std::vector<NodeRef> crit = criticalSet(forest);
    const Matrix<Fld> x = detail::chartCoordinates(p, forest);
    for (std::size_t c = 0; c < crit.size(); ++c)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (!(nodes[j] < crit[c]) && !p.field.isZero(x.at(j, c))) return false;
    return true;
}

/// Closure test: iterated application of the phi to the column span of f.
template <class Fld>
bool isStable(const CellPoint<Fld>& p) {
    validateCellPoint(p);
    if (p.d == 0) return true;
    EchelonBasis<Fld> basis(p.field, p.d);
    std::vector<std::vector<typename Fld::Value>> fresh;
    for (std::uint32_t k = 0; k < p.n; ++k) {
        auto col = p.f.column(k);
        if (basis.insert(col)) fresh.push_back(std::move(col));
    }
    while (!fresh.empty() && basis.rank() < p.d) {
        std::vector<std::vector<typename Fld::Value>> next;
        for (const auto& v : fresh)
            for (std::uint32_t i = 0; i < p.m; ++i) {
                auto w = matVec(p.field, p.phi[i], v);
                if (basis.insert(w)) next.push_back(std::move(w));
            }
        fresh = std::move(next);
    }
    return basis.rank() == p.d;
}

/// The unique forest with p in Z_F, located as the compareForests-minimal
/// chart containing p; forests are scanned in the total order.
template <class Fld>
Forest classifyCell(const CellPoint<Fld>& p) {
    validateCellPoint(p);
    if (!isStable(p)) throw UnstablePoint("classifyCell: point is unstable");
    std::optional<Forest> found;
    forEachForestUntil(p.m, p.n, p.d, [&](const Forest& f) {
        if (inChart(p, f)) {
            found = f;
            return false;
        }
        return true;
    });
    if (!found) throw UnstablePoint("classifyCell: no chart contains the point");
    return *found;
}

/// Greedy accelerator: grow the forest in node order, keeping a node exactly
/// when its vector is independent of everything accepted before it. Agrees
/// with the scan (tested) and runs in O(d) insertions.
template <class Fld>
Forest classifyCellGreedy(const CellPoint<Fld>& p) {
    validateCellPoint(p);
    using Value = typename Fld::Value;
    struct Entry {
        NodeRef node;
        std::vector<Value> vec;
        bool operator>(const Entry& o) const { return o.node < node; }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
    for (std::uint32_t k = 1; k <= p.n; ++k)
        frontier.push({NodeRef{k, Word{}}, p.f.column(k - 1)});
    EchelonBasis<Fld> basis(p.field, p.d);
    std::vector<std::vector<Word>> comps(p.n);
    while (!frontier.empty() && basis.rank() < p.d) {
        Entry e = frontier.top();
        frontier.pop();
        if (!basis.insert(e.vec)) continue;
        comps[e.node.component - 1].push_back(e.node.word);
        for (Letter i = 1; i <= p.m; ++i)
            frontier.push({NodeRef{e.node.component, e.node.word.child(i)},
                           matVec(p.field, p.phi[i - 1], e.vec)});
    }
    if (basis.rank() < p.d) throw UnstablePoint("classifyCellGreedy: point is unstable");
    std::vector<Tree> trees;
    trees.reserve(p.n);
    for (auto& c : comps) trees.push_back(Tree::trustedSorted(std::move(c)));
    return Forest::trusted(p.m, std::move(trees));
}

/// One generator of the submodule U per critical pair: the lead term
/// x_{w'} (x) v_l minus the lambda-weighted node terms.
template <class Fld>
struct SubmoduleGenerator {
    NodeRef lead;
    std::map<NodeRef, typename Fld::Value> tail;
};

template <class Fld>
std::vector<SubmoduleGenerator<Fld>> submoduleGenerators(const Forest& forest,
                                                         const LambdaAssignment<Fld>& lam) {
    detail::checkLambdaDomain(forest, lam);
    auto grouped = detail::groupByTarget(lam);
    std::vector<SubmoduleGenerator<Fld>> out;
    for (const NodeRef& c : criticalSet(forest)) {
        SubmoduleGenerator<Fld> g;
        g.lead = c;
        for (const auto& [src, value] : grouped[c]) g.tail.emplace(src, value);
        out.push_back(std::move(g));
    }
    return out;
}

/// Symbolic entry classification of the normal form.
enum class PatternEntry : std::uint8_t { Zero = 0, One = 1, Free = 2 };

struct PatternMatrices {
    std::vector<std::vector<PatternEntry>> f;                // d x n
    std::vector<std::vector<std::vector<PatternEntry>>> phi; // m of d x d

    std::size_t freeCount() const {
        std::size_t c = 0;
        for (const auto& row : f)
            for (PatternEntry e : row) c += e == PatternEntry::Free;
        for (const auto& mat : phi)
            for (const auto& row : mat)
                for (PatternEntry e : row) c += e == PatternEntry::Free;
        return c;
    }
};

inline PatternMatrices patternMatrices(const Forest& forest) {
    const std::vector<NodeRef> nodes = forest.nodes();
    const std::size_t d = nodes.size();
    const std::uint32_t m = forest.arity(), n = forest.roots();
    auto indexOf = [&](const NodeRef& node) {
        return static_cast<std::size_t>(
            std::lower_bound(nodes.begin(), nodes.end(), node) - nodes.begin());
    };
    PatternMatrices pm;
    pm.f.assign(d, std::vector<PatternEntry>(n, PatternEntry::Zero));
    pm.phi.assign(m, std::vector<std::vector<PatternEntry>>(
                         d, std::vector<PatternEntry>(d, PatternEntry::Zero)));
    auto markTarget = [&](const NodeRef& target, auto&& setter) {
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (nodes[j] < target) setter(j);
    };
    for (std::uint32_t k = 1; k <= n; ++k) {
        if (!forest.tree(k).empty())
            pm.f[indexOf({k, Word{}})][k - 1] = PatternEntry::One;
        else
            markTarget(NodeRef{k, Word{}},
                       [&](std::size_t j) { pm.f[j][k - 1] = PatternEntry::Free; });
    }
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const NodeRef& node = nodes[j];
        const Tree& tree = forest.tree(node.component);
        for (Letter i = 1; i <= m; ++i) {
            const Word childWord = node.word.child(i);
            if (tree.contains(childWord))
                pm.phi[i - 1][indexOf({node.component, childWord})][j] = PatternEntry::One;
            else
                markTarget(NodeRef{node.component, childWord},
                           [&](std::size_t r) { pm.phi[i - 1][r][j] = PatternEntry::Free; });
        }
    }
    return pm;
}

} // namespace nchilb

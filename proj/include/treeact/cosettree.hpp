#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "treeact/errors.hpp"

namespace treeact {

/// A finite group given by its multiplication table; element 0 is the
/// identity. Used as the lamp-state group F of the wreath products.
struct FiniteGroup {
    std::string name;
    std::vector<std::vector<int>> table;  // table[a][b] = a·b
    std::vector<int> inv;

    int order() const { return static_cast<int>(table.size()); }
    int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inv[static_cast<std::size_t>(a)]; }
};

inline FiniteGroup cyclic_group(int n) {
    FiniteGroup g;
    g.name = "C" + std::to_string(n);
    g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    g.inv.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
        g.inv[static_cast<std::size_t>(a)] = (n - a) % n;
    }
    return g;
}

inline FiniteGroup symmetric_group_3() {
    // Elements are the 6 permutations of {0,1,2}, identity first.
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                            {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw Error("permutation lookup failed");
    };
    FiniteGroup g;
    g.name = "S3";
    g.table.assign(6, std::vector<int>(6));
    g.inv.resize(6);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c;
            for (int i = 0; i < 3; ++i)
                c[static_cast<std::size_t>(i)] =
                    perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
            g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index_of(c);
        }
        std::array<int, 3> ai;
        for (int i = 0; i < 3; ++i)
            ai[static_cast<std::size_t>(perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)])] = i;
        g.inv[static_cast<std::size_t>(a)] = index_of(ai);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Lamplighter F ≀ Z
// ---------------------------------------------------------------------------

/// Element f·t^k with f a finite-support function Z → F (identity labels not
/// stored) and the shift convention t·x_j·t⁻¹ = x_{j+1}.
struct LampElem {
    std::map<long long, int> f;
    long long shift = 0;
};

inline LampElem lamp_mul(const FiniteGroup& F, const LampElem& a, const LampElem& b) {
    LampElem r{a.f, a.shift + b.shift};
    for (const auto& [j, v] : b.f) {
        long long pos = j + a.shift;
        auto it = r.f.find(pos);
        int val = it == r.f.end() ? v : F.mul(it->second, v);
        if (val == 0)
            r.f.erase(pos);
        else
            r.f[pos] = val;
    }
    return r;
}

inline LampElem lamp_inv(const FiniteGroup& F, const LampElem& a) {
    LampElem r{{}, -a.shift};
    for (const auto& [j, v] : a.f) r.f[j - a.shift] = F.inverse(v);
    return r;
}

/// Vertex of one of the two lamplighter trees. Tree 1 descends the chain
/// G_i = ⊕_{j≤i} F_j, tree 2 the chain ⊕_{j≥i} F_j; a coset f·t^level·G₀ is
/// determined by the level together with f beyond the level (positions > level
/// on tree 1, < level on tree 2).
struct LampVertex {
    int tree;  // 1 or 2
    long long level;
    std::map<long long, int> key;

    bool operator==(const LampVertex& o) const {
        return tree == o.tree && level == o.level && key == o.key;
    }
    bool operator<(const LampVertex& o) const {
        return std::tie(tree, level, key) < std::tie(o.tree, o.level, o.key);
    }
};

inline std::map<long long, int> lamp_restrict(const std::map<long long, int>& f, int tree,
                                              long long level) {
    std::map<long long, int> out;
    for (const auto& [j, v] : f)
        if ((tree == 1 && j > level) || (tree == 2 && j < level)) out.emplace(j, v);
    return out;
}

inline LampElem lamp_vertex_rep(const LampVertex& v) { return {v.key, v.level}; }

inline LampVertex lamp_base_vertex(int tree, long long level = 0) { return {tree, level, {}}; }

inline LampVertex ct_act(const FiniteGroup& F, const LampElem& g, const LampVertex& v) {
    LampElem moved = lamp_mul(F, g, lamp_vertex_rep(v));
    return {v.tree, moved.shift, lamp_restrict(moved.f, v.tree, moved.shift)};
}

/// Parent vertex: one step along the ray of increasing stabilisers.
inline LampVertex ct_parent(const LampVertex& v) {
    long long lvl = v.tree == 1 ? v.level + 1 : v.level - 1;
    return {v.tree, lvl, lamp_restrict(v.key, v.tree, lvl)};
}

// ---------------------------------------------------------------------------
// F ≀ Z²
// ---------------------------------------------------------------------------

using Cell = std::pair<long long, long long>;  // (column i, row j)

/// Element f·s^m·t^n with s·x_{i,j}·s⁻¹ = x_{i+1,j} and t·x_{i,j}·t⁻¹ = x_{i,j+1}.
struct Lamp2Elem {
    std::map<Cell, int> f;
    long long ms = 0, mt = 0;
};

inline Lamp2Elem lamp2_mul(const FiniteGroup& F, const Lamp2Elem& a, const Lamp2Elem& b) {
    Lamp2Elem r{a.f, a.ms + b.ms, a.mt + b.mt};
    for (const auto& [c, v] : b.f) {
        Cell pos{c.first + a.ms, c.second + a.mt};
        auto it = r.f.find(pos);
        int val = it == r.f.end() ? v : F.mul(it->second, v);
        if (val == 0)
            r.f.erase(pos);
        else
            r.f[pos] = val;
    }
    return r;
}

inline Lamp2Elem lamp2_inv(const FiniteGroup& F, const Lamp2Elem& a) {
    Lamp2Elem r{{}, -a.ms, -a.mt};
    for (const auto& [c, v] : a.f) r.f[{c.first - a.ms, c.second - a.mt}] = F.inverse(v);
    return r;
}

/// The four trees: 1 = +s (key keeps columns > level), 2 = −s (columns <
/// level), 3 = +t (rows > level), 4 = −t (rows < level). On an s-tree the
/// level is the s-shift and the t-shift is absorbed into the vertex subgroup
/// (it contains t), and symmetrically.
struct Lamp2Vertex {
    int tree;  // 1..4
    long long level;
    std::map<Cell, int> key;

    bool operator==(const Lamp2Vertex& o) const {
        return tree == o.tree && level == o.level && key == o.key;
    }
    bool operator<(const Lamp2Vertex& o) const {
        return std::tie(tree, level, key) < std::tie(o.tree, o.level, o.key);
    }
};

inline std::map<Cell, int> lamp2_restrict(const std::map<Cell, int>& f, int tree,
                                          long long level) {
    std::map<Cell, int> out;
    for (const auto& [c, v] : f) {
        long long coord = tree <= 2 ? c.first : c.second;
        bool keep = (tree == 1 || tree == 3) ? coord > level : coord < level;
        if (keep) out.emplace(c, v);
    }
    return out;
}

inline Lamp2Elem lamp2_vertex_rep(const Lamp2Vertex& v) {
    Lamp2Elem r;
    r.f = v.key;
    (v.tree <= 2 ? r.ms : r.mt) = v.level;
    return r;
}

inline Lamp2Vertex lamp2_base_vertex(int tree, long long level = 0) { return {tree, level, {}}; }

inline Lamp2Vertex ct_act(const FiniteGroup& F, const Lamp2Elem& g, const Lamp2Vertex& v) {
    Lamp2Elem moved = lamp2_mul(F, g, lamp2_vertex_rep(v));
    long long lvl = v.tree <= 2 ? moved.ms : moved.mt;
    return {v.tree, lvl, lamp2_restrict(moved.f, v.tree, lvl)};
}

inline Lamp2Vertex ct_parent(const Lamp2Vertex& v) {
    long long lvl = (v.tree == 1 || v.tree == 3) ? v.level + 1 : v.level - 1;
    return {v.tree, lvl, lamp2_restrict(v.key, v.tree, lvl)};
}

// ---------------------------------------------------------------------------
// Houghton group H₂
// ---------------------------------------------------------------------------

/// Element σ·t^k acting on Z by x ↦ σ(x − k), with σ a finite-support
/// permutation (only moved points stored) and t the shift x ↦ x − 1.
struct HoughtonElem {
    std::map<long long, long long> sigma;
    long long shift = 0;

    long long apply_sigma(long long x) const {
        auto it = sigma.find(x);
        return it == sigma.end() ? x : it->second;
    }
    long long apply(long long x) const { return apply_sigma(x - shift); }
};

inline void houghton_check(const HoughtonElem& g) {
    std::set<long long> vals;
    std::set<long long> dom;
    for (const auto& [x, y] : g.sigma) {
        if (x == y) throw Error("stored fixed point in permutation table");
        dom.insert(x);
        vals.insert(y);
    }
    if (dom != vals) throw Error("exception table is not a permutation");
}

inline HoughtonElem houghton_mul(const HoughtonElem& a, const HoughtonElem& b) {
    // (a·b)(x) = a(b(x)); with a = σ_a t^{k_a}, b = σ_b t^{k_b} the product is
    // σ t^{k_a+k_b} where σ(z) = σ_a(σ_b(z + k_a) − k_a).
    HoughtonElem r;
    r.shift = a.shift + b.shift;
    std::set<long long> zs;
    for (const auto& [x, y] : b.sigma) zs.insert(x - a.shift);
    for (const auto& [x, y] : a.sigma) {
        // z with σ_b(z + k_a) − k_a = x, i.e. z = σ_b⁻¹(x + k_a) − k_a.
        long long target = x + a.shift;
        long long pre = target;
        for (const auto& [u, w] : b.sigma)
            if (w == target) pre = u;
        zs.insert(pre - a.shift);
    }
    for (long long z : zs) {
        long long img = a.apply_sigma(b.apply_sigma(z + a.shift) - a.shift);
        if (img != z) r.sigma[z] = img;
    }
    return r;
}

inline HoughtonElem houghton_inv(const HoughtonElem& a) {
    // a = σ·t^k composes as σ ∘ t^k, so a⁻¹ = t^{-k} ∘ σ⁻¹ = σ'·t^{-k} with
    // σ'(z) = σ⁻¹(z − k) + k.
    HoughtonElem r;
    r.shift = -a.shift;
    for (const auto& [x, y] : a.sigma) r.sigma[y + a.shift] = x + a.shift;
    return r;
}

/// Vertex of a Houghton tree. Tree 1 uses the chain FSym((−∞, i]); the coset
/// of σ·t^{−i} is determined by the level i and σ's moved points above i.
/// Tree 2 uses FSym([j, ∞)) and keeps moved points below the level.
struct HoughtonVertex {
    int tree;  // 1 or 2
    long long level;
    std::map<long long, long long> key;  // moved points of σ on the kept ray

    bool operator==(const HoughtonVertex& o) const {
        return tree == o.tree && level == o.level && key == o.key;
    }
    bool operator<(const HoughtonVertex& o) const {
        return std::tie(tree, level, key) < std::tie(o.tree, o.level, o.key);
    }
};

inline std::map<long long, long long> houghton_restrict(
    const std::map<long long, long long>& sigma, int tree, long long level) {
    std::map<long long, long long> out;
    for (const auto& [x, y] : sigma)
        if ((tree == 1 && x > level) || (tree == 2 && x < level)) out.emplace(x, y);
    return out;
}

/// Complete a vertex key to a genuine permutation: keep the key's assignments
/// on the stored ray and extend over the free ray by the order-preserving
/// bijection onto the remaining points. The extension is identity outside a
/// finite window, so the result lies in the group.
inline HoughtonElem houghton_vertex_rep(const HoughtonVertex& v) {
    HoughtonElem rep;
    rep.shift = -v.level;
    if (v.key.empty()) return rep;

    // Validate the key: domain on the kept ray, values distinct, and no value
    // colliding with an un-excepted ray point (which the key declares fixed).
    std::set<long long> key_dom, key_vals;
    for (const auto& [x, y] : v.key) {
        bool on_ray = v.tree == 1 ? x > v.level : x < v.level;
        if (!on_ray || x == y || !key_vals.insert(y).second)
            throw Error("invalid vertex key");
        key_dom.insert(x);
    }
    for (long long y : key_vals) {
        bool on_ray = v.tree == 1 ? y > v.level : y < v.level;
        if (on_ray && !key_dom.count(y)) throw Error("vertex key is not injective on the ray");
    }

    long long lo = v.level, hi = v.level;
    for (const auto& [x, y] : v.key) {
        lo = std::min({lo, x, y});
        hi = std::max({hi, x, y});
    }
    std::set<long long> used;  // values taken by the key
    for (const auto& [x, y] : v.key) used.insert(y);

    if (v.tree == 1) {
        // Free domain (−∞, level]; target = everything not hit by the key or
        // by the identity on the un-excepted part of (level, ∞).
        std::set<long long> idle;  // key domain points whose identity image is free
        std::vector<long long> targets;
        for (long long y = v.level; y >= lo - 1; --y)
            if (!used.count(y)) targets.push_back(y);
        for (const auto& [x, _] : v.key)
            if (!used.count(x)) targets.push_back(x);
        std::sort(targets.rbegin(), targets.rend());
        long long x = v.level;
        for (long long y : targets) {
            if (x != y) rep.sigma[x] = y;
            --x;
        }
        // below this point the order-preserving extension is the identity
        if (x != lo - 2) throw Error("vertex completion imbalance");
    } else {
        std::vector<long long> targets;
        for (long long y = v.level; y <= hi + 1; ++y)
            if (!used.count(y)) targets.push_back(y);
        for (const auto& [x, _] : v.key)
            if (!used.count(x)) targets.push_back(x);
        std::sort(targets.begin(), targets.end());
        long long x = v.level;
        for (long long y : targets) {
            if (x != y) rep.sigma[x] = y;
            ++x;
        }
        if (x != hi + 2) throw Error("vertex completion imbalance");
    }
    for (const auto& [x, y] : v.key) rep.sigma[x] = y;
    houghton_check(rep);
    return rep;
}

inline HoughtonVertex houghton_base_vertex(int tree, long long level = 0) {
    return {tree, level, {}};
}

inline HoughtonVertex ct_act(const HoughtonElem& g, const HoughtonVertex& v) {
    HoughtonElem moved = houghton_mul(g, houghton_vertex_rep(v));
    long long lvl = -moved.shift;
    return {v.tree, lvl, houghton_restrict(moved.sigma, v.tree, lvl)};
}

inline HoughtonVertex ct_parent(const HoughtonVertex& v) {
    long long lvl = v.tree == 1 ? v.level + 1 : v.level - 1;
    return {v.tree, lvl, houghton_restrict(v.key, v.tree, lvl)};
}

// ---------------------------------------------------------------------------
// Classification and valence
// ---------------------------------------------------------------------------

struct CtClassification {
    bool loxodromic;
    long long length;               // translation length when loxodromic
    long long fixed_level;          // witness level when elliptic
};

/// An element f·t^k moves every level by k, so it is loxodromic with length
/// |k| when k ≠ 0 and otherwise fixes the empty-key vertex at any level past
/// its support.
inline CtClassification ct_classify(const LampElem& g, int tree) {
    if (g.shift != 0) return {true, std::llabs(g.shift), 0};
    long long lvl = 0;
    for (const auto& [j, v] : g.f) lvl = tree == 1 ? std::max(lvl, j) : std::min(lvl, j);
    return {false, 0, lvl};
}

inline CtClassification ct_classify(const Lamp2Elem& g, int tree) {
    long long shift = tree <= 2 ? g.ms : g.mt;
    if (shift != 0) return {true, std::llabs(shift), 0};
    long long lvl = 0;
    for (const auto& [c, v] : g.f) {
        long long coord = tree <= 2 ? c.first : c.second;
        lvl = (tree == 1 || tree == 3) ? std::max(lvl, coord) : std::min(lvl, coord);
    }
    return {false, 0, lvl};
}

inline CtClassification ct_classify(const HoughtonElem& g, int tree) {
    if (g.shift != 0) return {true, std::llabs(g.shift), 0};
    long long lvl = 0;
    for (const auto& [x, y] : g.sigma) lvl = tree == 1 ? std::max(lvl, x) : std::min(lvl, x);
    return {false, 0, lvl};
}

struct Valence {
    bool infinite;
    long long value;  // meaningful only when finite
};

/// One (parent) plus the index of consecutive chain subgroups: |F| + 1 for the
/// lamplighter trees, infinite for the F≀Z² and Houghton trees.
inline Valence ct_valence(const FiniteGroup& F, const LampVertex&) {
    return {false, F.order() + 1};
}
inline Valence ct_valence(const FiniteGroup&, const Lamp2Vertex&) { return {true, 0}; }
inline Valence ct_valence(const HoughtonVertex&) { return {true, 0}; }

// ---------------------------------------------------------------------------
// Stabiliser enumeration
// ---------------------------------------------------------------------------

/// Stabiliser of a set of lamplighter vertices, intersected with the window.
/// Any fixing element has shift 0 and its labels vanish beyond each vertex's
/// level, so only the window positions allowed by every vertex are free; each
/// candidate is verified against every vertex through ct_act.
inline std::vector<LampElem> ct_stabiliser_enum(const FiniteGroup& F,
                                                const std::vector<LampVertex>& vertices,
                                                long long win_lo, long long win_hi,
                                                long long /*shift_bound*/) {
    std::vector<long long> positions;
    for (long long j = win_lo; j <= win_hi; ++j) {
        bool ok = true;
        for (const LampVertex& v : vertices)
            if ((v.tree == 1 && j > v.level) || (v.tree == 2 && j < v.level)) ok = false;
        if (ok) positions.push_back(j);
    }
    std::vector<LampElem> out;
    std::vector<int> labels(positions.size(), 0);
    for (;;) {
        LampElem g;
        for (std::size_t i = 0; i < positions.size(); ++i)
            if (labels[i] != 0) g.f[positions[i]] = labels[i];
        bool fixes = true;
        for (const LampVertex& v : vertices)
            if (!(ct_act(F, g, v) == v)) fixes = false;
        if (fixes) out.push_back(std::move(g));
        std::size_t i = 0;
        for (; i < labels.size(); ++i) {
            if (++labels[i] < F.order()) break;
            labels[i] = 0;
        }
        if (i == labels.size()) break;
        if (positions.empty()) break;
    }
    if (positions.empty() && out.empty()) out.push_back(LampElem{});
    std::sort(out.begin(), out.end(), [](const LampElem& a, const LampElem& b) {
        return std::tie(a.shift, a.f) < std::tie(b.shift, b.f);
    });
    return out;
}

inline std::vector<Lamp2Elem> ct_stabiliser_enum(const FiniteGroup& F,
                                                 const std::vector<Lamp2Vertex>& vertices,
                                                 long long win_lo, long long win_hi,
                                                 long long /*shift_bound*/) {
    std::vector<Cell> cells;
    for (long long i = win_lo; i <= win_hi; ++i)
        for (long long j = win_lo; j <= win_hi; ++j) {
            bool ok = true;
            for (const Lamp2Vertex& v : vertices) {
                long long coord = v.tree <= 2 ? i : j;
                if ((v.tree == 1 || v.tree == 3) ? coord > v.level : coord < v.level) ok = false;
            }
            if (ok) cells.push_back({i, j});
        }
    std::vector<Lamp2Elem> out;
    std::vector<int> labels(cells.size(), 0);
    for (;;) {
        Lamp2Elem g;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (labels[i] != 0) g.f[cells[i]] = labels[i];
        bool fixes = true;
        for (const Lamp2Vertex& v : vertices)
            if (!(ct_act(F, g, v) == v)) fixes = false;
        if (fixes) out.push_back(std::move(g));
        if (cells.empty()) break;
        std::size_t i = 0;
        for (; i < labels.size(); ++i) {
            if (++labels[i] < F.order()) break;
            labels[i] = 0;
        }
        if (i == labels.size()) break;
    }
    if (cells.empty() && out.empty()) out.push_back(Lamp2Elem{});
    std::sort(out.begin(), out.end(), [](const Lamp2Elem& a, const Lamp2Elem& b) {
        return std::tie(a.ms, a.mt, a.f) < std::tie(b.ms, b.mt, b.f);
    });
    return out;
}

/// Houghton stabiliser: a fixing element has shift 0 and must fix, pointwise,
/// the image of each vertex's kept ray under the vertex representative; the
/// free points inside the window are permuted arbitrarily, and every candidate
/// permutation is verified through ct_act.
inline std::vector<HoughtonElem> ct_stabiliser_enum(const std::vector<HoughtonVertex>& vertices,
                                                    long long win_lo, long long win_hi,
                                                    long long /*shift_bound*/) {
    std::vector<long long> free_pts;
    for (long long x = win_lo; x <= win_hi; ++x) {
        bool ok = true;
        for (const HoughtonVertex& v : vertices) {
            // A fixing element leaves the image of the vertex's kept ray
            // pointwise fixed. That image is the un-excepted part of the ray
            // together with the key's values.
            bool on_ray = v.tree == 1 ? x > v.level : x < v.level;
            bool excepted = v.key.count(x) > 0;
            bool is_value = false;
            for (const auto& [d, y] : v.key)
                if (y == x) is_value = true;
            if ((on_ray && !excepted) || is_value) ok = false;
        }
        if (ok) free_pts.push_back(x);
    }
    std::vector<HoughtonElem> out;
    std::vector<long long> perm = free_pts;
    std::sort(perm.begin(), perm.end());
    do {
        HoughtonElem g;
        for (std::size_t i = 0; i < free_pts.size(); ++i)
            if (free_pts[i] != perm[i]) g.sigma[free_pts[i]] = perm[i];
        bool fixes = true;
        for (const HoughtonVertex& v : vertices)
            if (!(ct_act(g, v) == v)) fixes = false;
        if (fixes) out.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end(), [](const HoughtonElem& a, const HoughtonElem& b) {
        return std::tie(a.shift, a.sigma) < std::tie(b.shift, b.sigma);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

inline std::string format_elem(const LampElem& g) {
    std::ostringstream os;
    for (const auto& [j, v] : g.f) {
        os << "x[" << j << "]";
        if (v != 1) os << ":" << v;
        os << " ";
    }
    if (g.shift != 0) os << "t^" << g.shift << " ";
    std::string s = os.str();
    if (s.empty()) return "id";
    s.pop_back();
    return s;
}

inline std::string format_elem(const Lamp2Elem& g) {
    std::ostringstream os;
    for (const auto& [c, v] : g.f) {
        os << "x[" << c.first << "," << c.second << "]";
        if (v != 1) os << ":" << v;
        os << " ";
    }
    if (g.ms != 0) os << "s^" << g.ms << " ";
    if (g.mt != 0) os << "t^" << g.mt << " ";
    std::string s = os.str();
    if (s.empty()) return "id";
    s.pop_back();
    return s;
}

inline std::string format_elem(const HoughtonElem& g) {
    std::ostringstream os;
    std::set<long long> done;
    for (const auto& [x, _] : g.sigma) {
        if (done.count(x)) continue;
        os << "(";
        long long cur = x;
        bool first = true;
        while (!done.count(cur)) {
            done.insert(cur);
            os << (first ? "" : " ") << cur;
            first = false;
            cur = g.apply_sigma(cur);
        }
        os << ")";
    }
    if (g.shift != 0) os << (g.sigma.empty() ? "" : " ") << "t^" << g.shift;
    std::string s = os.str();
    return s.empty() ? "id" : s;
}

template <class V>
std::string format_vertex(const V& v) {
    std::ostringstream os;
    os << "(tree " << v.tree << ", level " << v.level << ", key {";
    bool first = true;
    for (const auto& kv : v.key) {
        if (!first) os << ", ";
        first = false;
        if constexpr (std::is_same_v<V, Lamp2Vertex>) {
            os << "x[" << kv.first.first << "," << kv.first.second << "]:" << kv.second;
        } else if constexpr (std::is_same_v<V, HoughtonVertex>) {
            os << kv.first << "->" << kv.second;
        } else {
            os << "x[" << kv.first << "]:" << kv.second;
        }
    }
    os << "})";
    return os.str();
}

}  // namespace treeact

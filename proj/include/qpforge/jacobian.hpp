// Finite-dimensional Jacobian algebra of a quiver with cubic potential,
// realized as explicit graded bases of monomial paths with normal-form
// reduction data.
//
// Degree n+1 is computed from degree n: the spanning set is
// {u.a : u basis path of degree n, a composable arrow}; the dependencies
// imposed are {v.r : v basis path of degree n-1, r cyclic-derivative
// relation}, rewritten through the degree-n normal forms and reduced by
// exact Gaussian elimination. The ideal is generated in degree 2, and the
// lower degree part of v.r is already in normal form, so this reaches
// exactly the quotient. Path order (degree, then lexicographic arrow-id
// sequence) fixes the pivots, so bases are reproducible bit for bit.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "qpforge/families.hpp"
#include "qpforge/linalg.hpp"
#include "qpforge/quiver.hpp"

namespace qpforge {

struct RelationSet {
  std::vector<Relation> relations;
  std::vector<std::vector<uint32_t>> by_src;  // relation indices per source vertex

  size_t size() const { return relations.size(); }
};

// One relation per arrow of the quiver: the cyclic derivative of w.
// Identically-zero derivatives are dropped.
inline RelationSet jacobian_relations(const Quiver& q, const Potential& w) {
  RelationSet rs;
  rs.by_src.resize(q.vertices.size());
  for (const Arrow& a : q.arrows) {
    Relation r = cyclic_derivative(q, w, a.id);
    if (r.terms.empty()) continue;
    rs.by_src[r.src].push_back(static_cast<uint32_t>(rs.relations.size()));
    rs.relations.push_back(std::move(r));
  }
  return rs;
}

struct JacobianAlgebra {
  Quiver quiver;
  Potential potential;
  RelationSet relations;

  struct Level {
    std::vector<Path> basis;  // lexicographic by arrow-id sequence
    std::vector<uint32_t> src, tgt;
    // (basis index at previous level, arrow) -> coordinates at this level
    std::unordered_map<uint64_t, SparseVec> ext;
  };
  std::vector<Level> levels;
  int top_degree = 0;
  size_t total_dimension = 0;
  std::vector<size_t> flat_offset;

  static uint64_t ext_key(uint32_t u, uint32_t arrow) {
    return (static_cast<uint64_t>(u) << 32) | arrow;
  }

  size_t flat(int degree, uint32_t idx) const { return flat_offset[degree] + idx; }

  // u.a for a basis element u of `degree`; empty when the product is zero.
  const SparseVec& ext_of(int degree, uint32_t u, uint32_t arrow) const {
    static const SparseVec empty;
    if (degree + 1 > top_degree) return empty;
    const auto& m = levels[degree + 1].ext;
    auto it = m.find(ext_key(u, arrow));
    return it == m.end() ? empty : it->second;
  }

  // Right multiplication of a degree-d coordinate vector by an arrow.
  SparseVec rmul(int degree, const SparseVec& v, uint32_t arrow) const {
    SparseVec out;
    for (const auto& [u, c] : v) vec_axpy(out, c, ext_of(degree, u, arrow));
    return out;
  }

  // Normal form of a single path; throws IllFormedPath on bad input.
  std::pair<int, SparseVec> nf_path(const Path& p) const {
    if (!path_valid(quiver, p))
      throw IllFormedPath("path is not composable in the quiver");
    SparseVec v{{p.source, Cyc3::one()}};
    int deg = 0;
    for (uint32_t a : p.arrows) {
      v = rmul(deg, v, a);
      ++deg;
      if (v.empty()) break;
    }
    return {static_cast<int>(p.length()), v};
  }

  // Product of two basis elements, as coordinates in degree d1+d2.
  SparseVec basis_product(int d1, uint32_t i1, int d2, uint32_t i2) const {
    if (levels[d1].tgt[i1] != levels[d2].src[i2]) return {};
    SparseVec v{{i1, Cyc3::one()}};
    int deg = d1;
    for (uint32_t a : levels[d2].basis[i2].arrows) {
      v = rmul(deg, v, a);
      ++deg;
      if (v.empty()) break;
    }
    return v;
  }
};

// Linear combination of paths reduced to basis coordinates, split by degree.
using NormalForm = std::map<int, SparseVec>;

inline NormalForm normal_form(const JacobianAlgebra& J,
                              const std::vector<std::pair<Path, Cyc3>>& expr) {
  NormalForm out;
  for (const auto& [p, c] : expr) {
    auto [deg, v] = J.nf_path(p);
    if (v.empty()) continue;
    SparseVec& acc = out[deg];
    vec_axpy(acc, c, v);
    if (acc.empty()) out.erase(deg);
  }
  return out;
}

inline bool nf_is_zero(const NormalForm& nf) {
  for (const auto& [deg, v] : nf)
    if (!v.empty()) return false;
  return true;
}

inline JacobianAlgebra compute_algebra(const Quiver& q, const Potential& w, int degree_cap = -1) {
  if (degree_cap < 0) degree_cap = 3 * q.s;
  if (degree_cap < 1) throw InvalidParameter("degree cap must be at least 1");
  JacobianAlgebra J;
  J.quiver = q;
  J.potential = w;
  J.relations = jacobian_relations(q, w);

  const uint32_t nv = static_cast<uint32_t>(q.vertices.size());

  // degree 0: vertex idempotents
  JacobianAlgebra::Level l0;
  for (uint32_t v = 0; v < nv; ++v) {
    l0.basis.push_back(Path{v, {}});
    l0.src.push_back(v);
    l0.tgt.push_back(v);
  }
  J.levels.push_back(std::move(l0));

  // degree 1: all arrows (there are no degree-1 relations)
  JacobianAlgebra::Level l1;
  for (const Arrow& a : q.arrows) {
    uint32_t idx = static_cast<uint32_t>(l1.basis.size());
    l1.basis.push_back(Path{a.src, {a.id}});
    l1.src.push_back(a.src);
    l1.tgt.push_back(a.tgt);
    l1.ext.emplace(JacobianAlgebra::ext_key(a.src, a.id), SparseVec{{idx, Cyc3::one()}});
  }
  const bool l1_empty = l1.basis.empty();
  J.levels.push_back(std::move(l1));

  J.top_degree = l1_empty ? 0 : 1;
  if (!l1_empty) {
    for (int n = 2; n <= degree_cap; ++n) {
      const auto& prev = J.levels[n - 1];
      const auto& prev2 = J.levels[n - 2];

      // spanning set, in lexicographic path order
      struct Span {
        uint32_t u, arrow, src, tgt;
      };
      std::vector<Span> spans;
      std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> block_cols;
      for (uint32_t u = 0; u < prev.basis.size(); ++u)
        for (uint32_t a : q.out(prev.tgt[u])) {
          uint32_t g = static_cast<uint32_t>(spans.size());
          spans.push_back({u, a, prev.src[u], q.arrows[a].tgt});
          block_cols[{prev.src[u], q.arrows[a].tgt}].push_back(g);
        }
      std::map<std::pair<uint32_t, uint32_t>, uint32_t> span_index;
      for (uint32_t g = 0; g < spans.size(); ++g)
        span_index.emplace(std::make_pair(spans[g].u, spans[g].arrow), g);

      // dependencies: v.r for v in basis_{n-2}, r relation at tgt(v)
      std::map<std::pair<uint32_t, uint32_t>, std::vector<SparseVec>> block_rows;
      for (uint32_t v = 0; v < prev2.basis.size(); ++v) {
        for (uint32_t ri : J.relations.by_src[prev2.tgt[v]]) {
          const Relation& r = J.relations.relations[ri];
          SparseVec row;
          for (const auto& [pair, coeff] : r.terms) {
            const SparseVec& mid = J.ext_of(n - 2, v, pair[0]);
            for (const auto& [u, d] : mid) {
              auto it = span_index.find(std::make_pair(u, pair[1]));
              if (it == span_index.end()) throw Error("spanning path missing");
              vec_axpy(row, coeff * d, SparseVec{{it->second, Cyc3::one()}});
            }
          }
          if (!row.empty()) block_rows[{prev2.src[v], r.tgt}].push_back(std::move(row));
        }
      }

      // per-block elimination; non-pivot spanning paths survive as basis
      std::vector<char> is_basis(spans.size(), 1);
      std::map<uint32_t, SparseVec> pivot_row;  // over global spanning indices
      for (auto& [blk, rows] : block_rows) {
        RowReducer red;
        for (auto& row : rows) red.insert(std::move(row));
        for (const auto& [p, row] : red.rows()) {
          is_basis[p] = 0;
          pivot_row.emplace(p, row);
        }
      }

      JacobianAlgebra::Level lvl;
      std::vector<uint32_t> new_index(spans.size(), UINT32_MAX);
      for (uint32_t g = 0; g < spans.size(); ++g) {
        if (!is_basis[g]) continue;
        uint32_t idx = static_cast<uint32_t>(lvl.basis.size());
        new_index[g] = idx;
        Path p = prev.basis[spans[g].u];
        p.arrows.push_back(spans[g].arrow);
        lvl.basis.push_back(std::move(p));
        lvl.src.push_back(spans[g].src);
        lvl.tgt.push_back(spans[g].tgt);
      }
      for (uint32_t g = 0; g < spans.size(); ++g) {
        SparseVec coords;
        if (is_basis[g]) {
          coords = {{new_index[g], Cyc3::one()}};
        } else {
          // pivot row: x_g = -sum over non-pivot columns; new_index is
          // monotone in the column order, so coords stay sorted
          const SparseVec& row = pivot_row.at(g);
          for (const auto& [col, c] : row) {
            if (col == g) continue;
            coords.emplace_back(new_index[col], -c);
          }
        }
        lvl.ext.emplace(JacobianAlgebra::ext_key(spans[g].u, spans[g].arrow), std::move(coords));
      }

      const bool empty = lvl.basis.empty();
      J.levels.push_back(std::move(lvl));
      if (empty) {
        J.top_degree = n - 1;
        break;
      }
      J.top_degree = n;
      if (n == degree_cap)
        throw DimensionCapExceeded("basis still nonzero at degree " + std::to_string(n));
    }
  }

  while (static_cast<int>(J.levels.size()) > J.top_degree + 1) J.levels.pop_back();
  J.flat_offset.assign(J.levels.size() + 1, 0);
  for (size_t d = 0; d < J.levels.size(); ++d)
    J.flat_offset[d + 1] = J.flat_offset[d] + J.levels[d].basis.size();
  J.total_dimension = J.flat_offset.back();
  return J;
}

// Basis of e_x J: all basis paths with source x, by degree then path order.
inline std::vector<std::pair<int, uint32_t>> vertex_basis(const JacobianAlgebra& J, uint32_t x) {
  if (x >= J.quiver.vertices.size()) throw UnknownVertex("vertex index out of range");
  std::vector<std::pair<int, uint32_t>> out;
  for (int d = 0; d <= J.top_degree; ++d)
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i)
      if (J.levels[d].src[i] == x) out.emplace_back(d, i);
  return out;
}

inline std::vector<size_t> vertex_dims(const JacobianAlgebra& J) {
  std::vector<size_t> dims(J.quiver.vertices.size(), 0);
  for (int d = 0; d <= J.top_degree; ++d)
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i) ++dims[J.levels[d].src[i]];
  return dims;
}

struct SocleElement {
  int degree = 0;
  SparseVec v;  // coordinates over the degree-`degree` basis
};

// Elements of e_x J killed by right multiplication with every arrow,
// computed degreewise as kernels.
inline std::vector<SocleElement> socle(const JacobianAlgebra& J, uint32_t x) {
  if (x >= J.quiver.vertices.size()) throw UnknownVertex("vertex index out of range");
  std::vector<SocleElement> out;
  for (int d = 0; d <= J.top_degree; ++d) {
    std::vector<uint32_t> cols;  // basis indices with source x
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i)
      if (J.levels[d].src[i] == x) cols.push_back(i);
    if (cols.empty()) continue;
    // constraint rows indexed by (arrow, next-level basis element)
    std::map<uint64_t, SparseVec> rows;
    for (uint32_t c = 0; c < cols.size(); ++c)
      for (const Arrow& a : J.quiver.arrows) {
        if (a.src != J.levels[d].tgt[cols[c]]) continue;
        for (const auto& [w, coeff] : J.ext_of(d, cols[c], a.id)) {
          SparseVec& row = rows[(static_cast<uint64_t>(a.id) << 32) | w];
          vec_axpy(row, coeff, SparseVec{{c, Cyc3::one()}});
        }
      }
    std::vector<SparseVec> eqs;
    eqs.reserve(rows.size());
    for (auto& [k, r] : rows) eqs.push_back(std::move(r));
    for (const SparseVec& k : kernel_basis(eqs, static_cast<uint32_t>(cols.size()))) {
      SocleElement e;
      e.degree = d;
      for (const auto& [c, coeff] : k) e.v.emplace_back(cols[c], coeff);
      out.push_back(std::move(e));
    }
  }
  return out;
}

// x -> common target of Soc(e_x J). Defined only when each socle is simple
// (one dimensional here) and the assignment is a bijection.
inline std::vector<uint32_t> nakayama_permutation(const JacobianAlgebra& J) {
  const uint32_t nv = static_cast<uint32_t>(J.quiver.vertices.size());
  std::vector<uint32_t> perm(nv, UINT32_MAX);
  std::vector<char> hit(nv, 0);
  for (uint32_t x = 0; x < nv; ++x) {
    auto soc = socle(J, x);
    size_t dim = soc.size();
    if (dim != 1)
      throw NotSelfinjectiveBasic("Soc(e_x J) at " + J.quiver.vertices[x].name() +
                                  " has dimension " + std::to_string(dim));
    const auto& e = soc.front();
    uint32_t y = J.levels[e.degree].tgt[e.v.front().first];
    for (const auto& [i, c] : e.v)
      if (J.levels[e.degree].tgt[i] != y)
        throw NotSelfinjectiveBasic("socle at " + J.quiver.vertices[x].name() +
                                    " mixes target vertices");
    perm[x] = y;
    if (hit[y])
      throw NotSelfinjectiveBasic("socle targets collide at " + J.quiver.vertices[y].name());
    hit[y] = 1;
  }
  return perm;
}

enum class Symmetry {
  Symmetric,
  WeaklySymmetricOnly,
  NotWeaklySymmetric,
  NotSelfinjective,
  Inconclusive,
};

inline std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::WeaklySymmetricOnly: return "weakly_symmetric_only";
    case Symmetry::NotWeaklySymmetric: return "not_weakly_symmetric";
    case Symmetry::NotSelfinjective: return "not_selfinjective";
    default: return "inconclusive";
  }
}

namespace detail {

// Span of all commutators [u, v]. It suffices to commute basis elements with
// the generators: [u, vg] = [uv, g] + [gu, v] reduces longer words.
inline std::vector<SparseVec> commutator_rows(const JacobianAlgebra& J) {
  std::vector<SparseVec> rows;
  for (int d = 0; d <= J.top_degree; ++d)
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i) {
      // [b, e_y] puts every non-closed basis path in the span
      if (J.levels[d].src[i] != J.levels[d].tgt[i])
        rows.push_back({{static_cast<uint32_t>(J.flat(d, i)), Cyc3::one()}});
      for (const Arrow& a : J.quiver.arrows) {
        SparseVec row;
        if (a.src == J.levels[d].tgt[i])  // b.a
          for (const auto& [w, c] : J.ext_of(d, i, a.id))
            vec_axpy(row, c, SparseVec{{static_cast<uint32_t>(J.flat(d + 1, w)), Cyc3::one()}});
        if (a.tgt == J.levels[d].src[i]) {  // a.b
          Path p = J.levels[d].basis[i];
          p.arrows.insert(p.arrows.begin(), a.id);
          p.source = a.src;
          auto [deg, v] = J.nf_path(p);
          for (const auto& [w, c] : v)
            vec_axpy(row, -c, SparseVec{{static_cast<uint32_t>(J.flat(deg, w)), Cyc3::one()}});
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  return rows;
}

}  // namespace detail

struct SymmetryResult {
  Symmetry verdict = Symmetry::Inconclusive;
  int attempts_used = 0;
  SparseVec form;  // witness central form over flat indices, when symmetric
};

// Searches for a central linear form whose trace pairing is nondegenerate.
// The search is exact and seeded, so verdicts are reproducible; a failed
// search never claims symmetry.
inline SymmetryResult is_symmetric(const JacobianAlgebra& J, int attempts = 24,
                                   uint64_t seed = 0x5eed5eedULL) {
  SymmetryResult res;
  if (attempts <= 0) return res;

  std::vector<uint32_t> perm;
  try {
    perm = nakayama_permutation(J);
  } catch (const NotSelfinjectiveBasic&) {
    res.verdict = Symmetry::NotSelfinjective;
    return res;
  }
  for (uint32_t x = 0; x < perm.size(); ++x)
    if (perm[x] != x) {
      res.verdict = Symmetry::NotWeaklySymmetric;
      return res;
    }

  const uint32_t n = static_cast<uint32_t>(J.total_dimension);
  std::vector<SparseVec> forms = kernel_basis(detail::commutator_rows(J), n);
  if (forms.empty()) {
    res.verdict = Symmetry::WeaklySymmetricOnly;
    return res;
  }

  // basis elements grouped by (source, target)
  std::map<std::pair<uint32_t, uint32_t>, std::vector<std::pair<int, uint32_t>>> by_pair;
  for (int d = 0; d <= J.top_degree; ++d)
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i)
      by_pair[{J.levels[d].src[i], J.levels[d].tgt[i]}].emplace_back(d, i);
  for (const auto& [pair, elems] : by_pair) {
    auto it = by_pair.find({pair.second, pair.first});
    if (it == by_pair.end() || it->second.size() != elems.size()) {
      // e_x J e_y and e_y J e_x cannot pair nondegenerately
      res.verdict = Symmetry::WeaklySymmetricOnly;
      return res;
    }
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    const long range = 4 + 2 * attempt;
    std::uniform_int_distribution<long> coef(-range, range);
    std::vector<Cyc3> f(n);
    for (const SparseVec& base : forms) {
      Cyc3 wgt(rat(coef(rng)), rat(coef(rng)));
      for (const auto& [idx, c] : base) f[idx] += wgt * c;
    }
    bool ok = true;
    for (const auto& [pair, left] : by_pair) {
      if (pair.first > pair.second) continue;  // transposed block, same rank
      const auto& right = by_pair.at({pair.second, pair.first});
      RowReducer red;
      for (const auto& [d1, i1] : left) {
        SparseVec row;
        for (uint32_t j = 0; j < right.size(); ++j) {
          const auto& [d2, i2] = right[j];
          SparseVec prod = J.basis_product(d1, i1, d2, i2);
          Cyc3 val;
          for (const auto& [idx, c] : prod) val += c * f[J.flat(d1 + d2, idx)];
          if (!val.is_zero()) row.emplace_back(j, val);
        }
        red.insert(std::move(row));
      }
      if (red.rank() != left.size()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.verdict = Symmetry::Symmetric;
      res.attempts_used = attempt;
      for (uint32_t i = 0; i < n; ++i)
        if (!f[i].is_zero()) res.form.emplace_back(i, f[i]);
      return res;
    }
  }
  res.verdict = Symmetry::WeaklySymmetricOnly;
  res.attempts_used = attempts;
  return res;
}

struct GradedDims {
  std::map<int, size_t> by_degree;
  std::map<int, std::map<std::pair<uint32_t, uint32_t>, size_t>> by_degree_pair;
};

inline int path_g_degree(const JacobianAlgebra& J, int degree, uint32_t idx,
                         const std::vector<uint32_t>& g) {
  int total = 0;
  for (uint32_t a : J.levels[degree].basis[idx].arrows) total += static_cast<int>(g[a]);
  return total;
}

// Dimensions of the basis partitioned by total g-degree. Well defined only
// when every relation is g-homogeneous.
inline GradedDims graded_dimensions(const JacobianAlgebra& J, const std::vector<uint32_t>& g) {
  if (g.size() != J.quiver.arrows.size())
    throw InvalidParameter("grading must assign a value to every arrow");
  for (const Relation& r : J.relations.relations) {
    int deg = -1;
    for (const auto& [pair, c] : r.terms) {
      int d = static_cast<int>(g[pair[0]] + g[pair[1]]);
      if (deg < 0) deg = d;
      if (d != deg)
        throw NotHomogeneous("relation at arrow " + J.quiver.arrow_identity(r.arrow) +
                             " mixes g-degrees");
    }
  }
  GradedDims out;
  for (int d = 0; d <= J.top_degree; ++d)
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i) {
      int gd = path_g_degree(J, d, i, g);
      ++out.by_degree[gd];
      ++out.by_degree_pair[gd][{J.levels[d].src[i], J.levels[d].tgt[i]}];
    }
  return out;
}

}  // namespace qpforge

// Truncated Jacobian algebras (the cut-degree-0 part), their projective
// structure and global dimension through explicit minimal resolutions, and
// the levelled translation quiver recipes.
//
// The parent algebra is graded both by path length and by any cut, so the
// degree-0 part is spanned by the parent basis paths avoiding the cut, with
// multiplication inherited on the nose.
#pragma once

#include "qpforge/cuts.hpp"
#include "qpforge/jacobian.hpp"
#include "qpforge/linalg.hpp"

namespace qpforge {

struct TruncatedAlgebra {
  const JacobianAlgebra* parent = nullptr;
  Cut cut;
  std::vector<uint32_t> grading;  // 1 on cut arrows

  struct Elem {
    int degree = 0;  // path length in the parent
    uint32_t idx = 0;
    uint32_t src = 0, tgt = 0;
  };
  std::vector<Elem> basis;
  std::map<std::pair<int, uint32_t>, uint32_t> index_of;  // parent (degree, idx) -> index

  size_t dimension() const { return basis.size(); }

  const Quiver& quiver() const { return parent->quiver; }

  std::vector<size_t> vertex_dims() const {
    std::vector<size_t> out(quiver().vertices.size(), 0);
    for (const Elem& e : basis) ++out[e.src];
    return out;
  }

  bool arrow_in_quiver(uint32_t id) const { return !cut.contains(id); }

  // u . a in truncated coordinates; the product of cut-degree-0 elements by
  // a non-cut arrow stays in cut-degree 0, and truncated indices are
  // monotone in the parent indices, so the result is sorted
  SparseVec arrow_action(uint32_t elem, uint32_t arrow) const {
    const Elem& e = basis[elem];
    SparseVec out;
    for (const auto& [w, c] : parent->ext_of(e.degree, e.idx, arrow)) {
      auto it = index_of.find({e.degree + 1, w});
      if (it == index_of.end()) throw Error("truncated product left the degree-0 part");
      out.emplace_back(it->second, c);
    }
    return out;
  }
};

inline TruncatedAlgebra truncate(const JacobianAlgebra& J, const Cut& c) {
  if (!is_cut(J.quiver, J.potential, c)) throw NotACut("subset is not a cut");
  TruncatedAlgebra L;
  L.parent = &J;
  L.cut = c;
  L.grading = c.grading(J.quiver);
  for (int d = 0; d <= J.top_degree; ++d)
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i) {
      if (path_g_degree(J, d, i, L.grading) != 0) continue;
      L.index_of.emplace(std::make_pair(d, i), static_cast<uint32_t>(L.basis.size()));
      L.basis.push_back({d, i, J.levels[d].src[i], J.levels[d].tgt[i]});
    }
  return L;
}

// Layer n of the radical series of e_x L: basis paths from x of length
// exactly n, counted by target. The arrow ideal is the radical, and the
// algebra is path-length graded, so the layers read off the basis.
inline std::vector<std::map<uint32_t, size_t>> radical_series(const TruncatedAlgebra& L,
                                                              uint32_t x) {
  if (x >= L.quiver().vertices.size()) throw UnknownVertex("vertex index out of range");
  std::vector<std::map<uint32_t, size_t>> layers;
  for (const auto& e : L.basis) {
    if (e.src != x) continue;
    if (layers.size() <= static_cast<size_t>(e.degree))
      layers.resize(static_cast<size_t>(e.degree) + 1);
    ++layers[e.degree][e.tgt];
  }
  return layers;
}

// Dimension vectors of the cut-degree-i pieces of e_x J, by target vertex;
// the list runs from i = 0 to the socle degree.
inline std::vector<std::map<uint32_t, size_t>> tau2_minus_dims(const JacobianAlgebra& J,
                                                               const Cut& c, uint32_t x) {
  if (!is_cut(J.quiver, J.potential, c)) throw NotACut("subset is not a cut");
  if (x >= J.quiver.vertices.size()) throw UnknownVertex("vertex index out of range");
  std::vector<uint32_t> g = c.grading(J.quiver);
  std::vector<std::map<uint32_t, size_t>> out;
  for (int d = 0; d <= J.top_degree; ++d)
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i) {
      if (J.levels[d].src[i] != x) continue;
      size_t gd = static_cast<size_t>(path_g_degree(J, d, i, g));
      if (out.size() <= gd) out.resize(gd + 1);
      ++out[gd][J.levels[d].tgt[i]];
    }
  return out;
}

// Right module over a truncated algebra: one component per vertex and one
// action matrix per surviving arrow.
struct ModuleRep {
  const TruncatedAlgebra* alg = nullptr;
  std::vector<size_t> dims;                // per vertex
  std::map<uint32_t, DenseMat> action;     // arrow id -> dims[tgt] x dims[src]

  size_t total() const {
    size_t n = 0;
    for (size_t d : dims) n += d;
    return n;
  }
  bool is_zero() const { return total() == 0; }
};

namespace detail {

// Relations of the truncated algebra: derivatives with respect to the cut
// arrows survive verbatim (their terms contain no cut arrow).
inline std::vector<const Relation*> truncated_relations(const TruncatedAlgebra& L) {
  std::vector<const Relation*> out;
  for (const Relation& r : L.parent->relations.relations) {
    if (!L.cut.contains(r.arrow)) continue;
    for (const auto& [pair, c] : r.terms)
      if (L.cut.contains(pair[0]) || L.cut.contains(pair[1]))
        throw Error("cut relation contains a cut arrow");
    out.push_back(&r);
  }
  return out;
}

inline void check_relations(const ModuleRep& m) {
  const TruncatedAlgebra& L = *m.alg;
  for (const Relation* r : truncated_relations(L)) {
    DenseMat sum(m.dims[r->tgt], m.dims[r->src]);
    for (const auto& [pair, c] : r->terms) {
      const DenseMat& first = m.action.at(pair[0]);
      const DenseMat& second = m.action.at(pair[1]);
      DenseMat prod = DenseMat::product(second, first);
      for (size_t i = 0; i < prod.entries.size(); ++i) sum.entries[i] += c * prod.entries[i];
    }
    if (!sum.is_zero()) throw Error("module action violates a relation");
  }
}

}  // namespace detail

// e_y L as a module: components indexed by basis paths from y.
inline ModuleRep projective_module(const TruncatedAlgebra& L, uint32_t y) {
  ModuleRep m;
  m.alg = &L;
  m.dims.assign(L.quiver().vertices.size(), 0);
  // local index of each basis path from y within its target component
  std::vector<int> local(L.basis.size(), -1);
  for (uint32_t e = 0; e < L.basis.size(); ++e)
    if (L.basis[e].src == y) local[e] = static_cast<int>(m.dims[L.basis[e].tgt]++);
  for (const Arrow& a : L.quiver().arrows) {
    if (L.cut.contains(a.id)) continue;
    DenseMat mat(m.dims[a.tgt], m.dims[a.src]);
    for (uint32_t e = 0; e < L.basis.size(); ++e) {
      if (local[e] < 0 || L.basis[e].tgt != a.src) continue;
      for (const auto& [f, c] : L.arrow_action(e, a.id)) {
        if (local[f] < 0) throw Error("projective action left the module");
        mat.at(static_cast<size_t>(local[f]), static_cast<size_t>(local[e])) = c;
      }
    }
    m.action.emplace(a.id, std::move(mat));
  }
  detail::check_relations(m);
  return m;
}

inline ModuleRep simple_module(const TruncatedAlgebra& L, uint32_t x) {
  ModuleRep m;
  m.alg = &L;
  m.dims.assign(L.quiver().vertices.size(), 0);
  m.dims[x] = 1;
  for (const Arrow& a : L.quiver().arrows) {
    if (L.cut.contains(a.id)) continue;
    m.action.emplace(a.id, DenseMat(m.dims[a.tgt], m.dims[a.src]));
  }
  return m;
}

namespace detail {

// Projective cover data: generators (vertex, lift vector) spanning M/rad M.
struct Cover {
  std::vector<std::pair<uint32_t, std::vector<Cyc3>>> generators;
};

inline Cover top_of(const ModuleRep& m) {
  Cover cover;
  const size_t nv = m.dims.size();
  for (uint32_t z = 0; z < nv; ++z) {
    if (m.dims[z] == 0) continue;
    // rad M at z: the images of all arrow actions into z
    RowReducer red;
    for (const auto& [aid, mat] : m.action) {
      if (m.alg->quiver().arrows[aid].tgt != z) continue;
      for (size_t c = 0; c < mat.cols; ++c) {
        SparseVec col;
        for (size_t r = 0; r < mat.rows; ++r)
          if (!mat.at(r, c).is_zero()) col.emplace_back(static_cast<uint32_t>(r), mat.at(r, c));
        red.insert(std::move(col));
      }
    }
    for (size_t r = 0; r < m.dims[z]; ++r) {
      if (red.is_pivot(static_cast<uint32_t>(r))) continue;
      std::vector<Cyc3> lift(m.dims[z]);
      lift[r] = Cyc3::one();
      cover.generators.emplace_back(z, std::move(lift));
    }
  }
  return cover;
}

}  // namespace detail

// Length of the minimal projective resolution of M, via iterated projective
// covers and exact kernels. The cap guards a runaway resolution.
inline int projective_dimension(const TruncatedAlgebra& L, ModuleRep M, int cap) {
  for (int step = 0;; ++step) {
    if (step > cap) throw CapExceeded("resolution still running at step " + std::to_string(cap));
    if (M.is_zero()) return step - 1;  // previous cover was already exact

    detail::Cover cover = detail::top_of(M);

    // the cover P = direct sum of e_z L over generators; basis of P at a
    // vertex w: (generator g, truncated basis path z -> w)
    struct PB {
      uint32_t gen;
      uint32_t elem;  // index into L.basis
    };
    std::vector<std::vector<PB>> pbasis(L.quiver().vertices.size());
    for (uint32_t g = 0; g < cover.generators.size(); ++g) {
      uint32_t z = cover.generators[g].first;
      for (uint32_t e = 0; e < L.basis.size(); ++e)
        if (L.basis[e].src == z) pbasis[L.basis[e].tgt].push_back({g, e});
    }

    // the cover map on each component: generator copy of path p maps to
    // lift . p
    std::vector<DenseMat> phi(L.quiver().vertices.size());
    std::vector<std::vector<std::vector<Cyc3>>> lift_images(cover.generators.size());
    for (uint32_t g = 0; g < cover.generators.size(); ++g) {
      // act with every basis path on the lift, by increasing path length
      uint32_t z = cover.generators[g].first;
      lift_images[g].assign(L.basis.size(), {});
      // identity path at z is the basis element (0, z)
      for (uint32_t e = 0; e < L.basis.size(); ++e) {
        const auto& el = L.basis[e];
        if (el.src != z) continue;
        if (el.degree == 0) {
          lift_images[g][e] = cover.generators[g].second;
          continue;
        }
        // el = prefix . last arrow; the parent basis path prefix of el is
        // the element whose parent index drops the last arrow
        Path p = L.parent->levels[el.degree].basis[el.idx];
        uint32_t last = p.arrows.back();
        Path prefix = p;
        prefix.arrows.pop_back();
        auto [pd, pv] = L.parent->nf_path(prefix);
        // prefix of a basis path is itself a basis path
        if (pv.size() != 1 || !(pv.front().second == Cyc3::one()))
          throw Error("basis path prefix is not a basis path");
        uint32_t pe = L.index_of.at({pd, pv.front().first});
        const std::vector<Cyc3>& before = lift_images[g][pe];
        if (before.empty() && M.dims[L.basis[pe].tgt] != 0)
          throw Error("cover images out of order");
        const DenseMat& A = M.action.at(last);
        lift_images[g][e] = A.apply(before);
      }
    }
    for (uint32_t w = 0; w < L.quiver().vertices.size(); ++w) {
      DenseMat mat(M.dims[w], pbasis[w].size());
      for (size_t col = 0; col < pbasis[w].size(); ++col) {
        const auto& [g, e] = pbasis[w][col];
        const std::vector<Cyc3>& img = lift_images[g][e];
        for (size_t r = 0; r < M.dims[w]; ++r) mat.at(r, col) = img[r];
      }
      phi[w] = std::move(mat);
    }

    // kernel of phi per component, canonical basis; the cover must surject
    std::vector<std::vector<SparseVec>> kernels(L.quiver().vertices.size());
    std::vector<std::vector<uint32_t>> free_cols(L.quiver().vertices.size());
    for (uint32_t w = 0; w < L.quiver().vertices.size(); ++w) {
      std::vector<SparseVec> eqs;
      RowReducer colrank;
      for (size_t r = 0; r < phi[w].rows; ++r) {
        SparseVec row;
        for (size_t c = 0; c < phi[w].cols; ++c)
          if (!phi[w].at(r, c).is_zero())
            row.emplace_back(static_cast<uint32_t>(c), phi[w].at(r, c));
        eqs.push_back(std::move(row));
      }
      for (size_t c = 0; c < phi[w].cols; ++c) {
        SparseVec col;
        for (size_t r = 0; r < phi[w].rows; ++r)
          if (!phi[w].at(r, c).is_zero())
            col.emplace_back(static_cast<uint32_t>(r), phi[w].at(r, c));
        colrank.insert(std::move(col));
      }
      if (colrank.rank() != M.dims[w]) throw Error("projective cover fails to surject");
      kernels[w] = kernel_basis(eqs, static_cast<uint32_t>(phi[w].cols), &free_cols[w]);
    }

    // the kernel as a module: the action of arrow a sends K_w into K_v;
    // kernel vectors have a unit at their free column, so coordinates can
    // be read off directly
    ModuleRep K;
    K.alg = &L;
    K.dims.assign(L.quiver().vertices.size(), 0);
    for (uint32_t w = 0; w < kernels.size(); ++w) K.dims[w] = kernels[w].size();

    // P's arrow action on its basis: (g, e) . a = (g, e') summed
    for (const Arrow& a : L.quiver().arrows) {
      if (L.cut.contains(a.id)) continue;
      uint32_t w = a.src, v = a.tgt;
      // index map for pbasis
      std::map<std::pair<uint32_t, uint32_t>, size_t> pv_index;
      for (size_t i = 0; i < pbasis[v].size(); ++i)
        pv_index.emplace(std::make_pair(pbasis[v][i].gen, pbasis[v][i].elem), i);
      // kernel coordinates can be read off at the free columns
      std::map<uint32_t, size_t> free_at_v;
      for (size_t kv = 0; kv < free_cols[v].size(); ++kv) free_at_v.emplace(free_cols[v][kv], kv);
      DenseMat mat(K.dims[v], K.dims[w]);
      for (size_t kw = 0; kw < kernels[w].size(); ++kw) {
        // image of the kernel vector under the arrow action in P
        SparseVec img;  // over pbasis[v]
        for (const auto& [col, c] : kernels[w][kw]) {
          const auto& [g, e] = pbasis[w][col];
          if (L.basis[e].tgt != w) throw Error("cover basis indexing broken");
          for (const auto& [f, cc] : L.arrow_action(e, a.id)) {
            auto it = pv_index.find({g, f});
            if (it == pv_index.end()) throw Error("cover action left the cover");
            vec_axpy(img, c * cc, {{static_cast<uint32_t>(it->second), Cyc3::one()}});
          }
        }
        // express img in the kernel basis via the free columns
        std::vector<Cyc3> coords(kernels[v].size());
        for (const auto& [col, c] : img) {
          auto it = free_at_v.find(col);
          if (it != free_at_v.end()) coords[it->second] = c;
        }
        // verify the expansion reproduces img exactly
        SparseVec recon;
        for (size_t kv = 0; kv < kernels[v].size(); ++kv)
          if (!coords[kv].is_zero()) vec_axpy(recon, coords[kv], kernels[v][kv]);
        if (recon != img) throw Error("kernel is not closed under the action");
        for (size_t kv = 0; kv < kernels[v].size(); ++kv) mat.at(kv, kw) = coords[kv];
      }
      K.action.emplace(a.id, std::move(mat));
    }
    detail::check_relations(K);
    M = std::move(K);
  }
}

// max over simples of the minimal projective resolution length
inline int global_dimension(const TruncatedAlgebra& L, int cap = 10) {
  if (cap < 1) throw InvalidParameter("resolution cap must be at least 1");
  int gd = 0;
  for (uint32_t x = 0; x < L.quiver().vertices.size(); ++x) {
    ModuleRep s = simple_module(L, x);
    int pd = projective_dimension(L, std::move(s), cap);
    gd = std::max(gd, pd);
  }
  return gd;
}

// Levelled translation quiver: (x, i) -> (y, i) for arrows y -> x outside
// the cut, (x, i) -> (y, i+1) for arrows y -> x inside it.
struct ARQuiver {
  struct V {
    uint32_t x;
    int level;
  };
  std::vector<V> vertices;
  std::vector<std::pair<size_t, size_t>> arrows;
  int lo = 0, hi = 0;

  size_t index_of(uint32_t x, int level, size_t nverts) const {
    return static_cast<size_t>(level - lo) * nverts + x;
  }
};

inline ARQuiver ar_quiver(const Quiver& q, const Potential& w, const Cut& c, int lo, int hi) {
  if (!is_cut(q, w, c)) throw NotACut("subset is not a cut");
  if (hi < lo) throw InvalidParameter("empty level range");
  ARQuiver out;
  out.lo = lo;
  out.hi = hi;
  const size_t nv = q.vertices.size();
  for (int i = lo; i <= hi; ++i)
    for (uint32_t x = 0; x < nv; ++x) out.vertices.push_back({x, i});
  for (int i = lo; i <= hi; ++i)
    for (const Arrow& a : q.arrows) {
      if (c.contains(a.id)) continue;
      out.arrows.emplace_back(out.index_of(a.tgt, i, nv), out.index_of(a.src, i, nv));
    }
  for (int i = lo; i < hi; ++i)
    for (const Arrow& a : q.arrows) {
      if (!c.contains(a.id)) continue;
      out.arrows.emplace_back(out.index_of(a.tgt, i, nv), out.index_of(a.src, i + 1, nv));
    }
  return out;
}

// The window 0..t that realizes the module-category recipe for s = 3t+1.
inline ARQuiver ar_quiver_module(const Quiver& q, const Potential& w, const Cut& c) {
  if (q.s % 3 != 1) throw InvalidParameter("module window needs s = 3t+1");
  return ar_quiver(q, w, c, 0, (q.s - 1) / 3);
}

struct SerreOrbit {
  uint32_t x = 0;
  std::vector<std::pair<uint32_t, int>> chain;  // (x, 0) ... (x, t)
  int shift = 0;                                // 2t
};

// One orbit per vertex, of length t+1, with the shift annotation; requires
// the homogeneity report to succeed with constant degree t.
inline std::vector<SerreOrbit> serre_orbit_report(const JacobianAlgebra& J, const Cut& c) {
  HomogeneityReport rep = homogeneity_report(J, c);
  const int t = (J.quiver.s - 1) / 3;
  if (rep.N != t)
    throw NotHomogeneous("socle degree " + std::to_string(rep.N) + " differs from t = " +
                         std::to_string(t));
  std::vector<SerreOrbit> orbits;
  for (uint32_t x = 0; x < J.quiver.vertices.size(); ++x) {
    SerreOrbit o;
    o.x = x;
    for (int i = 0; i <= t; ++i) o.chain.emplace_back(x, i);
    o.shift = 2 * t;
    orbits.push_back(std::move(o));
  }
  return orbits;
}

}  // namespace qpforge

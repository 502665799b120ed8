// Constructors for the two quiver-with-potential families.
//
// Type A: vertices are all natural triples summing to s-1, arrows x -> x+f_i.
// The potential is the signed sum of all 3-cycles (anticlockwise triangles
// with +1, clockwise with -1).
//
// Type D: vertices are the strict-lex orbit representatives of the rotation
// action on triples, plus three copies X_0, X_1, X_2 of the central triple
// when s = 3t+1. Arrows a[i,j]: x -> rot^j(x)+f_i between representatives,
// plus b[k]: X-f_0 -> X_k and g[k]: X_k -> X+f_2 in the 3t+1 case.
#pragma once

#include <optional>

#include "qpforge/quiver.hpp"

namespace qpforge {

namespace detail {

// Triples in N^3 with coordinate sum s-1, descending lexicographic order.
inline std::vector<std::array<int, 3>> lattice_triples(int s) {
  std::vector<std::array<int, 3>> out;
  const int n = s - 1;
  for (int x0 = n; x0 >= 0; --x0)
    for (int x1 = n - x0; x1 >= 0; --x1) out.push_back({x0, x1, n - x0 - x1});
  return out;
}

// Strict-lex winner of the rotation orbit: x > rot(x) and x > rot^2(x).
inline bool is_orbit_rep(const std::array<int, 3>& x) {
  return x > rot_left(x) && x > rot_left(rot_left(x));
}

inline bool is_central(const std::array<int, 3>& x) { return x[0] == x[1] && x[1] == x[2]; }

}  // namespace detail

inline Quiver build_A(int s) {
  if (s < 2) throw InvalidParameter("family A needs s >= 2");
  Quiver q;
  q.s = s;
  q.family = Family::A;
  for (const auto& t : detail::lattice_triples(s)) q.add_vertex(Vertex{t, -1});
  for (uint32_t v = 0; v < q.vertices.size(); ++v)
    for (int i = 0; i < 3; ++i) {
      auto y = add3(q.vertices[v].x, f_step(i));
      if (y[0] < 0 || y[1] < 0 || y[2] < 0) continue;
      q.add_arrow(v, q.vertex_index(Vertex{y, -1}), ArrowLabel::alpha(i, 0));
    }
  return q;
}

// +1 on index order (0,1,2) up to rotation, -1 on (0,2,1).
inline int triple_orientation(std::array<int, 3> t) {
  for (auto& v : t) v = ((v % 3) + 3) % 3;
  if (t == std::array<int, 3>{0, 1, 2} || t == std::array<int, 3>{1, 2, 0} ||
      t == std::array<int, 3>{2, 0, 1})
    return 1;
  if (t == std::array<int, 3>{0, 2, 1} || t == std::array<int, 3>{2, 1, 0} ||
      t == std::array<int, 3>{1, 0, 2})
    return -1;
  return 0;
}

namespace detail {

// All 3-cycles of q, one canonical representative per rotation class.
inline std::vector<CycleKey> three_cycles(const Quiver& q) {
  std::map<CycleKey, bool> seen;
  std::vector<CycleKey> out;
  for (const Arrow& a : q.arrows)
    for (uint32_t bid : q.out(a.tgt)) {
      const Arrow& b = q.arrows[bid];
      for (uint32_t cid : q.out(b.tgt)) {
        const Arrow& c = q.arrows[cid];
        if (c.tgt != a.src) continue;
        CycleKey key = canonical_cycle({a.id, bid, cid});
        if (seen.emplace(key, true).second) out.push_back(key);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline Potential potential_A(const Quiver& q) {
  if (q.family != Family::A) throw WrongFamily("potential_A needs a type A quiver");
  Potential w;
  for (const CycleKey& c : detail::three_cycles(q)) {
    std::array<int, 3> idx{q.arrows[c[0]].label.i, q.arrows[c[1]].label.i, q.arrows[c[2]].label.i};
    int sign = triple_orientation(idx);
    // every 3-cycle of A^s uses three distinct step directions
    if (sign == 0) throw Error("unexpected degenerate 3-cycle in type A");
    w.add(c, Cyc3(rat(sign)));
  }
  return w;
}

inline Potential potential_A(int s) {
  Quiver q = build_A(s);
  return potential_A(q);
}

inline Quiver build_D(int s) {
  if (s < 2) throw InvalidParameter("family D needs s >= 2");
  Quiver q;
  q.s = s;
  q.family = Family::D;
  const bool has_center = (s % 3) == 1;
  const int t = (s - 1) / 3;
  for (const auto& triple : detail::lattice_triples(s))
    if (detail::is_orbit_rep(triple)) q.add_vertex(Vertex{triple, -1});
  const uint32_t n_reps = static_cast<uint32_t>(q.vertices.size());
  if (has_center) {
    const std::array<int, 3> X{t, t, t};
    for (int k = 0; k < 3; ++k) q.add_vertex(Vertex{X, k});
  }
  for (uint32_t v = 0; v < n_reps; ++v)
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        auto y = add3(rot_pow(q.vertices[v].x, j), f_step(i));
        if (y[0] < 0 || y[1] < 0 || y[2] < 0) continue;
        if (!detail::is_orbit_rep(y)) continue;
        q.add_arrow(v, q.vertex_index(Vertex{y, -1}), ArrowLabel::alpha(i, j));
      }
  if (has_center) {
    const std::array<int, 3> X{t, t, t};
    const auto src_b = q.vertex_index(Vertex{add3(X, {1, -1, 0}), -1});   // X - f_0
    const auto tgt_g = q.vertex_index(Vertex{add3(X, f_step(2)), -1});    // X + f_2
    for (int k = 0; k < 3; ++k) q.add_arrow(src_b, q.vertex_index(Vertex{X, k}), ArrowLabel::beta(k));
    for (int k = 0; k < 3; ++k) q.add_arrow(q.vertex_index(Vertex{X, k}), tgt_g, ArrowLabel::gamma(k));
  }
  return q;
}

// Coefficient rule for a 3-cycle of D^s, evaluated on one fixed rotation.
inline Cyc3 lambda_D(const Quiver& q, const CycleKey& c) {
  const Arrow& a0 = q.arrows[c[0]];
  const Arrow& a1 = q.arrows[c[1]];
  const Arrow& a2 = q.arrows[c[2]];
  const bool all_alpha = a0.label.kind == LabelKind::Alpha && a1.label.kind == LabelKind::Alpha &&
                         a2.label.kind == LabelKind::Alpha;
  if (all_alpha) {
    if (c[0] == c[1] && c[1] == c[2]) {
      // loop cube
      int i = a0.label.i, j = a0.label.j;
      int sign = triple_orientation({i + j, i - j, i});
      return Cyc3(rat(sign, 3));
    }
    if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) return Cyc3::zero();
    if ((a0.label.j + a1.label.j + a2.label.j) % 3 != 0) return Cyc3::zero();
    int sign = triple_orientation({a0.label.i + a0.label.j, a1.label.i - a2.label.j, a2.label.i});
    return Cyc3(rat(sign));
  }
  // Cycles through a copy vertex: one beta, one gamma and one of the two
  // parallel arrows X+f_2 -> X-f_0.
  const Arrow* alpha = nullptr;
  const Arrow* beta = nullptr;
  const Arrow* gamma = nullptr;
  for (uint32_t id : c) {
    const Arrow& a = q.arrows[id];
    switch (a.label.kind) {
      case LabelKind::Alpha: alpha = &a; break;
      case LabelKind::Beta: beta = &a; break;
      case LabelKind::Gamma: gamma = &a; break;
    }
  }
  if (!alpha || !beta || !gamma || beta->label.k != gamma->label.k)
    throw Error("unexpected mixed 3-cycle in type D");
  const int k = beta->label.k;
  if (alpha->label.i == 1 && alpha->label.j == 0) return Cyc3(rat(-1));
  if (alpha->label.i == 2 && alpha->label.j == 1) return zeta_pow(k);
  throw Error("unexpected alpha arrow in a beta/gamma 3-cycle");
}

inline Potential potential_D(int s) {
  Quiver q = build_D(s);
  Potential w;
  for (const CycleKey& c : detail::three_cycles(q)) w.add(c, lambda_D(q, c));
  return w;
}

inline Potential potential_D(const Quiver& q) {
  if (q.family != Family::D) throw WrongFamily("potential_D needs a type D quiver");
  Potential w;
  for (const CycleKey& c : detail::three_cycles(q)) w.add(c, lambda_D(q, c));
  return w;
}

// The order-3 automorphism of A^s: coordinate rotation on vertices,
// e_x a[i] -> e_{rot(x)} a[i-1] on arrows.
struct OmegaMap {
  std::vector<uint32_t> vertex_map;
  std::vector<uint32_t> arrow_map;
};

inline OmegaMap omega_map(const Quiver& q) {
  if (q.family != Family::A) throw WrongFamily("omega_map is defined on type A quivers");
  OmegaMap om;
  om.vertex_map.resize(q.vertices.size());
  om.arrow_map.resize(q.arrows.size());
  for (uint32_t v = 0; v < q.vertices.size(); ++v)
    om.vertex_map[v] = q.vertex_index(Vertex{rot_left(q.vertices[v].x), -1});
  for (const Arrow& a : q.arrows) {
    int id = q.find_arrow(om.vertex_map[a.src], ArrowLabel::alpha(a.label.i - 1, 0));
    if (id < 0) throw Error("omega image arrow missing");
    om.arrow_map[a.id] = static_cast<uint32_t>(id);
  }
  return om;
}

inline CycleKey omega_cycle(const OmegaMap& om, const CycleKey& c) {
  CycleKey img;
  img.reserve(c.size());
  for (uint32_t id : c) img.push_back(om.arrow_map[id]);
  return canonical_cycle(img);
}

// Rescale e_x a[i] by (-1)^(s - x_{i+1}) and check the type A potential
// becomes the plain sum of all 3-cycles (every coefficient +1).
inline bool sign_twist_check(int s) {
  Quiver q = build_A(s);
  Potential w = potential_A(q);
  for (const auto& [cycle, coeff] : w.terms) {
    Rational par(1);
    for (uint32_t id : cycle) {
      const Arrow& a = q.arrows[id];
      int e = s - q.vertices[a.src].x[(a.label.i + 1) % 3];
      if (((e % 2) + 2) % 2 == 1) par = -par;
    }
    if (Cyc3(par, Rational(0)) * coeff != Cyc3::one()) return false;
  }
  return true;
}

}  // namespace qpforge

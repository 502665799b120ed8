// Quotient construction: from the type A quiver with potential and its
// order-3 rotation, build the quotient quiver on orbit representatives
// together with the induced potential, and compare the result with the
// type D family.
//
// Orbit data: vertex representatives are the strict-lex winners (plus the
// central triple when s = 3t+1); each arrow orbit between free vertices has
// a unique member whose target is a representative, giving an arrow
// a[i,j]: x -> rot^j(x)+f_i. Free cycle orbits contribute one quotient
// cycle with weight |orbit|/3; the two orbits through the center contribute
// three cycles each, with the k-th copy weighted by a power of z.
#pragma once

#include <optional>
#include <set>

#include "qpforge/families.hpp"

namespace qpforge {

struct OrbitTable {
  int s = 0;
  std::vector<std::array<int, 3>> v1;          // free orbit representatives, descending lex
  std::optional<std::array<int, 3>> v2;        // the central triple, when present

  struct ArrowOrbit {
    std::vector<uint32_t> members;  // in rotation order from the designated arrow
    uint32_t designated = 0;        // the member used to name the quotient arrow
    int kase = 1;                   // 1: free, 2: into the center, 3: out of the center
  };
  std::vector<ArrowOrbit> arrow_orbits;

  struct CycleOrbit {
    CycleKey rep;        // canonical representative cycle in the source quiver
    int size = 1;        // 1 or 3
    bool through_center = false;
    Cyc3 lambda;         // source potential coefficient
    // base data for the quotient cycle (free orbits only)
    uint32_t base_vertex = 0;  // source-quiver vertex index, a representative
    std::array<int, 3> l{};    // arrow indices along the based rotation
    int j0 = 0, j2 = 0;        // rotation offsets of the two interior corners
  };
  std::vector<CycleOrbit> c1, c2;
};

namespace skew_detail {

inline bool is_rep(const std::array<int, 3>& x) {
  return x > rot_left(x) && x > rot_left(rot_left(x));
}

// the unique power of the rotation sending the triple to a representative;
// the central triple maps to itself
inline int rep_offset(const std::array<int, 3>& x) {
  if (x[0] == x[1] && x[1] == x[2]) return 0;
  for (int j = 0; j < 3; ++j)
    if (is_rep(rot_pow(x, j))) return j;
  throw Error("triple has no representative");
}

}  // namespace skew_detail

inline OrbitTable orbit_table(int s) {
  if (s < 2) throw InvalidParameter("orbit table needs s >= 2");
  Quiver qA = build_A(s);
  Potential wA = potential_A(qA);
  OmegaMap om = omega_map(qA);
  OrbitTable tab;
  tab.s = s;

  for (const Vertex& v : qA.vertices) {
    if (v.x[0] == v.x[1] && v.x[1] == v.x[2])
      tab.v2 = v.x;
    else if (skew_detail::is_rep(v.x))
      tab.v1.push_back(v.x);
  }

  std::vector<char> seen(qA.arrows.size(), 0);
  std::vector<OrbitTable::ArrowOrbit> into_center, out_of_center;
  for (uint32_t a = 0; a < qA.arrows.size(); ++a) {
    if (seen[a]) continue;
    OrbitTable::ArrowOrbit orb;
    uint32_t b = a;
    do {
      seen[b] = 1;
      orb.members.push_back(b);
      b = om.arrow_map[b];
    } while (b != a);

    const bool src_center = tab.v2 && qA.vertices[qA.arrows[a].src].x == *tab.v2;
    const bool tgt_center = tab.v2 && qA.vertices[qA.arrows[a].tgt].x == *tab.v2;
    if (tgt_center) {
      orb.kase = 2;  // designated member has its source at a representative
      for (uint32_t m : orb.members)
        if (skew_detail::is_rep(qA.vertices[qA.arrows[m].src].x)) orb.designated = m;
      into_center.push_back(std::move(orb));
    } else if (src_center) {
      orb.kase = 3;  // designated member has its target at a representative
      for (uint32_t m : orb.members)
        if (skew_detail::is_rep(qA.vertices[qA.arrows[m].tgt].x)) orb.designated = m;
      out_of_center.push_back(std::move(orb));
    } else {
      orb.kase = 1;  // unique member whose target is a representative
      int found = -1;
      for (uint32_t m : orb.members)
        if (skew_detail::is_rep(qA.vertices[qA.arrows[m].tgt].x)) {
          if (found >= 0) throw Error("arrow orbit with two designated members");
          found = static_cast<int>(m);
        }
      if (found < 0) throw Error("arrow orbit with no designated member");
      orb.designated = static_cast<uint32_t>(found);
      tab.arrow_orbits.push_back(std::move(orb));
    }
  }
  // orbit counting: free orbits have three members each
  for (const auto& orb : tab.arrow_orbits)
    if (orb.members.size() != 3) throw Error("free arrow orbit of unexpected size");
  tab.arrow_orbits.insert(tab.arrow_orbits.end(), into_center.begin(), into_center.end());
  tab.arrow_orbits.insert(tab.arrow_orbits.end(), out_of_center.begin(), out_of_center.end());

  // cycle orbits
  std::set<CycleKey> visited;
  for (const auto& [cyc, coeff] : wA.terms) {
    if (visited.count(cyc)) continue;
    OrbitTable::CycleOrbit orb;
    orb.rep = cyc;
    orb.lambda = coeff;
    CycleKey img = omega_cycle(om, cyc);
    if (img == cyc) {
      orb.size = 1;
      visited.insert(cyc);
    } else {
      orb.size = 3;
      visited.insert(cyc);
      visited.insert(img);
      visited.insert(omega_cycle(om, img));
    }
    bool center = false;
    if (tab.v2)
      for (uint32_t id : cyc)
        center = center || qA.vertices[qA.arrows[id].src].x == *tab.v2;
    orb.through_center = center;

    if (!center) {
      // based rotation starting at a representative; the smallest orbit
      // member in canonical order breaks ties
      bool based = false;
      for (CycleKey member = cyc; !based;) {
        CycleKey rot = member;
        for (int r = 0; r < 3 && !based; ++r) {
          uint32_t base = qA.arrows[rot[0]].src;
          if (skew_detail::is_rep(qA.vertices[base].x)) {
            orb.base_vertex = base;
            for (int p = 0; p < 3; ++p) orb.l[p] = qA.arrows[rot[p]].label.i;
            auto y_prime = qA.vertices[qA.arrows[rot[0]].tgt].x;
            auto z_prime = qA.vertices[qA.arrows[rot[1]].tgt].x;
            orb.j0 = skew_detail::rep_offset(y_prime);
            orb.j2 = (3 - skew_detail::rep_offset(z_prime)) % 3;
            based = true;
          }
          std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        }
        if (!based) {
          member = omega_cycle(om, member);
          if (member == cyc) throw Error("cycle orbit misses the representatives");
        }
      }
      tab.c1.push_back(std::move(orb));
    } else {
      tab.c2.push_back(std::move(orb));
    }
  }
  return tab;
}

// The quotient quiver with its potential, built from the orbit table.
inline std::pair<Quiver, Potential> build_tilde(int s) {
  Quiver qA = build_A(s);
  Potential wA = potential_A(qA);
  OrbitTable tab = orbit_table(s);
  const bool has_center = tab.v2.has_value();

  Quiver q;
  q.s = s;
  q.family = Family::D;
  for (const auto& x : tab.v1) q.add_vertex(Vertex{x, -1});
  if (has_center)
    for (int k = 0; k < 3; ++k) q.add_vertex(Vertex{*tab.v2, k});

  // arrows from the free orbits, ordered like the direct construction:
  // by source representative, then rotation offset, then index
  struct PendingArrow {
    uint32_t src, tgt;
    int i, j;
  };
  std::vector<PendingArrow> alphas;
  for (const auto& orb : tab.arrow_orbits) {
    if (orb.kase != 1) continue;
    const Arrow& des = qA.arrows[orb.designated];
    auto src_triple = qA.vertices[des.src].x;
    int j = skew_detail::rep_offset(src_triple);
    auto x = rot_pow(src_triple, j);  // representative of the source orbit
    // the designated arrow sits at rot^{-j}(x) = rot^{3-j}(x)
    int jj = (3 - j) % 3;
    alphas.push_back({q.vertex_index(Vertex{x, -1}),
                      q.vertex_index(Vertex{qA.vertices[des.tgt].x, -1}), des.label.i, jj});
  }
  std::sort(alphas.begin(), alphas.end(), [](const PendingArrow& a, const PendingArrow& b) {
    return std::tie(a.src, a.j, a.i) < std::tie(b.src, b.j, b.i);
  });
  for (const auto& pa : alphas) q.add_arrow(pa.src, pa.tgt, ArrowLabel::alpha(pa.i, pa.j));
  if (has_center) {
    const auto X = *tab.v2;
    uint32_t src_b = q.vertex_index(Vertex{add3(X, {1, -1, 0}), -1});
    uint32_t tgt_g = q.vertex_index(Vertex{add3(X, f_step(2)), -1});
    for (int k = 0; k < 3; ++k) q.add_arrow(src_b, q.vertex_index(Vertex{X, k}), ArrowLabel::beta(k));
    for (int k = 0; k < 3; ++k) q.add_arrow(q.vertex_index(Vertex{X, k}), tgt_g, ArrowLabel::gamma(k));
  }

  // potential
  Potential w;
  for (const auto& orb : tab.c1) {
    const auto base = qA.vertices[orb.base_vertex].x;
    const int i0 = orb.l[0] - orb.j0;
    const int i1 = orb.l[1] + orb.j2;
    const int i2 = orb.l[2];
    const int j1 = -(orb.j0 + orb.j2);
    auto y = rot_pow(add3(base, f_step(orb.l[0])), orb.j0);
    auto z_prime = add3(add3(base, f_step(orb.l[0])), f_step(orb.l[1]));
    auto z = rot_pow(z_prime, (3 - orb.j2) % 3);

    int a0 = q.find_arrow(q.vertex_index(Vertex{base, -1}), ArrowLabel::alpha(i0, orb.j0));
    int a1 = q.find_arrow(q.vertex_index(Vertex{y, -1}), ArrowLabel::alpha(i1, j1));
    int a2 = q.find_arrow(q.vertex_index(Vertex{z, -1}), ArrowLabel::alpha(i2, orb.j2));
    if (a0 < 0 || a1 < 0 || a2 < 0) throw Error("quotient cycle arrow missing");
    Rational weight = rat(orb.size, 3);
    CycleKey key = canonical_cycle(
        {static_cast<uint32_t>(a0), static_cast<uint32_t>(a1), static_cast<uint32_t>(a2)});
    if (w.terms.count(key)) throw Error("quotient cycles collide");
    w.add(key, orb.lambda * Cyc3(weight));
  }
  if (has_center) {
    if (tab.c2.size() != 2) throw Error("expected two cycle orbits through the center");
    const auto X = *tab.v2;
    uint32_t corner = q.vertex_index(Vertex{add3(X, f_step(2)), -1});  // X + f_2
    for (const auto& orb : tab.c2) {
      // clockwise orbit: adjustment power 0 on the plain arrow; anticlockwise:
      // adjustment power -1 on the shifted arrow
      const bool clockwise = orb.lambda == -Cyc3::one();
      int p = clockwise ? 0 : -1;
      ArrowLabel head = clockwise ? ArrowLabel::alpha(1, 0) : ArrowLabel::alpha(2, 1);
      int a = q.find_arrow(corner, head);
      if (a < 0) throw Error("corner arrow missing");
      for (int k = 0; k < 3; ++k) {
        int b = q.find_arrow(q.vertex_index(Vertex{add3(X, {1, -1, 0}), -1}), ArrowLabel::beta(k));
        int g = q.find_arrow(q.vertex_index(Vertex{X, k}), ArrowLabel::gamma(k));
        if (b < 0 || g < 0) throw Error("center arrows missing");
        CycleKey key = canonical_cycle(
            {static_cast<uint32_t>(a), static_cast<uint32_t>(b), static_cast<uint32_t>(g)});
        if (w.terms.count(key)) throw Error("quotient cycles collide");
        w.add(key, orb.lambda * zeta_pow(-p * k));
      }
    }
  }
  return {std::move(q), std::move(w)};
}

struct QpDiff {
  bool equal = true;
  std::string kind;      // vertex | arrow | coefficient
  std::string expected;  // item from the first argument
  std::string found;     // item from the second argument
};

// Structural equality of two quivers with potential: vertex labels, arrows
// as (source, label) pairs, and exact coefficients on canonical cycles.
inline QpDiff qp_equal(const Quiver& qa, const Potential& wa, const Quiver& qb,
                       const Potential& wb) {
  QpDiff diff;
  auto fail = [&](std::string kind, std::string expected, std::string found) {
    diff.equal = false;
    diff.kind = std::move(kind);
    diff.expected = std::move(expected);
    diff.found = std::move(found);
    return diff;
  };

  std::set<std::string> va, vb;
  for (const auto& v : qa.vertices) va.insert(v.name());
  for (const auto& v : qb.vertices) vb.insert(v.name());
  if (va != vb) {
    for (const auto& n : va)
      if (!vb.count(n)) return fail("vertex", n, "(absent)");
    for (const auto& n : vb)
      if (!va.count(n)) return fail("vertex", "(absent)", n);
  }

  std::set<std::string> aa, ab;
  for (const auto& a : qa.arrows) aa.insert(qa.arrow_identity(a.id));
  for (const auto& a : qb.arrows) ab.insert(qb.arrow_identity(a.id));
  if (aa != ab) {
    for (const auto& n : aa)
      if (!ab.count(n)) return fail("arrow", n, "(absent)");
    for (const auto& n : ab)
      if (!aa.count(n)) return fail("arrow", "(absent)", n);
  }

  // compare potentials through label-identity cycles
  auto labelled = [](const Quiver& q, const Potential& w) {
    std::map<std::vector<std::string>, Cyc3> out;
    for (const auto& [cyc, coeff] : w.terms) {
      std::vector<std::string> ids;
      for (uint32_t id : cyc) ids.push_back(q.arrow_identity(id));
      std::vector<std::string> best = ids;
      for (size_t r = 1; r < ids.size(); ++r) {
        std::rotate(ids.begin(), ids.begin() + 1, ids.end());
        if (ids < best) best = ids;
      }
      out.emplace(std::move(best), coeff);
    }
    return out;
  };
  auto ma = labelled(qa, wa);
  auto mb = labelled(qb, wb);
  auto cycle_str = [](const std::vector<std::string>& ids) {
    std::string s;
    for (const auto& i : ids) s += (s.empty() ? "" : ".") + i;
    return s;
  };
  for (const auto& [cyc, coeff] : ma) {
    auto it = mb.find(cyc);
    if (it == mb.end())
      return fail("coefficient", cycle_str(cyc) + " = " + cyc3_str(coeff), "(no such cycle)");
    if (!(it->second == coeff))
      return fail("coefficient", cycle_str(cyc) + " = " + cyc3_str(coeff),
                  cycle_str(cyc) + " = " + cyc3_str(it->second));
  }
  for (const auto& [cyc, coeff] : mb)
    if (!ma.count(cyc))
      return fail("coefficient", "(no such cycle)", cycle_str(cyc) + " = " + cyc3_str(coeff));
  return diff;
}

}  // namespace qpforge

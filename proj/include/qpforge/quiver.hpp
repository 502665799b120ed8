// Quivers, paths, cycles and potentials. Composition is left-to-right:
// in the product pq the path p is traversed first.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qpforge/scalar.hpp"

namespace qpforge {

// Either a lattice triple or one of the three copies X_0, X_1, X_2 of the
// central triple (copies exist only in type D with s = 3t+1).
struct Vertex {
  std::array<int, 3> x{0, 0, 0};
  int copy = -1;  // -1: lattice vertex, 0..2: fixed-vertex copy

  bool is_copy() const { return copy >= 0; }

  friend bool operator==(const Vertex& u, const Vertex& v) { return u.x == v.x && u.copy == v.copy; }
  friend bool operator<(const Vertex& u, const Vertex& v) {
    return std::tie(u.x, u.copy) < std::tie(v.x, v.copy);
  }

  std::string name() const {
    if (is_copy()) return "X" + std::to_string(copy);
    return std::to_string(x[0]) + "." + std::to_string(x[1]) + "." + std::to_string(x[2]);
  }
};

inline std::array<int, 3> rot_left(const std::array<int, 3>& v) { return {v[1], v[2], v[0]}; }

inline std::array<int, 3> rot_pow(std::array<int, 3> v, int j) {
  j = ((j % 3) + 3) % 3;
  while (j--) v = rot_left(v);
  return v;
}

// f_0 = (-1,1,0), f_1 = (0,-1,1), f_2 = (1,0,-1)
inline std::array<int, 3> f_step(int i) {
  switch (((i % 3) + 3) % 3) {
    case 0: return {-1, 1, 0};
    case 1: return {0, -1, 1};
    default: return {1, 0, -1};
  }
}

inline std::array<int, 3> add3(std::array<int, 3> a, const std::array<int, 3>& b) {
  for (int i = 0; i < 3; ++i) a[i] += b[i];
  return a;
}

enum class LabelKind : uint8_t { Alpha, Beta, Gamma };

struct ArrowLabel {
  LabelKind kind = LabelKind::Alpha;
  int8_t i = 0, j = 0;  // alpha indices; a[i,0] is written alpha_i
  int8_t k = 0;         // beta/gamma copy index

  static ArrowLabel alpha(int i, int j) {
    ArrowLabel l;
    l.kind = LabelKind::Alpha;
    l.i = static_cast<int8_t>(((i % 3) + 3) % 3);
    l.j = static_cast<int8_t>(((j % 3) + 3) % 3);
    return l;
  }
  static ArrowLabel beta(int k) {
    ArrowLabel l;
    l.kind = LabelKind::Beta;
    l.k = static_cast<int8_t>(k);
    return l;
  }
  static ArrowLabel gamma(int k) {
    ArrowLabel l;
    l.kind = LabelKind::Gamma;
    l.k = static_cast<int8_t>(k);
    return l;
  }

  friend bool operator==(const ArrowLabel& a, const ArrowLabel& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator<(const ArrowLabel& a, const ArrowLabel& b) {
    return std::tie(a.kind, a.i, a.j, a.k) < std::tie(b.kind, b.i, b.j, b.k);
  }

  // "a[i,j]" / "b[k]" / "g[k]"
  std::string text() const {
    switch (kind) {
      case LabelKind::Alpha:
        return "a[" + std::to_string(i) + "," + std::to_string(j) + "]";
      case LabelKind::Beta:
        return "b[" + std::to_string(k) + "]";
      default:
        return "g[" + std::to_string(k) + "]";
    }
  }

  // Drawing convention: alpha arrows are labelled by their indices alone.
  std::string display() const {
    switch (kind) {
      case LabelKind::Alpha:
        return j == 0 ? std::to_string(i) : std::to_string(i) + "," + std::to_string(j);
      case LabelKind::Beta:
        return "b" + std::to_string(k);
      default:
        return "g" + std::to_string(k);
    }
  }
};

enum class Family : uint8_t { A, D };

inline std::string family_name(Family f) { return f == Family::A ? "A" : "D"; }

struct Arrow {
  uint32_t id = 0;
  uint32_t src = 0, tgt = 0;
  ArrowLabel label;
};

struct Quiver {
  int s = 0;
  Family family = Family::A;
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;

  std::map<Vertex, uint32_t> vertex_index_;
  std::map<std::pair<uint32_t, ArrowLabel>, uint32_t> arrow_lookup_;
  std::vector<std::vector<uint32_t>> out_;  // outgoing arrow ids per vertex, ascending

  uint32_t add_vertex(const Vertex& v) {
    auto idx = static_cast<uint32_t>(vertices.size());
    vertices.push_back(v);
    vertex_index_.emplace(v, idx);
    out_.emplace_back();
    return idx;
  }

  uint32_t add_arrow(uint32_t src, uint32_t tgt, ArrowLabel label) {
    Arrow a;
    a.id = static_cast<uint32_t>(arrows.size());
    a.src = src;
    a.tgt = tgt;
    a.label = label;
    arrows.push_back(a);
    arrow_lookup_.emplace(std::make_pair(src, label), a.id);
    out_[src].push_back(a.id);
    return a.id;
  }

  bool has_vertex(const Vertex& v) const { return vertex_index_.count(v) != 0; }

  uint32_t vertex_index(const Vertex& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) throw UnknownVertex("no vertex " + v.name());
    return it->second;
  }

  // Arrows are determined by source and label.
  int find_arrow(uint32_t src, const ArrowLabel& label) const {
    auto it = arrow_lookup_.find(std::make_pair(src, label));
    return it == arrow_lookup_.end() ? -1 : static_cast<int>(it->second);
  }

  const std::vector<uint32_t>& out(uint32_t v) const { return out_[v]; }

  std::string arrow_identity(uint32_t id) const {
    const Arrow& a = arrows.at(id);
    if (a.label.kind == LabelKind::Alpha) return a.label.text() + "@" + vertices[a.src].name();
    return a.label.text();
  }
};

// A path is a source vertex plus a (possibly empty) chain of composable arrows.
struct Path {
  uint32_t source = 0;
  std::vector<uint32_t> arrows;

  size_t length() const { return arrows.size(); }
};

inline bool path_valid(const Quiver& q, const Path& p) {
  if (p.source >= q.vertices.size()) return false;
  uint32_t at = p.source;
  for (uint32_t id : p.arrows) {
    if (id >= q.arrows.size() || q.arrows[id].src != at) return false;
    at = q.arrows[id].tgt;
  }
  return true;
}

inline uint32_t path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.source : q.arrows[p.arrows.back()].tgt;
}

// Cycles are stored up to rotation: the representative is the
// lexicographically minimal rotation of the arrow-id sequence.
using CycleKey = std::vector<uint32_t>;

inline CycleKey canonical_cycle(CycleKey c) {
  if (c.empty()) return c;
  CycleKey best = c;
  for (size_t r = 1; r < c.size(); ++r) {
    std::rotate(c.begin(), c.begin() + 1, c.end());
    if (c < best) best = c;
  }
  return best;
}

// Finite linear combination of canonical cycles; zero coefficients are never
// stored. All in-scope potentials are cubic.
struct Potential {
  std::map<CycleKey, Cyc3> terms;

  void add(const CycleKey& cycle, const Cyc3& coeff) {
    if (coeff.is_zero()) return;
    CycleKey key = canonical_cycle(cycle);
    auto [it, fresh] = terms.emplace(key, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  size_t size() const { return terms.size(); }
};

// One cyclic derivative: a linear combination of length-2 paths, all sharing
// source (= target of the arrow) and target (= source of the arrow).
struct Relation {
  uint32_t arrow = 0;
  uint32_t src = 0, tgt = 0;
  std::vector<std::pair<std::array<uint32_t, 2>, Cyc3>> terms;
};

// Sums over every occurrence of `arrow` in every rotation of each stored
// cycle; a loop cube a^3 with coefficient 1/3 yields exactly a^2.
inline Relation cyclic_derivative(const Quiver& q, const Potential& w, uint32_t arrow) {
  if (arrow >= q.arrows.size()) throw UnknownArrow("arrow id out of range");
  std::map<std::array<uint32_t, 2>, Cyc3> acc;
  for (const auto& [cycle, coeff] : w.terms) {
    const size_t n = cycle.size();
    for (size_t p = 0; p < n; ++p) {
      if (cycle[p] != arrow) continue;
      std::array<uint32_t, 2> rest{cycle[(p + 1) % n], cycle[(p + 2) % n]};
      auto [it, fresh] = acc.emplace(rest, coeff);
      if (!fresh) it->second += coeff;
    }
  }
  Relation r;
  r.arrow = arrow;
  r.src = q.arrows[arrow].tgt;
  r.tgt = q.arrows[arrow].src;
  for (auto& [pair, c] : acc)
    if (!c.is_zero()) r.terms.push_back({pair, c});
  return r;
}

}  // namespace qpforge

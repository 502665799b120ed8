// Cuts of a quiver with potential: arrow subsets for which every cycle of
// the potential carries total degree exactly 1 under the grading that is 1
// on the subset and 0 elsewhere. Loop occurrences count with multiplicity,
// so a potential containing a loop cube admits no cut at all.
#pragma once

#include <optional>
#include <set>

#include "qpforge/families.hpp"
#include "qpforge/jacobian.hpp"

namespace qpforge {

struct Cut {
  std::vector<uint32_t> arrows;  // sorted

  bool contains(uint32_t id) const {
    return std::binary_search(arrows.begin(), arrows.end(), id);
  }

  std::vector<uint32_t> grading(const Quiver& q) const {
    std::vector<uint32_t> g(q.arrows.size(), 0);
    for (uint32_t id : arrows) g[id] = 1;
    return g;
  }

  friend bool operator==(const Cut& a, const Cut& b) { return a.arrows == b.arrows; }
  friend bool operator<(const Cut& a, const Cut& b) { return a.arrows < b.arrows; }
};

inline bool is_cut(const Quiver& q, const Potential& w, const std::vector<uint32_t>& arrows) {
  std::vector<char> in(q.arrows.size(), 0);
  for (uint32_t id : arrows) {
    if (id >= q.arrows.size()) throw UnknownArrow("cut arrow id out of range");
    in[id] = 1;
  }
  for (const auto& [cycle, coeff] : w.terms) {
    int deg = 0;
    for (uint32_t id : cycle) deg += in[id];
    if (deg != 1) return false;
  }
  return true;
}

inline bool is_cut(const Quiver& q, const Potential& w, const Cut& c) {
  return is_cut(q, w, c.arrows);
}

namespace detail {

// Exact-one-per-cycle backtracking. `group` maps each arrow to a decision
// class; all arrows in a class enter or leave together (classes are
// singletons for the plain enumeration, orbits for the invariant one).
class CutSearch {
 public:
  CutSearch(const Quiver& q, const Potential& w, std::vector<uint32_t> group)
      : q_(q), group_(std::move(group)) {
    for (const auto& [cycle, coeff] : w.terms) {
      Cycle c;
      std::map<uint32_t, int> mult;
      for (uint32_t id : cycle) ++mult[id];
      for (auto& [id, m] : mult) c.arrows.push_back({id, m});
      cycles_.push_back(std::move(c));
    }
    uint32_t ngroups = 0;
    for (uint32_t g : group_) ngroups = std::max(ngroups, g + 1);
    state_.assign(ngroups, Undecided);
    members_.resize(ngroups);
    for (uint32_t a = 0; a < group_.size(); ++a) members_[group_[a]].push_back(a);
    touched_.assign(q.arrows.size(), 0);
    for (const Cycle& c : cycles_)
      for (auto& [id, m] : c.arrows) touched_[id] = 1;
  }

  std::vector<Cut> run() {
    results_.clear();
    dfs();
    std::vector<Cut> out(results_.begin(), results_.end());
    return out;
  }

 private:
  enum State : int8_t { Undecided = -1, Out = 0, In = 1 };

  struct Cycle {
    std::vector<std::pair<uint32_t, int>> arrows;  // (arrow, multiplicity)
  };

  // weight already in / weight still undecided for one cycle
  std::pair<int, int> tally(const Cycle& c) const {
    int in = 0, open = 0;
    for (const auto& [id, m] : c.arrows) {
      State s = state_[group_[id]];
      if (s == In) in += m;
      if (s == Undecided) open += m;
    }
    return {in, open};
  }

  bool assign(uint32_t g, State s, std::vector<uint32_t>& log) {
    if (state_[g] == s) return true;
    if (state_[g] != Undecided) return false;
    state_[g] = s;
    log.push_back(g);
    return true;
  }

  // Force the consequences of current choices; false on contradiction.
  bool propagate(std::vector<uint32_t>& log) {
    for (bool change = true; change;) {
      change = false;
      for (const Cycle& c : cycles_) {
        auto [in, open] = tally(c);
        if (in > 1 || in + open < 1) return false;
        if (in == 1 && open > 0) {
          for (const auto& [id, m] : c.arrows)
            if (state_[group_[id]] == Undecided) {
              if (!assign(group_[id], Out, log)) return false;
              change = true;
            }
        } else if (in == 0 && open > 0) {
          // everything of multiplicity != 1 can never be the single arrow
          int viable = 0;
          for (const auto& [id, m] : c.arrows)
            if (state_[group_[id]] == Undecided) {
              if (cycle_weight(c, group_[id]) == 1)
                ++viable;
              else if (!assign(group_[id], Out, log))
                return false;
              else
                change = true;
            }
          if (viable == 0) {
            auto [in2, open2] = tally(c);
            if (in2 == 0 && open2 == 0) return false;
          }
        }
      }
    }
    return true;
  }

  // total multiplicity a decision class contributes to a cycle
  int cycle_weight(const Cycle& c, uint32_t g) const {
    int w = 0;
    for (const auto& [id, m] : c.arrows)
      if (group_[id] == g) w += m;
    return w;
  }

  const Cycle* pick_branch() const {
    const Cycle* best = nullptr;
    int best_open = INT32_MAX;
    for (const Cycle& c : cycles_) {
      auto [in, open] = tally(c);
      if (in == 1) continue;
      int undecided = 0;
      for (const auto& [id, m] : c.arrows)
        if (state_[group_[id]] == Undecided) ++undecided;
      if (undecided > 0 && undecided < best_open) {
        best_open = undecided;
        best = &c;
      }
    }
    return best;
  }

  void dfs() {
    std::vector<uint32_t> log;
    if (!propagate(log)) {
      rollback(log);
      return;
    }
    if (const Cycle* c = pick_branch()) {
      // some class must be the unique cover of this cycle; the branches are
      // disjoint and exhaust the solutions
      std::set<uint32_t> tried;
      for (const auto& [id, m] : c->arrows) {
        uint32_t g = group_[id];
        if (state_[g] != Undecided || tried.count(g)) continue;
        tried.insert(g);
        if (cycle_weight(*c, g) != 1) continue;
        std::vector<uint32_t> sub;
        if (assign(g, In, sub)) dfs();
        rollback(sub);
      }
    } else {
      emit();
    }
    rollback(log);
  }

  // All cycles satisfied; classes not touching any cycle remain free and
  // are enumerated both ways so the census matches a brute-force sweep.
  void emit() {
    std::vector<uint32_t> free_groups;
    for (uint32_t g = 0; g < state_.size(); ++g) {
      if (state_[g] != Undecided) continue;
      bool on_cycle = false;
      for (uint32_t a : members_[g]) on_cycle = on_cycle || touched_[a];
      if (on_cycle) return;  // unreachable: propagate resolves cycle arrows
      free_groups.push_back(g);
    }
    const size_t k = free_groups.size();
    for (uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      Cut cut;
      for (uint32_t g = 0; g < state_.size(); ++g)
        if (state_[g] == In)
          for (uint32_t a : members_[g]) cut.arrows.push_back(a);
      for (size_t i = 0; i < k; ++i)
        if (mask & (1ULL << i))
          for (uint32_t a : members_[free_groups[i]]) cut.arrows.push_back(a);
      std::sort(cut.arrows.begin(), cut.arrows.end());
      results_.insert(std::move(cut));
    }
  }

  void rollback(const std::vector<uint32_t>& log) {
    for (uint32_t g : log) state_[g] = Undecided;
  }

  const Quiver& q_;
  std::vector<uint32_t> group_;
  std::vector<Cycle> cycles_;
  std::vector<State> state_;
  std::vector<std::vector<uint32_t>> members_;
  std::vector<char> touched_;
  std::set<Cut> results_;
};

}  // namespace detail

// All cuts, in lexicographic order of their sorted arrow lists.
inline std::vector<Cut> enumerate_cuts(const Quiver& q, const Potential& w) {
  std::vector<uint32_t> groups(q.arrows.size());
  for (uint32_t a = 0; a < groups.size(); ++a) groups[a] = a;
  return detail::CutSearch(q, w, std::move(groups)).run();
}

// Cuts of (A^s, W_A^s) closed under the rotation automorphism: decisions are
// taken orbitwise.
inline std::vector<Cut> invariant_cuts_A(int s) {
  Quiver q = build_A(s);
  Potential w = potential_A(q);
  OmegaMap om = omega_map(q);
  std::vector<uint32_t> group(q.arrows.size(), UINT32_MAX);
  uint32_t next = 0;
  for (uint32_t a = 0; a < q.arrows.size(); ++a) {
    if (group[a] != UINT32_MAX) continue;
    uint32_t b = a;
    do {
      group[b] = next;
      b = om.arrow_map[b];
    } while (b != a);
    ++next;
  }
  return detail::CutSearch(q, w, std::move(group)).run();
}

inline bool has_enough_cuts(const Quiver& q, const Potential& w) {
  std::vector<char> covered(q.arrows.size(), 0);
  for (const Cut& c : enumerate_cuts(q, w))
    for (uint32_t id : c.arrows) covered[id] = 1;
  for (char f : covered)
    if (!f) return false;
  return true;
}

// Transfer an invariant cut of A^s to D^s: the alpha arrow e_x a[i,j] is cut
// exactly when the source arrow at rot^j(x) is; the beta (resp. gamma)
// arrows enter all together when the arrow into (resp. out of) the center
// does.
inline Cut induce_cut_D(const Quiver& qA, const Potential& wA, const OmegaMap& om,
                        const Quiver& qD, const Potential& wD, const Cut& cprime) {
  if (qD.s % 3 != 1) throw InvalidParameter("induced cuts need s = 3t+1");
  if (!is_cut(qA, wA, cprime)) throw NotACut("the source subset is not a cut");
  for (uint32_t id : cprime.arrows)
    if (!cprime.contains(om.arrow_map[id]))
      throw NotInvariant("the source cut is not rotation invariant");

  const int t = (qD.s - 1) / 3;
  const std::array<int, 3> X{t, t, t};
  std::vector<char> inA(qA.arrows.size(), 0);
  for (uint32_t id : cprime.arrows) inA[id] = 1;

  Cut out;
  for (const Arrow& a : qD.arrows) {
    switch (a.label.kind) {
      case LabelKind::Alpha: {
        auto src = rot_pow(qD.vertices[a.src].x, a.label.j);
        int id = qA.find_arrow(qA.vertex_index(Vertex{src, -1}), ArrowLabel::alpha(a.label.i, 0));
        if (id < 0) throw Error("missing preimage arrow");
        if (inA[id]) out.arrows.push_back(a.id);
        break;
      }
      case LabelKind::Beta: {
        int id = qA.find_arrow(qA.vertex_index(Vertex{add3(X, {1, -1, 0}), -1}),
                               ArrowLabel::alpha(0, 0));
        if (id >= 0 && inA[id]) out.arrows.push_back(a.id);
        break;
      }
      case LabelKind::Gamma: {
        int id = qA.find_arrow(qA.vertex_index(Vertex{X, -1}), ArrowLabel::alpha(2, 0));
        if (id >= 0 && inA[id]) out.arrows.push_back(a.id);
        break;
      }
    }
  }
  std::sort(out.arrows.begin(), out.arrows.end());
  if (!is_cut(qD, wD, out)) throw NotACut("induced subset fails the cut test");
  return out;
}

inline Cut induce_cut_D(int s, const Cut& cprime) {
  Quiver qA = build_A(s);
  Potential wA = potential_A(qA);
  Quiver qD = build_D(s);
  Potential wD = potential_D(qD);
  return induce_cut_D(qA, wA, omega_map(qA), qD, wD, cprime);
}

struct HomogeneityReport {
  int s = 0;
  Cut cut;
  std::map<uint32_t, int> socle_degree;  // by vertex index
  int N = 0;                             // the common socle degree
  int k = 1;                             // order of the Nakayama permutation
  std::pair<int, int> fcy{0, 0};         // (2N, k+N), kept as a pair, never reduced

  std::string fcy_str() const {
    return std::to_string(fcy.first) + "/" + std::to_string(fcy.second);
  }
};

// Cut-degree of every socle generator. All of them must agree; a
// disagreement is reported as an error, not a value.
inline HomogeneityReport homogeneity_report(const JacobianAlgebra& J, const Cut& c) {
  if (!is_cut(J.quiver, J.potential, c)) throw NotACut("subset is not a cut");
  HomogeneityReport rep;
  rep.s = J.quiver.s;
  rep.cut = c;
  std::vector<uint32_t> perm = nakayama_permutation(J);
  rep.k = 1;
  {
    // permutation order
    std::vector<uint32_t> p = perm;
    bool ident = true;
    for (uint32_t x = 0; x < p.size(); ++x) ident = ident && p[x] == x;
    while (!ident) {
      ++rep.k;
      for (uint32_t x = 0; x < p.size(); ++x) p[x] = perm[p[x]];
      ident = true;
      for (uint32_t x = 0; x < p.size(); ++x) ident = ident && p[x] == x;
    }
  }
  std::vector<uint32_t> g = c.grading(J.quiver);
  std::optional<int> common;
  for (uint32_t x = 0; x < J.quiver.vertices.size(); ++x) {
    auto soc = socle(J, x);
    if (soc.size() != 1) throw NotSelfinjectiveBasic("socle is not one dimensional");
    const auto& e = soc.front();
    std::optional<int> gd;
    for (const auto& [idx, coeff] : e.v) {
      int d = path_g_degree(J, e.degree, idx, g);
      if (gd && *gd != d)
        throw NotHomogeneous("socle generator at " + J.quiver.vertices[x].name() +
                             " mixes cut-degrees");
      gd = d;
    }
    rep.socle_degree[x] = *gd;
    if (common && *common != *gd)
      throw NotHomogeneous("socle degrees disagree between " + J.quiver.vertices[x].name() +
                           " (" + std::to_string(*gd) + ") and an earlier vertex (" +
                           std::to_string(*common) + ")");
    common = *gd;
  }
  rep.N = *common;
  rep.fcy = {2 * rep.N, rep.k + rep.N};
  return rep;
}

}  // namespace qpforge

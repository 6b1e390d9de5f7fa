#include "outerplanar.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "oracle.hpp"

namespace opk {

namespace {

using vkey = std::pair<int, int>;

// One object per vertex pair in the reduced multigraph. A real edge can
// absorb one face closure per side; a strand is an open compressed path; a
// lens is a sealed pair of strands bounding a recorded face.
struct slot_state {
  enum class kind { real, strand, lens };
  kind k = kind::real;
  int sides_used = 0;
  std::vector<int> exp;   // strand/lens: path from min endpoint to max endpoint
  std::vector<int> exp2;  // lens: second strand
  std::vector<int> closed_face_ids;
};

std::vector<int> oriented(const slot_state& s, int from, int to) {
  if (s.k == slot_state::kind::real) return {from, to};
  std::vector<int> p = s.exp;
  if (p.front() != from) std::reverse(p.begin(), p.end());
  if (p.front() != from || p.back() != to)
    throw std::logic_error("slot expansion does not match endpoints");
  return p;
}

std::vector<int> interior_of(const std::vector<int>& path) {
  if (path.size() < 2) throw std::logic_error("degenerate path");
  return {path.begin() + 1, path.end() - 1};
}

struct block_failure {
  bool stuck = false;
  // overflow data (three u-w connections with nonempty interiors)
  int pole_u = 0, pole_w = 0;
  std::vector<std::vector<int>> interiors;
  // stuck data: snapshot of the reduced multigraph
  std::map<int, std::set<int>> h_adj;
  std::map<vkey, std::vector<int>> h_interior;
};

struct block_success {
  std::vector<std::vector<int>> faces;
};

using block_result = std::variant<block_success, block_failure>;

// Degree-2 elimination of one 2-connected block with >= 3 vertices.
block_result eliminate_block(const graph& b) {
  std::map<int, std::set<int>> nbr;
  std::map<vkey, slot_state> slots;
  std::vector<std::vector<int>> faces;

  for (int v : b.vertices()) nbr[v] = b.neighbors(v);
  for (auto e : b.edges()) slots[e] = slot_state{};

  auto slot_at = [&](int a, int c) -> slot_state& { return slots.at(norm_edge(a, c)); };

  std::set<int> worklist;
  for (const auto& [v, ns] : nbr)
    if (ns.size() == 2) worklist.insert(v);

  // Expands a path in the reduced multigraph to original vertices.
  auto expand_multipath = [&](const std::vector<int>& mpath) {
    std::vector<int> out{mpath.front()};
    for (size_t i = 0; i + 1 < mpath.size(); ++i) {
      auto p = oriented(slot_at(mpath[i], mpath[i + 1]), mpath[i], mpath[i + 1]);
      out.insert(out.end(), p.begin() + 1, p.end());
    }
    return out;
  };

  // Third u-w connection through the rest of the multigraph, avoiding the
  // (u,w) slot itself. BFS, then expanded to original vertices.
  auto outside_connection = [&](int u, int w) -> std::optional<std::vector<int>> {
    std::map<int, int> pred;
    std::deque<int> q{u};
    pred[u] = u;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : nbr.at(x)) {
        if (x == u && y == w) continue;
        if (x == w) continue;
        if (pred.count(y)) continue;
        pred[y] = x;
        q.push_back(y);
        if (y == w) {
          std::vector<int> mpath{w};
          for (int z = w; z != u; z = pred[z]) mpath.push_back(pred[z]);
          std::reverse(mpath.begin(), mpath.end());
          return expand_multipath(mpath);
        }
      }
    }
    return std::nullopt;
  };

  while (nbr.size() > 2) {
    // pick the smallest live degree-2 vertex
    int v = -1;
    while (!worklist.empty()) {
      int cand = *worklist.begin();
      worklist.erase(worklist.begin());
      auto it = nbr.find(cand);
      if (it != nbr.end() && it->second.size() == 2) {
        v = cand;
        break;
      }
    }
    if (v == -1) {
      // Stuck with minimum degree >= 3: the reduced graph forces a K4 minor.
      block_failure f;
      f.stuck = true;
      f.h_adj = nbr;
      for (const auto& [key, s] : slots) {
        if (s.k == slot_state::kind::real)
          f.h_interior[key] = {};
        else
          f.h_interior[key] = interior_of(s.exp);
      }
      return f;
    }

    auto ns = nbr.at(v);
    int u = *ns.begin();
    int w = *ns.rbegin();

    // A sealed object (lens, or real edge with both sides closed) is a
    // bubble pinched at its endpoints. An endpoint of degree two means the
    // rest of the block supplies a third connection around the outside,
    // completing a K2,3.
    {
      std::optional<block_failure> sealed;
      for (int other : {u, w}) {
        slot_state& s = slot_at(v, other);
        bool lens = s.k == slot_state::kind::lens;
        bool closed_real = s.k == slot_state::kind::real && s.sides_used == 2;
        if (!lens && !closed_real) continue;
        block_failure f;
        f.pole_u = std::min(v, other);
        f.pole_w = std::max(v, other);
        if (lens) {
          f.interiors.push_back(interior_of(oriented(s, v, other)));
          std::vector<int> second = s.exp2;
          if (second.front() != v) std::reverse(second.begin(), second.end());
          f.interiors.push_back(interior_of(second));
        } else {
          for (int fid : s.closed_face_ids) {
            std::vector<int> in;
            for (int x : faces[fid])
              if (x != v && x != other) in.push_back(x);
            f.interiors.push_back(std::move(in));
          }
        }
        auto around = outside_connection(v, other);
        if (!around) throw std::logic_error("sealed slot endpoint without outside connection");
        f.interiors.push_back(interior_of(*around));
        sealed = std::move(f);
        break;
      }
      if (sealed) return *sealed;
    }

    std::vector<int> path = oriented(slot_at(u, v), u, v);
    {
      auto tail = oriented(slot_at(v, w), v, w);
      path.insert(path.end(), tail.begin() + 1, tail.end());
    }

    // remove v and its two slots
    slots.erase(norm_edge(u, v));
    slots.erase(norm_edge(v, w));
    nbr.erase(v);
    nbr.at(u).erase(v);
    nbr.at(w).erase(v);

    auto key = norm_edge(u, w);
    auto it = slots.find(key);
    if (it == slots.end()) {
      slot_state s;
      s.k = slot_state::kind::strand;
      s.exp = path;
      if (s.exp.front() != key.first) std::reverse(s.exp.begin(), s.exp.end());
      slots[key] = std::move(s);
      nbr.at(u).insert(w);
      nbr.at(w).insert(u);
    } else {
      slot_state& s = it->second;
      switch (s.k) {
        case slot_state::kind::real: {
          if (s.sides_used < 2) {
            s.closed_face_ids.push_back(static_cast<int>(faces.size()));
            faces.push_back(path);  // closed by the real edge w-u
            ++s.sides_used;
          } else {
            block_failure f;
            f.pole_u = key.first;
            f.pole_w = key.second;
            f.interiors.push_back(interior_of(path));
            for (int fid : s.closed_face_ids) {
              std::vector<int> in;
              for (int x : faces[fid])
                if (x != u && x != w) in.push_back(x);
              f.interiors.push_back(std::move(in));
            }
            return f;
          }
          break;
        }
        case slot_state::kind::strand: {
          // seal: the two strands bound one face
          std::vector<int> cyc = path;  // u .. w
          std::vector<int> other = oriented(s, w, u);
          cyc.insert(cyc.end(), other.begin() + 1, other.end() - 1);
          faces.push_back(std::move(cyc));
          slot_state lens;
          lens.k = slot_state::kind::lens;
          lens.exp = s.exp;
          lens.exp2 = path;
          if (lens.exp2.front() != key.first)
            std::reverse(lens.exp2.begin(), lens.exp2.end());
          s = std::move(lens);
          break;
        }
        case slot_state::kind::lens: {
          block_failure f;
          f.pole_u = key.first;
          f.pole_w = key.second;
          std::vector<int> a = oriented(s, u, w);
          std::vector<int> b2 = s.exp2;
          f.interiors.push_back(interior_of(a));
          f.interiors.push_back(interior_of(b2));
          f.interiors.push_back(interior_of(path));
          return f;
        }
      }
    }

    if (nbr.size() > 2) {
      for (int x : {u, w}) {
        size_t d = nbr.at(x).size();
        if (d < 2) throw std::logic_error("degree dropped below 2 in a biconnected block");
        if (d == 2) worklist.insert(x);
      }
    }
  }

  block_success ok;
  ok.faces = std::move(faces);
  return ok;
}

// Degree-(<=2) reduction test: true iff the graph has a K4 minor.
bool has_k4_minor_quick(graph g) {
  while (!g.empty()) {
    int pick = -1;
    for (int v : g.vertices())
      if (g.degree(v) <= 2) {
        pick = v;
        break;
      }
    if (pick == -1) return true;  // min degree >= 3 remains
    auto ns = g.neighbors(pick);
    if (ns.size() == 2) {
      int a = *ns.begin(), b = *ns.rbegin();
      g.remove_vertex(pick);
      if (!g.has_edge(a, b)) g.add_edge(a, b);
    } else {
      g.remove_vertex(pick);
    }
  }
  return false;
}

// Finds a K4 minor model of h (given min degree >= 3) by greedy quotient
// contractions that keep the K4 minor alive.
std::vector<std::set<int>> k4_groups_in(const graph& h) {
  if (!has_k4_minor_quick(h)) throw std::logic_error("stuck multigraph without K4 minor");
  graph w = h;
  std::map<int, std::set<int>> group;
  for (int v : w.vertices()) group[v] = {v};

  auto complete4 = [&]() {
    if (w.vertex_count() != 4) return false;
    auto vs = w.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (!w.has_edge(vs[i], vs[j])) return false;
    return true;
  };

  while (!complete4()) {
    bool advanced = false;
    for (auto [a, b] : w.edges()) {
      auto [cand, step] = contract_edge(w, a, b);
      if (has_k4_minor_quick(cand)) {
        int s = step.survivor;
        int o = a + b - s;
        group[s].insert(group[o].begin(), group[o].end());
        group.erase(o);
        w = std::move(cand);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("no contraction keeps the K4 minor");
  }
  std::vector<std::set<int>> out;
  for (int v : w.vertices()) out.push_back(group.at(v));
  return out;
}

obstruction lift_k4(const graph& g, const block_failure& f) {
  graph h;
  for (const auto& [v, ns] : f.h_adj) {
    h.add_vertex(v);
    for (int u : ns)
      if (u > v) h.add_edge(v, u);
  }
  auto groups = k4_groups_in(h);

  obstruction obs;
  obs.kind = obstruction::minor_kind::k4;
  std::vector<std::set<int>> lifted(4);
  for (int i = 0; i < 4; ++i) {
    lifted[i] = groups[i];
    // strand interiors along a spanning tree of the group keep it connected in g
    std::set<int> seen;
    std::deque<int> q{*groups[i].begin()};
    seen.insert(*groups[i].begin());
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : h.neighbors(x)) {
        if (!groups[i].count(y) || seen.count(y)) continue;
        seen.insert(y);
        q.push_back(y);
        const auto& in = f.h_interior.at(norm_edge(x, y));
        lifted[i].insert(in.begin(), in.end());
      }
    }
  }
  // one connecting edge per pair; its interior goes to the first group
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::optional<vkey> pick;
      for (int a : groups[i])
        for (int b : h.neighbors(a))
          if (groups[j].count(b)) {
            vkey k = norm_edge(a, b);
            if (!pick || k < *pick) pick = k;
          }
      if (!pick) throw std::logic_error("K4 groups not adjacent");
      const auto& in = f.h_interior.at(*pick);
      lifted[i].insert(in.begin(), in.end());
    }
  }
  for (auto& s : lifted) obs.branch_sets.emplace_back(s.begin(), s.end());
  (void)g;
  return obs;
}

obstruction overflow_k23(const block_failure& f) {
  obstruction obs;
  obs.kind = obstruction::minor_kind::k23;
  obs.branch_sets.push_back({f.pole_u});
  obs.branch_sets.push_back({f.pole_w});
  for (const auto& in : f.interiors) {
    std::vector<int> s = in;
    std::sort(s.begin(), s.end());
    obs.branch_sets.push_back(std::move(s));
  }
  return obs;
}

struct recog_outcome {
  bool outerplanar = true;
  std::optional<outerplanar_embedding> emb;
  std::optional<obstruction> obs;
};

block_embedding build_block_embedding(const graph& b, std::vector<std::vector<int>> faces) {
  block_embedding e;
  e.faces = std::move(faces);

  std::map<vkey, std::vector<int>> edge_faces;
  for (size_t fi = 0; fi < e.faces.size(); ++fi) {
    const auto& f = e.faces[fi];
    for (size_t i = 0; i < f.size(); ++i) {
      vkey k = norm_edge(f[i], f[(i + 1) % f.size()]);
      edge_faces[k].push_back(static_cast<int>(fi));
    }
  }

  std::map<int, std::vector<int>> ext_adj;
  for (auto edge : b.edges()) {
    auto it = edge_faces.find(edge);
    size_t cnt = (it == edge_faces.end()) ? 0 : it->second.size();
    if (cnt > 2) throw std::logic_error("edge on more than two faces");
    if (cnt == 2) {
      e.chords.push_back(edge);
      e.dual_edges.emplace_back(it->second[0], it->second[1]);
      e.chord_faces[edge] = {it->second[0], it->second[1]};
    } else {
      ext_adj[edge.first].push_back(edge.second);
      ext_adj[edge.second].push_back(edge.first);
    }
  }

  if (static_cast<long long>(e.faces.size()) != b.edge_count() - b.vertex_count() + 1)
    throw std::logic_error("face count violates Euler's formula");

  for (auto& [v, ns] : ext_adj) {
    if (ns.size() != 2) throw std::logic_error("exterior degree is not two");
    std::sort(ns.begin(), ns.end());
  }
  if (static_cast<int>(ext_adj.size()) != b.vertex_count())
    throw std::logic_error("exterior cycle misses vertices");

  int start = b.min_vertex();
  e.cycle.push_back(start);
  int prev = start;
  int cur = ext_adj.at(start)[0];
  while (cur != start) {
    e.cycle.push_back(cur);
    const auto& ns = ext_adj.at(cur);
    int nxt = (ns[0] == prev) ? ns[1] : ns[0];
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(e.cycle.size()) != b.vertex_count())
    throw std::logic_error("exterior edges do not form a Hamiltonian cycle");

  std::sort(e.chords.begin(), e.chords.end());
  return e;
}

recog_outcome recognize_impl(const graph& g, bool build_embedding, bool build_obstruction) {
  recog_outcome out;
  if (build_embedding) out.emb = outerplanar_embedding{};

  for (const auto& comp : connected_components(g)) {
    graph sub = g.induced(std::set<int>(comp.begin(), comp.end()));
    auto bct = block_cut_tree(sub);
    for (const auto& blk : bct.blocks) {
      if (blk.size() <= 2) continue;
      graph b = g.induced(std::set<int>(blk.begin(), blk.end()));
      auto res = eliminate_block(b);
      if (std::holds_alternative<block_success>(res)) {
        if (build_embedding)
          out.emb->blocks.push_back(
              build_block_embedding(b, std::move(std::get<block_success>(res).faces)));
        continue;
      }
      out.outerplanar = false;
      out.emb.reset();
      if (!build_obstruction) return out;

      const auto& f = std::get<block_failure>(res);
      std::optional<obstruction> obs;
      std::string fail;
      try {
        obs = f.stuck ? lift_k4(g, f) : overflow_k23(f);
        if (auto err = validate_obstruction(g, *obs)) {
          fail = *err;
          obs.reset();
        }
      } catch (const std::logic_error& e) {
        fail = e.what();
      }
      if (!obs && g.vertex_count() <= 12) {
        // brute-force fallback at desk scale
        if (auto model = find_minor_model(g, forbidden_minor::k4))
          obs = obstruction{obstruction::minor_kind::k4, *model};
        else if (auto model23 = find_minor_model(g, forbidden_minor::k23))
          obs = obstruction{obstruction::minor_kind::k23, *model23};
      }
      if (!obs) throw std::logic_error("obstruction extraction failed: " + fail);
      out.obs = std::move(obs);
      return out;
    }
  }
  return out;
}

}  // namespace

recognition_result recognize(const graph& g) {
  auto out = recognize_impl(g, true, true);
  if (out.outerplanar) return std::move(*out.emb);
  return std::move(*out.obs);
}

bool is_outerplanar(const graph& g) { return recognize_impl(g, false, false).outerplanar; }

std::optional<obstruction> find_obstruction(const graph& g) {
  auto out = recognize_impl(g, false, true);
  return out.obs;
}

int count_induced_uv_paths(const graph& g, int u, int v, int limit) {
  if (u == v) throw std::invalid_argument("count_induced_uv_paths: endpoints must differ");
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::invalid_argument("count_induced_uv_paths: endpoint not present");
  int count = 0;
  graph h = g.without_vertices({u, v});
  for (const auto& comp : connected_components(h)) {
    bool to_u = false, to_v = false;
    for (int x : comp) {
      if (g.neighbors(x).count(u)) to_u = true;
      if (g.neighbors(x).count(v)) to_v = true;
      if (to_u && to_v) break;
    }
    if (to_u && to_v && ++count >= limit) return limit;
  }
  return count;
}

bool check_edge_removal_criterion(const graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("check_edge_removal_criterion: not an edge");
  graph h = g.without_vertices({u, v});
  for (const auto& comp : connected_components(h)) {
    std::set<int> cs(comp.begin(), comp.end());
    if (!is_outerplanar(g.closed_neighborhood_subgraph(cs))) return false;
  }
  return count_induced_uv_paths(g, u, v, 3) < 3;
}

bool cycle_attachment_check(const graph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("cycle_attachment_check: not a cycle");
  std::set<int> cs(cycle.begin(), cycle.end());
  if (cs.size() != cycle.size())
    throw std::invalid_argument("cycle_attachment_check: repeated vertex");
  std::map<int, int> pos;
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
      throw std::invalid_argument("cycle_attachment_check: not a cycle of g");
    pos[cycle[i]] = static_cast<int>(i);
  }

  graph h = g.without_vertices(cs);
  int n = static_cast<int>(cycle.size());
  for (const auto& comp : connected_components(h)) {
    std::set<int> attach;
    for (int x : comp)
      for (int y : g.neighbors(x))
        if (cs.count(y)) attach.insert(pos.at(y));
    if (attach.size() > 2) return false;
    if (attach.size() == 2) {
      int a = *attach.begin(), b = *attach.rbegin();
      if (!(b - a == 1 || (a == 0 && b == n - 1))) return false;
    }
  }
  return true;
}

std::optional<std::string> validate_obstruction(const graph& g, const obstruction& obs) {
  size_t expect = obs.kind == obstruction::minor_kind::k4 ? 4 : 5;
  if (obs.branch_sets.size() != expect) return "wrong number of branch sets";
  std::set<int> seen;
  for (const auto& s : obs.branch_sets) {
    if (s.empty()) return "empty branch set";
    for (int v : s) {
      if (!g.has_vertex(v)) return "branch set vertex not in graph";
      if (!seen.insert(v).second) return "branch sets are not disjoint";
    }
    graph sub = g.induced(std::set<int>(s.begin(), s.end()));
    if (!is_connected(sub)) return "branch set is not connected";
  }
  auto adjacent = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
      for (int y : g.neighbors(x))
        if (std::binary_search(b.begin(), b.end(), y)) return true;
    return false;
  };
  std::vector<std::vector<int>> sets = obs.branch_sets;
  for (auto& s : sets) std::sort(s.begin(), s.end());
  if (obs.kind == obstruction::minor_kind::k4) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!adjacent(sets[i], sets[j])) return "missing K4 adjacency";
  } else {
    for (int i = 0; i < 2; ++i)
      for (int j = 2; j < 5; ++j)
        if (!adjacent(sets[i], sets[j])) return "missing K2,3 adjacency";
  }
  return std::nullopt;
}

std::optional<std::string> validate_embedding(const graph& g, const outerplanar_embedding& emb) {
  // collect expected blocks with >= 3 vertices
  std::vector<std::vector<int>> expected;
  for (const auto& comp : connected_components(g)) {
    graph sub = g.induced(std::set<int>(comp.begin(), comp.end()));
    for (auto& blk : block_cut_tree(sub).blocks)
      if (blk.size() >= 3) expected.push_back(blk);
  }
  if (expected.size() != emb.blocks.size()) return "wrong number of block embeddings";

  for (size_t bi = 0; bi < emb.blocks.size(); ++bi) {
    const block_embedding& e = emb.blocks[bi];
    std::vector<int> verts = e.cycle;
    std::sort(verts.begin(), verts.end());
    if (std::unique(verts.begin(), verts.end()) != verts.end())
      return "cycle repeats a vertex";
    bool found = false;
    for (const auto& blk : expected)
      if (blk == verts) found = true;
    if (!found) return "cycle does not match a block";

    std::set<int> vset(verts.begin(), verts.end());
    graph b = g.induced(vset);

    std::set<vkey> cyc_edges;
    int n = static_cast<int>(e.cycle.size());
    for (int i = 0; i < n; ++i) {
      vkey k = norm_edge(e.cycle[i], e.cycle[(i + 1) % n]);
      if (!b.has_edge(k.first, k.second)) return "cycle uses a non-edge";
      cyc_edges.insert(k);
    }
    std::set<vkey> chord_set(e.chords.begin(), e.chords.end());
    for (auto c : chord_set) {
      if (!b.has_edge(c.first, c.second)) return "chord is not an edge";
      if (cyc_edges.count(c)) return "chord duplicates a cycle edge";
    }
    if (static_cast<long long>(cyc_edges.size() + chord_set.size()) != b.edge_count())
      return "cycle plus chords do not cover the block";

    // chords must be pairwise non-crossing in the cyclic order
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[e.cycle[i]] = i;
    auto arc = [&](vkey c) {
      int a = pos.at(c.first), b2 = pos.at(c.second);
      return std::make_pair(std::min(a, b2), std::max(a, b2));
    };
    for (auto c1 : chord_set)
      for (auto c2 : chord_set) {
        if (c1 >= c2) continue;
        auto [a1, b1] = arc(c1);
        auto [a2, b2] = arc(c2);
        bool crossing = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
        if (crossing) return "crossing chords";
      }

    // faces: simple cycles; every edge on one face (exterior) or two (chord)
    if (static_cast<long long>(e.faces.size()) != b.edge_count() - b.vertex_count() + 1)
      return "face count violates Euler's formula";
    std::map<vkey, int> face_count;
    for (const auto& f : e.faces) {
      if (f.size() < 3) return "degenerate face";
      std::set<int> fs(f.begin(), f.end());
      if (fs.size() != f.size()) return "face repeats a vertex";
      for (size_t i = 0; i < f.size(); ++i) {
        vkey k = norm_edge(f[i], f[(i + 1) % f.size()]);
        if (!b.has_edge(k.first, k.second)) return "face uses a non-edge";
        face_count[k]++;
      }
    }
    for (auto ce : cyc_edges)
      if (face_count[ce] != 1) return "exterior edge not on exactly one face";
    for (auto c : chord_set)
      if (face_count[c] != 2) return "chord not on exactly two faces";

    // weak dual is a tree
    if (e.dual_edges.size() + 1 != e.faces.size() && !e.faces.empty())
      return "weak dual edge count is not faces-1";
    std::map<int, std::set<int>> dadj;
    for (auto [x, y] : e.dual_edges) {
      dadj[x].insert(y);
      dadj[y].insert(x);
    }
    std::set<int> seen;
    std::deque<int> q{0};
    seen.insert(0);
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : dadj[x])
        if (seen.insert(y).second) q.push_back(y);
    }
    if (seen.size() != e.faces.size()) return "weak dual is not connected";
    if (e.chord_faces.size() != chord_set.size()) return "chord_faces mismatch";
  }
  return std::nullopt;
}

}  // namespace opk

#include "srgq/sign_parity.hpp"

#include <algorithm>
#include <string>

#include "srgq/errors.hpp"

namespace srgq {

void Gf2System::add_row(std::span<const int> vars, bool rhs, std::optional<FourCycle> origin) {
  Gf2Row row{BitVec(static_cast<std::size_t>(num_vars)), rhs, std::move(origin)};
  for (int v : vars) {
    if (v < 0 || v >= num_vars) throw DomainError("variable " + std::to_string(v) + " out of range");
    row.support.flip(static_cast<std::size_t>(v));
  }
  rows.push_back(std::move(row));
}

Gf2System build_odd4cycle_system(const Graph& g, bool force) {
  if (!force) {
    const auto p = srg_parameters(g);
    if (!p) throw ApplicabilityError("graph is not strongly regular; odd 4-cycle system needs SRG(n,k,0,2)");
    if (p->lambda != 0)
      throw ApplicabilityError("lambda = " + std::to_string(p->lambda) + ", odd 4-cycle system needs lambda = 0");
    if (p->mu != 2)
      throw ApplicabilityError("mu = " + std::to_string(p->mu) + ", odd 4-cycle system needs mu = 2");
  }
  Gf2System sys;
  sys.num_vars = g.size();
  for (const FourCycle& c : enumerate_4cycles(g)) sys.add_row(c.edges, true, c);
  return sys;
}

Gf2Result solve_gf2(const Gf2System& sys) {
  const std::size_t nv = static_cast<std::size_t>(sys.num_vars);
  const std::size_t nr = sys.rows.size();
  struct Pivot {
    BitVec aug;    // variables, then rhs at bit nv
    BitVec combo;  // input rows combined into this one
  };
  std::vector<Pivot> pivots;
  std::vector<int> pivot_of(nv, -1);

  for (std::size_t i = 0; i < nr; ++i) {
    Pivot cur{BitVec(nv + 1), BitVec(nr)};
    for (std::size_t b = sys.rows[i].support.find_first(); b != BitVec::npos; b = sys.rows[i].support.find_next(b))
      cur.aug.set(b);
    cur.aug.assign(nv, sys.rows[i].rhs);
    cur.combo.set(i);
    while (true) {
      const std::size_t lead = cur.aug.find_first();
      if (lead == BitVec::npos) break;  // redundant row
      if (lead == nv) {
        InfeasibilityCertificate cert;
        for (int r : cur.combo.indices()) {
          cert.rows.push_back(static_cast<std::size_t>(r));
          if (sys.rows[r].origin) cert.cycles.push_back(*sys.rows[r].origin);
        }
        return cert;
      }
      if (pivot_of[lead] < 0) {
        pivot_of[lead] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(cur));
        break;
      }
      const Pivot& p = pivots[pivot_of[lead]];
      cur.aug ^= p.aug;
      cur.combo ^= p.combo;
    }
  }

  // Each pivot row only involves variables above its lead, so assign
  // from the highest lead down with free variables left at 0.
  SignAssignment x{BitVec(nv)};
  for (std::size_t lead = nv; lead-- > 0;) {
    if (pivot_of[lead] < 0) continue;
    const BitVec& aug = pivots[pivot_of[lead]].aug;
    bool value = aug.test(nv);
    for (std::size_t b = aug.find_next(lead); b < nv; b = aug.find_next(b)) value ^= x.bits.test(b);
    x.bits.assign(lead, value);
  }
  return x;
}

bool verify_assignment(const Graph& g, const SignAssignment& s) {
  if (s.bits.size() != static_cast<std::size_t>(g.size()))
    throw DomainError("assignment has " + std::to_string(s.bits.size()) + " bits, graph has " +
                      std::to_string(g.size()) + " edges");
  for (const FourCycle& c : enumerate_4cycles(g)) {
    bool parity = false;
    for (EdgeId e : c.edges) parity ^= s.negative(e);
    if (!parity) return false;
  }
  return true;
}

bool verify_certificate(const Gf2System& sys, const InfeasibilityCertificate& cert) {
  if (cert.rows.empty()) return false;
  BitVec acc(static_cast<std::size_t>(sys.num_vars));
  bool rhs = false;
  for (std::size_t r : cert.rows) {
    if (r >= sys.rows.size()) throw DomainError("certificate cites row " + std::to_string(r) + " of " +
                                                std::to_string(sys.rows.size()));
    for (std::size_t b = sys.rows[r].support.find_first(); b != BitVec::npos; b = sys.rows[r].support.find_next(b))
      acc.flip(b);
    rhs ^= sys.rows[r].rhs;
  }
  return acc.none() && rhs;
}

SignAssignment extract_signs_from_matrix(const QuadMatrix& m, const Graph& g) {
  if (!pattern_matches(m, g)) throw PreconditionError("matrix zero pattern does not match the graph");
  SignAssignment s{BitVec(static_cast<std::size_t>(g.size()))};
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge uv = g.edge(e);
    if (m(uv.u, uv.v).sign() < 0) s.bits.set(static_cast<std::size_t>(e));
  }
  return s;
}

std::vector<FanEightCycle> enumerate_fan_8cycles(const Graph& g) {
  std::vector<FanEightCycle> out;
  for (Vertex hub = 0; hub < g.order(); ++hub) {
    auto nb = g.neighbors(hub);
    const std::size_t k = nb.size();
    for (std::size_t i0 = 0; i0 < k; ++i0)
      for (std::size_t i1 = i0 + 1; i1 < k; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < k; ++i2)
          for (std::size_t i3 = i2 + 1; i3 < k; ++i3) {
            const Vertex a = nb[i0], b = nb[i1], c = nb[i2], d = nb[i3];
            // Cyclic orders of four spokes up to reflection, a first.
            const std::array<std::array<Vertex, 4>, 3> orders{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
            for (const auto& sp : orders) {
              std::array<std::vector<Vertex>, 4> links;
              for (int j = 0; j < 4; ++j) {
                BitVec common = g.adjacency(sp[j]) & g.adjacency(sp[(j + 1) % 4]);
                common.reset(static_cast<std::size_t>(hub));
                for (int x : common.indices())
                  if (!g.adjacent(hub, x) && std::find(sp.begin(), sp.end(), x) == sp.end()) links[j].push_back(x);
              }
              for (Vertex x0 : links[0])
                for (Vertex x1 : links[1])
                  for (Vertex x2 : links[2])
                    for (Vertex x3 : links[3]) {
                      std::array<Vertex, 4> xs{x0, x1, x2, x3};
                      std::sort(xs.begin(), xs.end());
                      if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) continue;
                      out.push_back({{sp[0], x0, sp[1], x1, sp[2], x2, sp[3], x3}, hub});
                    }
            }
          }
  }
  return out;
}

ConsequenceReport check_consequences(const Graph& g, const SignAssignment& s) {
  if (!verify_assignment(g, s)) throw PreconditionError("assignment does not make every 4-cycle odd");
  ConsequenceReport r;
  for (const CrossbarSixCycle& cb : enumerate_crossbar_6cycles(g)) {
    bool parity = false;
    for (EdgeId e : cb.rim) parity ^= s.negative(e);
    ++r.crossbar_total;
    if (!parity) ++r.crossbar_even;
  }
  for (const FanEightCycle& f : enumerate_fan_8cycles(g)) {
    bool parity = false;
    for (int i = 0; i < 8; ++i) parity ^= s.negative(g.edge_id_of(f.cycle[i], f.cycle[(i + 1) % 8]));
    ++r.fan8_total;
    if (!parity) ++r.fan8_even;
  }
  return r;
}

}  // namespace srgq

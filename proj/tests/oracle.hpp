#pragma once

// Reference implementations written independently of the library code paths
// they check: integer arithmetic for block domination, sorting by an explicit
// key for the inverse-lexicographic order, plain counters for the odometer.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bvm/diagram.hpp"

namespace oracle {

// Value of a binary block read most significant bit first. For equal
// lengths, a dominates b iff value(a) >= value(b).
inline std::uint64_t value(const std::string& s, std::size_t from, std::size_t len) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len; ++i) v = 2 * v + static_cast<std::uint64_t>(s[from + i] - '0');
  return v;
}

// Row-k markers on [k-1, L-2k+1]: n is marked iff some window of k block
// starts containing n has its maximum at n.
inline std::vector<long> markers(const std::string& w, std::size_t k) {
  const long L = static_cast<long>(w.size());
  const long kk = static_cast<long>(k);
  std::vector<long> out;
  for (long n = kk - 1; n <= L - 2 * kk + 1; ++n) {
    const auto here = value(w, static_cast<std::size_t>(n), k);
    for (long i = n - kk + 1; i <= n; ++i) {
      std::uint64_t best = 0;
      for (long j = i; j < i + kk; ++j) best = std::max(best, value(w, static_cast<std::size_t>(j), k));
      if (here >= best) {
        out.push_back(n);
        break;
      }
    }
  }
  return out;
}

// Every depth-N path as a list of edge indices, by depth-first search.
inline void paths(const bvm::OrderedBratteliDiagram& d, std::size_t N,
                  std::vector<bvm::EdgeIndex>& cur, bvm::VertexIndex at,
                  std::vector<std::vector<bvm::EdgeIndex>>& out) {
  if (cur.size() == N) {
    out.push_back(cur);
    return;
  }
  const std::size_t k = cur.size() + 1;
  const auto& E = d.edges(k);
  for (bvm::EdgeIndex e = 0; e < E.size(); ++e) {
    if (E[e].target != at) continue;
    cur.push_back(e);
    paths(d, N, cur, E[e].source, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<bvm::EdgeIndex>> paths(const bvm::OrderedBratteliDiagram& d,
                                                      std::size_t N) {
  std::vector<std::vector<bvm::EdgeIndex>> out;
  std::vector<bvm::EdgeIndex> cur;
  paths(d, N, cur, 0, out);
  return out;
}

// Orders of e_N, ..., e_1: sorting by this key inside one source class is the
// inverse-lexicographic order.
inline std::vector<std::size_t> key(const bvm::OrderedBratteliDiagram& d,
                                    const std::vector<bvm::EdgeIndex>& p) {
  std::vector<std::size_t> k;
  for (std::size_t i = p.size(); i >= 1; --i) k.push_back(d.edge(i, p[i - 1]).order);
  return k;
}

inline bvm::VertexIndex source(const bvm::OrderedBratteliDiagram& d,
                               const std::vector<bvm::EdgeIndex>& p) {
  return d.edge(p.size(), p.back()).source;
}

// Least path above p (same depth, same source); empty if none.
inline std::vector<bvm::EdgeIndex> next_inverse_lex_or_empty(const bvm::OrderedBratteliDiagram& d,
                                              const std::vector<std::vector<bvm::EdgeIndex>>& all,
                                              const std::vector<bvm::EdgeIndex>& p) {
  const auto kp = key(d, p);
  const auto sp = source(d, p);
  std::vector<bvm::EdgeIndex> best;
  std::vector<std::size_t> kbest;
  for (const auto& q : all) {
    if (source(d, q) != sp) continue;
    const auto kq = key(d, q);
    if (kq > kp && (best.empty() || kq < kbest)) {
      best = q;
      kbest = kq;
    }
  }
  return best;
}

// Odometer path for counter value c: e_k has order = bit k-1 of c.
inline std::vector<std::size_t> counter_orders(std::uint64_t c, std::size_t K) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < K; ++k) out.push_back((c >> k) & 1U);
  return out;
}

}  // namespace oracle

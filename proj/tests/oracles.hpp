#pragma once

// Test-side reference computations. None of these call the library routine
// they are used to check; they work on plain column vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "reltrace/frame.hpp"
#include "reltrace/relation.hpp"
#include "reltrace/smith.hpp"
#include "reltrace/topology.hpp"
#include "reltrace/trace.hpp"

namespace oracle {

using Column = std::vector<reltrace::StateId>;
using Columns = std::vector<Column>;
using reltrace::OpenSet;
using reltrace::VarId;

inline Columns destutter(const Columns& raw) {
  Columns out;
  for (const Column& c : raw)
    if (out.empty() || out.back() != c) out.push_back(c);
  return out;
}

// Rows of `sub` inside `domain`, then destutter. [()] for a nonempty trace on
// the empty domain.
inline Columns restrict(const Columns& cols, OpenSet domain, OpenSet sub) {
  std::vector<std::size_t> keep;
  std::size_t pos = 0;
  for (VarId v = 0; v < 64; ++v) {
    if (!domain.contains(v)) continue;
    if (sub.contains(v)) keep.push_back(pos);
    ++pos;
  }
  Columns raw;
  for (const Column& c : cols) {
    Column r;
    for (std::size_t k : keep) r.push_back(c[k]);
    raw.push_back(r);
  }
  return destutter(raw);
}

inline Columns columns_of(const reltrace::Trace& t) { return t.columns(); }

inline std::set<Columns> set_of(const reltrace::Relation& r) {
  std::set<Columns> out;
  for (const auto& t : r.traces()) out.insert(t.columns());
  return out;
}

inline bool related(const reltrace::Frame& frame, OpenSet domain, const Column& a, const Column& b) {
  std::size_t k = 0;
  for (VarId v : domain.members()) {
    if (!frame.space(v).leq(a[k], b[k])) return false;
    ++k;
  }
  return true;
}

inline std::vector<Column> product(const reltrace::Frame& frame, OpenSet domain) {
  std::vector<Column> out{Column{}};
  for (VarId v : domain.members()) {
    std::vector<Column> next;
    for (const Column& c : out)
      for (reltrace::StateId s = 0; s < frame.space(v).size(); ++s) {
        Column d = c;
        d.push_back(s);
        next.push_back(d);
      }
    out = std::move(next);
  }
  return out;
}

inline bool is_prefix(const Columns& p, const Columns& full) {
  return p.size() <= full.size() && std::equal(p.begin(), p.end(), full.begin());
}

// Every z on dom r ∪ dom s with z|dom r ∈ r and z|dom s ∈ s. Depth-first over
// chains of product states; a branch is cut as soon as a restriction of the
// prefix is no prefix of any operand trace (restriction commutes with taking
// prefixes up to destuttering).
inline std::set<Columns> combine(const reltrace::Frame& frame, const reltrace::Relation& r,
                                 const reltrace::Relation& s) {
  const OpenSet u = r.label(), w = s.label(), joint = u | w;
  const auto rs = set_of(r), ss = set_of(s);
  const auto states = product(frame, joint);
  std::set<Columns> out;
  auto viable = [&](const Columns& z) {
    const Columns a = restrict(z, joint, u), b = restrict(z, joint, w);
    bool pa = false, pb = false;
    for (const Columns& t : rs) pa = pa || is_prefix(a, t);
    for (const Columns& t : ss) pb = pb || is_prefix(b, t);
    return pa && pb;
  };
  Columns z;
  std::function<void()> walk = [&] {
    if (rs.count(restrict(z, joint, u)) && ss.count(restrict(z, joint, w))) out.insert(z);
    for (const Column& c : states) {
      if (!z.empty() && (c == z.back() || !related(frame, joint, z.back(), c))) continue;
      z.push_back(c);
      if (viable(z)) walk();
      z.pop_back();
    }
  };
  if (rs.count(Columns{}) && ss.count(Columns{})) out.insert(Columns{});
  for (const Column& c : states) {
    z = {c};
    if (viable(z)) walk();
  }
  return out;
}

// Number of traces on the union of the domains restricting to parts[i] on
// domains[i] for every i. Such a trace advances every part by at most one
// column per step, so it is a monotone walk through the product of column
// indices whose visited tuples agree on shared variables.
inline std::size_t multiway_glue_count(const std::vector<OpenSet>& domains, const std::vector<Columns>& parts) {
  const std::size_t m = parts.size();
  auto agree = [&](const std::vector<std::size_t>& at) {
    std::map<VarId, reltrace::StateId> seen;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t k = 0;
      for (VarId v : domains[i].members()) {
        auto [it, fresh] = seen.emplace(v, parts[i][at[i]][k++]);
        if (!fresh && it->second != parts[i][at[i]][k - 1]) return false;
      }
    }
    return true;
  };
  std::map<std::vector<std::size_t>, std::size_t> memo;
  std::function<std::size_t(const std::vector<std::size_t>&)> paths = [&](const std::vector<std::size_t>& at) {
    if (!agree(at)) return std::size_t{0};
    bool done = true;
    for (std::size_t i = 0; i < m; ++i) done = done && at[i] + 1 == parts[i].size();
    if (done) return std::size_t{1};
    if (auto it = memo.find(at); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<std::size_t> next = at;
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i)
        if (mask >> i & 1) ok = ++next[i] < parts[i].size();
      if (ok) total += paths(next);
    }
    return memo[at] = total;
  };
  for (const Columns& p : parts)
    if (p.empty()) return 0;
  return paths(std::vector<std::size_t>(m, 0));
}

// Rank over Q by Gaussian elimination on rationals.
inline std::size_t rational_rank(const reltrace::IntMatrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a.at(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < a.cols(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Rank over Z/q, q prime.
inline std::size_t modular_rank(const reltrace::IntMatrix& a, long q) {
  std::vector<std::vector<long>> m(a.rows(), std::vector<long>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_class x = a.at(r, c) % q;
      if (x < 0) x += q;
      m[r][c] = x.get_si();
    }
  auto inverse = [q](long x) {
    long result = 1, e = q - 2;
    for (x %= q; e; e >>= 1, x = x * x % q)
      if (e & 1) result = result * x % q;
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    const long inv = inverse(m[rank][c]);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long f = m[r][c] * inv % q;
      for (std::size_t k = c; k < a.cols(); ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

// All weakly monotone surjections {0..source-1} -> {0..target-1} as maps.
inline std::vector<std::vector<std::size_t>> monotone_surjections(std::size_t source, std::size_t target) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f;
  std::function<void()> grow = [&] {
    if (f.size() == source) {
      if (!f.empty() && f.back() + 1 == target) out.push_back(f);
      return;
    }
    const std::size_t last = f.empty() ? 0 : f.back();
    for (std::size_t next = last; next <= last + 1 && next < target; ++next) {
      if (f.empty() && next != 0) continue;
      f.push_back(next);
      grow();
      f.pop_back();
    }
  };
  grow();
  return out;
}

// Whether every block of `finer` lies inside some block of `coarser`.
inline bool refines(const std::vector<OpenSet>& finer, const std::vector<OpenSet>& coarser) {
  for (OpenSet u : finer) {
    bool inside = false;
    for (OpenSet w : coarser) inside = inside || u.subset_of(w);
    if (!inside) return false;
  }
  return true;
}

// Every antichain of nonempty opens whose union is the universe (the empty
// family when the universe is empty).
inline std::vector<std::vector<OpenSet>> maximal_covers(const reltrace::FiniteTopology& t) {
  std::vector<OpenSet> opens;
  for (OpenSet o : t.opens())
    if (!o.empty()) opens.push_back(o);
  std::vector<std::vector<OpenSet>> out;
  std::vector<OpenSet> pick;
  std::function<void(std::size_t, OpenSet)> grow = [&](std::size_t from, OpenSet covered) {
    if (covered == t.universe()) out.push_back(pick);
    for (std::size_t i = from; i < opens.size(); ++i) {
      bool comparable = false;
      for (OpenSet p : pick) comparable = comparable || p.subset_of(opens[i]) || opens[i].subset_of(p);
      if (comparable) continue;
      pick.push_back(opens[i]);
      grow(i + 1, covered | opens[i]);
      pick.pop_back();
    }
  };
  grow(0, OpenSet{});
  return out;
}

inline std::vector<OpenSet> sorted(std::vector<OpenSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace oracle

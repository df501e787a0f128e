#include "reltrace/cohomology.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "reltrace/errors.hpp"

namespace reltrace {

Nerve build_nerve(const MaximalCover& cover) {
  if (cover.size() == 0) throw DomainError("the nerve of an empty cover is undefined");
  Nerve nerve;
  nerve.vertices = cover.blocks();
  const std::size_t n = cover.size();
  // Depth-first over increasing index tuples; a tuple with empty intersection
  // has no nonempty extension.
  auto extend = [&](auto&& self, NerveCell cell) -> void {
    const std::size_t p = cell.indices.size() - 1;
    if (nerve.cells.size() <= p) nerve.cells.resize(p + 1);
    nerve.cells[p].push_back(cell);
    for (std::size_t j = cell.indices.back() + 1; j < n; ++j) {
      const OpenSet meet = cell.open & cover.blocks()[j];
      if (meet.empty()) continue;
      NerveCell next{cell.indices, meet};
      next.indices.push_back(j);
      self(self, std::move(next));
    }
  };
  for (std::size_t i = 0; i < n; ++i) extend(extend, NerveCell{{i}, cover.blocks()[i]});
  for (auto& level : nerve.cells)
    std::sort(level.begin(), level.end(), [](const NerveCell& a, const NerveCell& b) { return a.indices < b.indices; });
  return nerve;
}

std::string cell_name(const NerveCell& cell) {
  std::string s;
  for (std::size_t k = 0; k < cell.indices.size(); ++k) {
    if (k) s += '^';
    s += 'U' + std::to_string(cell.indices[k]);
  }
  return s;
}

Ring Ring::prime_field(std::uint64_t q) {
  if (q >= (1ULL << 31) || !is_prime(q)) throw DomainError("Z/" + std::to_string(q) + " is not a prime field");
  return {Kind::prime_field, q};
}

std::string Ring::name() const {
  switch (kind) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::prime_field:
      return "Z/" + std::to_string(modulus);
  }
  return "?";
}

Ring parse_ring(const std::string& text) {
  if (text == "Z") return Ring::integers();
  if (text == "Q") return Ring::rationals();
  if (text.size() > 1 && text[0] == 'Z') {
    std::size_t start = text[1] == '/' ? 2 : 1;
    std::uint64_t q = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + text.size();
    auto [end, ec] = std::from_chars(first, last, q);
    if (ec == std::errc() && end == last && first != last) {
      try {
        return Ring::prime_field(q);
      } catch (const DomainError& e) {
        throw ValidationError("options.ring", e.what());
      }
    }
  }
  throw ValidationError("options.ring", "unknown coefficient ring '" + text + "' (expected Z, Q or Z/q for a prime q)");
}

ChainComplex::ChainComplex(Ring ring, OpenSet total, Nerve nerve, std::vector<std::vector<BasisElement>> bases,
                           std::vector<IntMatrix> maps)
    : ring_(ring), total_(total), nerve_(std::move(nerve)), bases_(std::move(bases)), maps_(std::move(maps)) {}

const std::vector<BasisElement>& ChainComplex::basis(int p) const {
  static const std::vector<BasisElement> none;
  if (p < -1 || p + 1 >= static_cast<int>(bases_.size())) return none;
  return bases_[p + 1];
}

IntMatrix ChainComplex::coboundary(int p) const {
  if (p >= -1 && p + 1 < static_cast<int>(maps_.size())) return maps_[p + 1];
  return IntMatrix(dim(p + 1), dim(p));
}

namespace {

struct DegreeIndex {
  std::vector<std::size_t> offset;  // first basis position of each cell
  std::map<std::vector<std::size_t>, std::size_t> cell_of;
};

}  // namespace

ChainComplex build_complex(const Subpresheaf& a, const MaximalCover& cover, Ring ring) {
  Nerve nerve = build_nerve(cover);
  OpenSet total;
  for (OpenSet b : cover.blocks()) total = total | b;
  const int top = nerve.dimension();

  std::vector<std::vector<BasisElement>> bases(top + 2);
  std::vector<DegreeIndex> index(top + 2);
  for (const Trace& t : a.carrier(total)) bases[0].push_back({0, t});
  index[0].offset.push_back(0);
  for (int p = 0; p <= top; ++p) {
    auto& basis = bases[p + 1];
    auto& idx = index[p + 1];
    for (std::size_t c = 0; c < nerve.cells[p].size(); ++c) {
      const NerveCell& cell = nerve.cells[p][c];
      idx.offset.push_back(basis.size());
      idx.cell_of.emplace(cell.indices, c);
      for (const Trace& t : a.carrier(cell.open)) basis.push_back({c, t});
    }
  }

  auto row_of = [&](int p, std::size_t cell, const Trace& t) {
    const NerveCell& c = nerve.cells[p][cell];
    const auto& carrier = a.carrier(c.open);
    auto it = std::lower_bound(carrier.begin(), carrier.end(), t);
    if (it == carrier.end() || *it != t) throw PreconditionError("presheaf is not closed under restriction");
    return index[p + 1].offset[cell] + static_cast<std::size_t>(it - carrier.begin());
  };

  std::vector<IntMatrix> maps;
  {
    IntMatrix d(bases[1].size(), bases[0].size());
    for (std::size_t col = 0; col < bases[0].size(); ++col)
      for (std::size_t v = 0; v < nerve.cells[0].size(); ++v)
        d.at(row_of(0, v, restrict_trace(bases[0][col].section, nerve.cells[0][v].open)), col) += 1;
    maps.push_back(std::move(d));
  }
  for (int p = 0; p < top; ++p) {
    const auto& from = bases[p + 1];
    IntMatrix d(bases[p + 2].size(), from.size());
    for (std::size_t col = 0; col < from.size(); ++col) {
      const NerveCell& cell = nerve.cells[p][from[col].cell];
      for (std::size_t j = 0; j < cover.size(); ++j) {
        if (std::binary_search(cell.indices.begin(), cell.indices.end(), j)) continue;
        std::vector<std::size_t> larger = cell.indices;
        auto pos = std::lower_bound(larger.begin(), larger.end(), j);
        const std::size_t k = static_cast<std::size_t>(pos - larger.begin());
        larger.insert(pos, j);
        auto found = index[p + 2].cell_of.find(larger);
        if (found == index[p + 2].cell_of.end()) continue;
        const std::size_t target = found->second;
        const Trace r = restrict_trace(from[col].section, nerve.cells[p + 1][target].open);
        d.at(row_of(p + 1, target, r), col) += (k % 2 == 0) ? 1 : -1;
      }
    }
    maps.push_back(std::move(d));
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!(maps[i + 1] * maps[i]).is_zero())
      throw PreconditionError("coboundaries do not compose to zero at degree " + std::to_string(static_cast<int>(i) - 1));
  return ChainComplex(ring, total, std::move(nerve), std::move(bases), std::move(maps));
}

namespace {

std::size_t rank_in(const Ring& ring, const SmithForm& s) {
  if (ring.kind != Ring::Kind::prime_field) return s.rank();
  return static_cast<std::size_t>(std::count_if(s.invariants.begin(), s.invariants.end(), [&](const mpz_class& d) {
    return mpz_fdiv_ui(d.get_mpz_t(), ring.modulus) != 0;
  }));
}

}  // namespace

CohomologyResult cohomology(const ChainComplex& c, int p) {
  if (p < -1) throw DomainError("cohomology is defined from degree -1 upwards");
  CohomologyResult out;
  out.degree = p;
  out.ring = c.ring();
  if (p > c.top_degree()) return out;
  const IntMatrix prev = c.coboundary(p - 1);
  const IntMatrix next = c.coboundary(p);
  const SmithForm prev_snf = smith_normal_form(prev);
  const SmithForm next_snf = smith_normal_form(next);
  out.rank = c.dim(p) - rank_in(c.ring(), next_snf) - rank_in(c.ring(), prev_snf);
  if (c.ring().kind == Ring::Kind::integers)
    for (const mpz_class& d : prev_snf.invariants)
      if (d > 1) out.torsion.push_back(d);
  if (out.rank > 0)
    out.representatives =
        cohomology_representatives(prev, next, c.ring().kind == Ring::Kind::prime_field ? c.ring().modulus : 0);
  return out;
}

ObstructionReport obstruction_report(const Subpresheaf& a, const MaximalCover& cover, Ring ring) {
  ChainComplex complex = build_complex(a, cover, ring);
  CohomologyResult h_minus1 = cohomology(complex, -1);
  CohomologyResult h0 = cohomology(complex, 0);
  return ObstructionReport{std::move(complex), std::move(h_minus1), std::move(h0)};
}

}  // namespace reltrace

#include "helios/counts.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "helios/error.hpp"

namespace helios {

namespace {

using Int = __int128;
using IVec = std::vector<std::int64_t>;

Int abs128(Int v) { return v < 0 ? -v : v; }

// Fraction-free Gaussian elimination (Bareiss). Returns the determinant of a
// square matrix; exact for integer input.
Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Int a = m[r][c], b = m[i][c];
      Int g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = m[i][j] * a - m[r][j] * b;
        g = std::gcd(static_cast<long long>(abs128(g)), static_cast<long long>(abs128(m[i][j])));
      }
      if (g > 1)
        for (auto& v : m[i]) v /= g;
    }
    ++r;
  }
  return r;
}

std::vector<Int> difference(const IVec& a, const IVec& b) {
  std::vector<Int> d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = static_cast<Int>(a[k]) - b[k];
  return d;
}

struct Facet {
  std::vector<std::size_t> vertices;  // sorted indices into the point list
  std::vector<Int> normal;            // outward
  Int offset;                         // normal . v for every vertex v
  bool alive = true;
};

// Incremental beneath-beyond hull with simplicial (possibly coplanar) facets.
class Hull {
 public:
  Hull(std::vector<IVec> points, std::size_t dim) : pts_(std::move(points)), dim_(dim) { build(); }

  bool full_dimensional() const { return full_; }

  Int normalized_volume() const {
    if (!full_) return 0;
    const IVec& apex = pts_[simplex_.front()];
    Int total = 0;
    for (const auto& f : facets_) {
      if (!f.alive) continue;
      std::vector<std::vector<Int>> m;
      for (auto v : f.vertices) m.push_back(difference(pts_[v], apex));
      total += abs128(determinant(std::move(m)));
    }
    return total;
  }

  // Facet vertices that are true vertices: a point inside a face of positive
  // dimension only touches facets whose normals span less than the full space.
  std::vector<std::size_t> vertex_indices() const {
    std::map<std::size_t, std::vector<std::vector<Int>>> normals;
    for (const auto& f : facets_)
      if (f.alive)
        for (auto v : f.vertices) normals[v].push_back(f.normal);
    std::vector<std::size_t> idx;
    for (auto& [v, n] : normals)
      if (rank(n) == dim_) idx.push_back(v);
    return idx;
  }

 private:
  void build() {
    // Greedy choice of dim+1 affinely independent points.
    simplex_.push_back(0);
    std::vector<std::vector<Int>> basis;
    for (std::size_t k = 1; k < pts_.size() && simplex_.size() <= dim_; ++k) {
      auto trial = basis;
      trial.push_back(difference(pts_[k], pts_[0]));
      if (rank(trial) == trial.size()) {
        basis = std::move(trial);
        simplex_.push_back(k);
      }
    }
    full_ = simplex_.size() == dim_ + 1;
    if (!full_) return;

    // Interior reference: (dim+1) times the simplex centroid, compared against
    // (dim+1) times a facet vertex to stay in integers.
    interior_scaled_.assign(dim_, 0);
    for (auto s : simplex_)
      for (std::size_t k = 0; k < dim_; ++k) interior_scaled_[k] += pts_[s][k];

    for (std::size_t drop = 0; drop <= dim_; ++drop) {
      std::vector<std::size_t> verts;
      for (std::size_t k = 0; k <= dim_; ++k)
        if (k != drop) verts.push_back(simplex_[k]);
      add_facet(std::move(verts));
    }
    std::vector<bool> in_simplex(pts_.size(), false);
    for (auto s : simplex_) in_simplex[s] = true;
    for (std::size_t k = 0; k < pts_.size(); ++k)
      if (!in_simplex[k]) insert(k);
  }

  void add_facet(std::vector<std::size_t> verts) {
    std::sort(verts.begin(), verts.end());
    const IVec& base = pts_[verts[0]];
    std::vector<Int> normal(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      std::vector<std::vector<Int>> m;
      for (std::size_t k = 1; k < verts.size(); ++k) m.push_back(difference(pts_[verts[k]], base));
      std::vector<Int> unit(dim_, 0);
      unit[j] = 1;
      m.push_back(unit);
      normal[j] = determinant(std::move(m));
    }
    Int g = 0;
    for (auto v : normal) g = std::gcd(static_cast<long long>(abs128(g)), static_cast<long long>(abs128(v)));
    if (g > 1)
      for (auto& v : normal) v /= g;
    Int offset = 0;
    Int probe = 0;
    const Int scale = static_cast<Int>(dim_ + 1);
    for (std::size_t k = 0; k < dim_; ++k) {
      offset += normal[k] * base[k];
      probe += normal[k] * interior_scaled_[k];
    }
    if (probe > offset * scale) {
      for (auto& v : normal) v = -v;
      offset = -offset;
    }
    facets_.push_back({std::move(verts), std::move(normal), offset, true});
  }

  void insert(std::size_t p) {
    const IVec& q = pts_[p];
    std::map<std::vector<std::size_t>, int> ridges;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (!facets_[f].alive) continue;
      Int side = 0;
      for (std::size_t k = 0; k < dim_; ++k) side += facets_[f].normal[k] * q[k];
      if (side <= facets_[f].offset) continue;
      visible.push_back(f);
      const auto& v = facets_[f].vertices;
      for (std::size_t drop = 0; drop < v.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (k != drop) ridge.push_back(v[k]);
        ++ridges[ridge];
      }
    }
    if (visible.empty()) return;
    for (auto f : visible) facets_[f].alive = false;
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      auto verts = ridge;
      verts.push_back(p);
      add_facet(std::move(verts));
    }
    if (facets_.size() > 4 * alive_count() + 64) compact();
  }

  std::size_t alive_count() const {
    return static_cast<std::size_t>(std::count_if(facets_.begin(), facets_.end(), [](const Facet& f) { return f.alive; }));
  }

  void compact() {
    std::erase_if(facets_, [](const Facet& f) { return !f.alive; });
  }

  std::vector<IVec> pts_;
  std::size_t dim_;
  bool full_ = false;
  std::vector<std::size_t> simplex_;
  std::vector<Int> interior_scaled_;
  std::vector<Facet> facets_;
};

std::vector<IVec> to_ivecs(const std::vector<Exponents>& points) {
  std::set<IVec> unique;
  for (const auto& p : points) unique.insert(IVec(p.begin(), p.end()));
  return {unique.begin(), unique.end()};
}

std::int64_t factorial(std::size_t n) {
  std::int64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<std::int64_t>(k);
  return f;
}

}  // namespace

Polytope::Polytope(std::vector<Exponents> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error("a polytope needs at least one point");
  dimension_ = points_.front().size();
  for (const auto& p : points_)
    if (p.size() != dimension_) throw DimensionError("polytope points differ in dimension");
}

std::int64_t LatticeVolume::denominator() const { return factorial(dimension); }

std::uint64_t total_degree(const PolySystem& s) {
  if (!s.is_square()) throw DimensionError("total degree needs a square system");
  std::uint64_t d = 1;
  for (int deg : s.degrees()) {
    if (deg == 0) return 0;
    d *= static_cast<std::uint64_t>(deg);
  }
  return d;
}

LatticeVolume volume(const Polytope& p) {
  if (p.dimension() > kMaxPolytopeDimension)
    throw Error("polytope dimension " + std::to_string(p.dimension()) + " exceeds the supported maximum of " +
                std::to_string(kMaxPolytopeDimension));
  if (p.dimension() == 0) return {0, 0};
  Hull hull(to_ivecs(p.points()), p.dimension());
  return {static_cast<std::int64_t>(hull.normalized_volume()), p.dimension()};
}

std::vector<Exponents> hull_generators(const std::vector<Exponents>& points) {
  const auto unique = to_ivecs(points);
  auto to_exponents = [](const IVec& v) { return Exponents(v.begin(), v.end()); };
  std::vector<Exponents> out;
  if (unique.empty()) return out;
  const std::size_t dim = unique.front().size();
  if (dim == 0 || dim > kMaxPolytopeDimension) {
    for (const auto& v : unique) out.push_back(to_exponents(v));
    return out;
  }
  Hull hull(unique, dim);
  if (!hull.full_dimensional()) {
    for (const auto& v : unique) out.push_back(to_exponents(v));
    return out;
  }
  for (auto k : hull.vertex_indices()) out.push_back(to_exponents(unique[k]));
  return out;
}

std::vector<Exponents> minkowski_sum(const std::vector<Exponents>& a, const std::vector<Exponents>& b) {
  std::set<Exponents> out;
  for (const auto& p : a)
    for (const auto& q : b) {
      if (p.size() != q.size()) throw DimensionError("Minkowski sum of point sets of different dimension");
      Exponents s(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) s[k] = p[k] + q[k];
      out.insert(std::move(s));
    }
  return {out.begin(), out.end()};
}

std::uint64_t mixed_volume(const PolySystem& s) {
  if (!s.is_square()) throw DimensionError("mixed volume needs a square system");
  const std::size_t n = s.variable_count();
  if (n > kMaxPolytopeDimension)
    throw Error("mixed volume supports at most " + std::to_string(kMaxPolytopeDimension) + " variables");
  std::vector<std::vector<Exponents>> supports;
  for (const auto& p : s.polys()) {
    if (p.is_zero()) throw Error("mixed volume of a system with a zero polynomial");
    supports.push_back(hull_generators(p.support()));
  }

  // sums[mask] holds generators of the Minkowski sum over the equations in mask.
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<Exponents>> sums(subsets);
  Int signed_total = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    sums[mask] = rest == 0 ? supports[low] : hull_generators(minkowski_sum(sums[rest], supports[low]));
    const auto vol = volume(Polytope(sums[mask]));
    const int size = __builtin_popcountll(mask);
    signed_total += ((n - static_cast<std::size_t>(size)) % 2 == 0 ? 1 : -1) * static_cast<Int>(vol.normalized);
  }
  // The signed sum of normalized volumes equals n! times the mixed volume,
  // which itself is an integer.
  const Int denom = factorial(n);
  if (signed_total < 0 || signed_total % denom != 0) throw Error("mixed volume is not a non-negative integer");
  return static_cast<std::uint64_t>(signed_total / denom);
}

}  // namespace helios

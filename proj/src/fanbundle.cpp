#include "tropbal/fanbundle.hpp"

#include "tropbal/lattice.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace tropbal {

namespace {

using RatMatrix = std::vector<RatVec>;

// Row-reduces a copy of m and returns its rank.
std::size_t rank_of(RatMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Solves m x = rhs for square nonsingular m.
RatVec solve(RatMatrix m, RatVec rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular pivot matrix");
    std::swap(m[pivot], m[c]);
    std::swap(rhs[pivot], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

RatMatrix rows_of(const Fan1Skeleton& fan, const std::vector<std::size_t>& idx) {
  RatMatrix m;
  for (auto i : idx) m.push_back(to_rational(fan.rays()[i].v()));
  return m;
}

bool unimodular(const Fan1Skeleton& fan, const std::vector<std::size_t>& idx) {
  return abs(determinant(rows_of(fan, idx))) == 1;
}

// Lexicographically first n-subset of {0..m-1} with a unimodular matrix.
std::optional<std::vector<std::size_t>> first_unimodular(const Fan1Skeleton& fan) {
  const std::size_t n = fan.dimension();
  const std::size_t m = fan.rays().size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    if (unimodular(fan, idx)) return idx;
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == m - n + pos - 1) --pos;
    if (pos == 0) return std::nullopt;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < n; ++k) idx[k] = idx[k - 1] + 1;
  }
}

void check_base(const IntVec& base, std::size_t r, const char* what) {
  if (base.size() != r) {
    throw InvalidInput(std::string(what) + " has length " + std::to_string(base.size()) +
                       ", expected picard rank " + std::to_string(r));
  }
}

}  // namespace

Ray::Ray(IntVec v) : v_(std::move(v)) {
  if (v_.empty()) throw InvalidInput("ray vector is empty");
  if (!is_primitive(v_)) throw InvalidInput("ray vector is not primitive (or is zero)");
}

Ray primitive(const IntVec& w) { return Ray(primitive_vector(w)); }

Fan1Skeleton::Fan1Skeleton(std::size_t n, std::vector<Ray> rays) : n_(n), rays_(std::move(rays)) {
  if (n == 0) throw InvalidInput("fan dimension must be positive");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].dimension() != n) {
      throw InvalidInput("rays[" + std::to_string(i) + "] has dimension " +
                         std::to_string(rays_[i].dimension()) + ", expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rays_[j] == rays_[i]) throw InvalidInput("rays[" + std::to_string(i) + "] is a duplicate");
    }
  }
}

bool Fan1Skeleton::contains(const Ray& r) const {
  return std::find(rays_.begin(), rays_.end(), r) != rays_.end();
}

BundleDescriptor::BundleDescriptor(std::size_t n_, std::size_t r_, std::vector<IntVec> chern_)
    : n(n_), r(r_), chern(std::move(chern_)) {
  if (n == 0) throw InvalidInput("bundle rank n must be positive");
  if (chern.size() != n) {
    throw InvalidInput("chern lists " + std::to_string(chern.size()) + " classes, expected " +
                       std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (chern[i].size() != r) {
      throw InvalidInput("chern[" + std::to_string(i) + "] has length " +
                         std::to_string(chern[i].size()) + ", expected picard_rank " +
                         std::to_string(r));
    }
  }
}

std::int64_t BundleDescriptor::chern_pairing(std::size_t i, const IntVec& beta) const {
  if (i >= n) throw InvalidInput("bundle index out of range");
  check_base(beta, r, "beta");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < r; ++k) s += chern[i][k] * beta[k];
  return s;
}

DivisorClass::DivisorClass(std::map<Ray, std::int64_t> h, IntVec b)
    : horiz(std::move(h)), base(std::move(b)) {
  std::erase_if(horiz, [](const auto& kv) { return kv.second == 0; });
}

std::int64_t DivisorClass::coefficient(const Ray& r) const {
  auto it = horiz.find(r);
  return it == horiz.end() ? 0 : it->second;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.base.size() != b.base.size()) throw InvalidInput("divisor base vectors differ in length");
  DivisorClass out = a;
  for (const auto& [r, c] : b.horiz) out.horiz[r] += c;
  for (std::size_t k = 0; k < out.base.size(); ++k) out.base[k] += b.base[k];
  std::erase_if(out.horiz, [](const auto& kv) { return kv.second == 0; });
  return out;
}

DivisorClass operator*(std::int64_t k, const DivisorClass& d) {
  DivisorClass out = d;
  for (auto& [r, c] : out.horiz) c *= k;
  for (auto& x : out.base) x *= k;
  std::erase_if(out.horiz, [](const auto& kv) { return kv.second == 0; });
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-1) * b; }

DivisorClass relation(const BundleDescriptor& bundle, const Fan1Skeleton& fan, std::size_t i) {
  if (fan.dimension() != bundle.n) {
    throw InvalidInput("fan dimension " + std::to_string(fan.dimension()) +
                       " does not match bundle rank " + std::to_string(bundle.n));
  }
  if (i >= bundle.n) {
    throw InvalidInput("relation index " + std::to_string(i) + " out of range for rank " +
                       std::to_string(bundle.n));
  }
  std::map<Ray, std::int64_t> horiz;
  for (const auto& ray : fan.rays()) horiz[ray] = ray.coord(i);
  IntVec base = bundle.chern[i];
  for (auto& x : base) x = -x;
  return DivisorClass(std::move(horiz), std::move(base));
}

std::vector<std::size_t> pivot_rays(const Fan1Skeleton& fan) {
  const std::size_t n = fan.dimension();
  std::vector<std::size_t> greedy;
  RatMatrix chosen;
  for (std::size_t i = 0; i < fan.rays().size() && greedy.size() < n; ++i) {
    chosen.push_back(to_rational(fan.rays()[i].v()));
    if (rank_of(chosen) == chosen.size()) {
      greedy.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (greedy.size() < n) {
    throw InvalidInput("fan rays span a rank " + std::to_string(greedy.size()) +
                       " sublattice; the relations cannot be solved in rank " + std::to_string(n));
  }
  if (unimodular(fan, greedy)) return greedy;
  if (auto uni = first_unimodular(fan)) return *uni;
  return greedy;
}

DivisorClass reduce(const DivisorClass& d, const BundleDescriptor& bundle,
                    const Fan1Skeleton& fan) {
  if (fan.dimension() != bundle.n) throw InvalidInput("fan dimension does not match bundle rank");
  IntVec base = d.base.empty() ? IntVec(bundle.r, 0) : d.base;
  check_base(base, bundle.r, "divisor base");
  for (const auto& [ray, c] : d.horiz) {
    if (!fan.contains(ray)) throw InvalidInput("divisor refers to a ray outside the fan");
  }

  const std::vector<std::size_t> pivots = pivot_rays(fan);
  // Subtract sum_i lambda_i * relation(i) with <lambda, v_p> = d_p on pivots.
  RatVec rhs;
  for (auto p : pivots) rhs.push_back(make_rational(d.coefficient(fan.rays()[p])));
  const RatVec lambda_q = solve(rows_of(fan, pivots), rhs);
  IntVec lambda;
  for (const auto& l : lambda_q) {
    if (!is_integer(l)) {
      throw InvalidInput("pivot rays form a basis of index > 1 and the divisor is not an "
                         "integral combination of the relations");
    }
    lambda.push_back(to_int64(l));
  }

  std::map<Ray, std::int64_t> horiz;
  for (const auto& ray : fan.rays()) {
    std::int64_t c = d.coefficient(ray);
    for (std::size_t i = 0; i < bundle.n; ++i) c -= lambda[i] * ray.coord(i);
    horiz[ray] = c;
  }
  for (std::size_t i = 0; i < bundle.n; ++i) {
    for (std::size_t k = 0; k < bundle.r; ++k) base[k] += lambda[i] * bundle.chern[i][k];
  }
  return DivisorClass(std::move(horiz), std::move(base));
}

std::int64_t intersect_curve(const DivisorClass& d, const std::map<Ray, std::int64_t>& weights,
                             const CurveClassData& beta) {
  std::int64_t total = 0;
  for (const auto& [ray, c] : d.horiz) {
    auto it = weights.find(ray);
    if (it != weights.end()) total += c * it->second;
  }
  if (!d.base.empty()) {
    check_base(beta.beta, d.base.size(), "beta");
    for (std::size_t k = 0; k < d.base.size(); ++k) total += d.base[k] * beta.beta[k];
  }
  return total;
}

}  // namespace tropbal

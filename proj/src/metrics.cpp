#include "scb/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "scb/error.hpp"

namespace scb {

namespace {

std::size_t checked_power(std::uint32_t base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > MetricSpace::kMaxAmbient) {
      throw Error(ErrorCode::AmbientTooLarge, "ambient space exceeds 2^20 elements");
    }
  }
  return out;
}

bool proportional(const FieldVector& a, const FieldVector& b) {
  const auto& f = *a.field;
  for (Element c = 1; c < f.order(); ++c) {
    if (scale(c, a) == b) return true;
  }
  return false;
}

// Calls fn on every size-t subset of {0..m-1}, in lexicographic order.
template <typename Fn>
bool for_each_subset(int m, int t, Fn&& fn) {
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  if (t > m) return false;
  while (true) {
    if (fn(std::as_const(idx))) return true;
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint32_t support_mask(const FieldVector& v) {
  std::uint32_t mask = 0;
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (v.coords[l] != 0) mask |= 1u << l;
  }
  return mask;
}

void check_same(const FieldVector& x, const FieldVector& y) {
  if (x.field != y.field || x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors differ in field or length");
  }
}

int phase_rotation_weight(std::span<const Element> z, const FiniteField& f) {
  int best = static_cast<int>(z.size()) + 1;
  for (Element c = 0; c < f.order(); ++c) {
    int w = c != 0 ? 1 : 0;
    for (Element e : z) w += e != c ? 1 : 0;
    best = std::min(best, w);
  }
  return best;
}

}  // namespace

std::string_view to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::CityBlock: return "city-block";
    case MetricKind::Projective: return "projective";
    case MetricKind::PhaseRotation: return "phase-rotation";
    case MetricKind::Block: return "block";
    case MetricKind::CyclicBurst: return "cyclic-burst";
    case MetricKind::Varshamov: return "varshamov";
  }
  return "unknown";
}

ProjectiveParams make_projective_params(FieldPtr field, int n, std::vector<FieldVector> subspaces) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "length must be >= 1");
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const auto& v = subspaces[i];
    if (v.field != field || static_cast<int>(v.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch, "spanning vector has wrong field or length");
    }
    if (v.is_zero()) throw Error(ErrorCode::InvalidParameter, "spanning vector is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(subspaces[j], v)) {
        throw Error(ErrorCode::InvalidParameter, "subspace listed twice");
      }
    }
  }
  if (static_cast<int>(row_reduce(subspaces).rank) != n) {
    throw Error(ErrorCode::InvalidParameter, "subspaces do not span the full space");
  }
  return ProjectiveParams{std::move(field), n, std::move(subspaces)};
}

ProjectiveParams phase_rotation_family(FieldPtr field, int n) {
  std::vector<FieldVector> family;
  for (int i = 1; i <= n; ++i) family.push_back(FieldVector::unit(field, n, i));
  if (n > 1) family.push_back(FieldVector::ones(field, n));
  return make_projective_params(field, n, std::move(family));
}

BlockParams make_block_params(FieldPtr field, std::vector<std::vector<int>> partition) {
  int n = 0;
  for (const auto& b : partition) n += static_cast<int>(b.size());
  std::vector<int> seen(n + 1, 0);
  for (const auto& b : partition) {
    if (b.empty()) throw Error(ErrorCode::InvalidParameter, "empty block in partition");
    for (int i : b) {
      if (i < 1 || i > n || seen[i]++) {
        throw Error(ErrorCode::InvalidParameter, "blocks must partition {1..n}");
      }
    }
  }
  for (auto& b : partition) std::sort(b.begin(), b.end());
  std::stable_sort(partition.begin(), partition.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return BlockParams{std::move(field), n, std::move(partition)};
}

CyclicBurstParams make_cyclic_burst_params(FieldPtr field, int n, int b) {
  if (b < 2 || b > n - 1) throw Error(ErrorCode::InvalidParameter, "burst width needs 2 <= b <= n-1");
  CyclicBurstParams p{std::move(field), n, b, {}};
  for (int i = 0; i < n; ++i) {
    std::vector<int> w;
    for (int j = 1; j <= b; ++j) {
      const int r = (i + j) % n;
      w.push_back(r == 0 ? n : r);
    }
    p.windows.push_back(std::move(w));
  }
  return p;
}

void MetricSpace::init_field_space(FieldPtr field, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "length must be >= 1");
  field_ = std::move(field);
  n_ = n;
  radix_ = field_->order();
  size_ = checked_power(radix_, n);
  weight_.assign(size_, 0);
}

MetricSpace MetricSpace::city_block(int m, int n) {
  if (m < 3) throw Error(ErrorCode::InvalidParameter, "city block alphabet needs m >= 3");
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "length must be >= 1");
  MetricSpace s;
  s.kind_ = MetricKind::CityBlock;
  s.params_ = CityBlockParams{m, n};
  s.n_ = n;
  s.radix_ = static_cast<std::uint32_t>(m);
  s.size_ = checked_power(s.radix_, n);
  return s;
}

MetricSpace MetricSpace::varshamov(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "length must be >= 1");
  MetricSpace s;
  s.kind_ = MetricKind::Varshamov;
  s.params_ = VarshamovParams{n};
  s.n_ = n;
  s.radix_ = 2;
  s.size_ = checked_power(2, n);
  return s;
}

MetricSpace MetricSpace::projective(ProjectiveParams params) {
  MetricSpace s;
  s.kind_ = MetricKind::Projective;
  s.init_field_space(params.field, params.n);

  // Mark every element of span(F_I) for subsets I of increasing size.
  const int m = static_cast<int>(params.subspaces.size());
  std::vector<std::vector<std::size_t>> multiples(m);
  for (int i = 0; i < m; ++i) {
    for (Element c = 1; c < s.radix_; ++c) {
      multiples[i].push_back(s.index_of(scale(c, params.subspaces[i]).coords));
    }
  }
  std::vector<char> marked(s.size_, 0);
  marked[0] = 1;
  std::size_t remaining = s.size_ - 1;
  for (int t = 1; t <= m && remaining > 0; ++t) {
    for_each_subset(m, t, [&](const std::vector<int>& subset) {
      std::vector<std::size_t> span{0};
      for (int i : subset) {
        std::vector<std::size_t> next = span;
        for (std::size_t x : span) {
          for (std::size_t y : multiples[i]) next.push_back(s.add_index(x, y));
        }
        span = std::move(next);
      }
      for (std::size_t x : span) {
        if (!marked[x]) {
          marked[x] = 1;
          s.weight_[x] = static_cast<std::uint8_t>(t);
          --remaining;
        }
      }
      return remaining == 0;
    });
  }
  if (remaining != 0) throw Error(ErrorCode::InternalError, "projective family does not span");
  s.params_ = std::move(params);
  return s;
}

MetricSpace MetricSpace::phase_rotation(std::uint32_t q, int n) {
  MetricSpace s;
  s.kind_ = MetricKind::PhaseRotation;
  s.init_field_space(field_of_order(q), n);
  s.params_ = PhaseRotationParams{s.field_, n};
  for (std::size_t i = 0; i < s.size_; ++i) {
    const auto z = s.element(i);
    s.weight_[i] = static_cast<std::uint8_t>(phase_rotation_weight(z, *s.field_));
  }
  return s;
}

MetricSpace MetricSpace::block(std::uint32_t q, std::vector<std::vector<int>> partition) {
  MetricSpace s;
  s.kind_ = MetricKind::Block;
  auto field = field_of_order(q);
  BlockParams params = make_block_params(field, std::move(partition));
  s.init_field_space(field, params.n);
  std::vector<std::uint32_t> block_masks;
  for (const auto& b : params.blocks) {
    std::uint32_t mask = 0;
    for (int i : b) mask |= 1u << (i - 1);
    block_masks.push_back(mask);
  }
  for (std::size_t i = 0; i < s.size_; ++i) {
    const std::uint32_t supp = support_mask(s.vector(i));
    int w = 0;
    for (auto bm : block_masks) w += (supp & bm) != 0 ? 1 : 0;
    s.weight_[i] = static_cast<std::uint8_t>(w);
  }
  s.params_ = std::move(params);
  return s;
}

MetricSpace MetricSpace::cyclic_burst(std::uint32_t q, int n, int b) {
  MetricSpace s;
  s.kind_ = MetricKind::CyclicBurst;
  auto field = field_of_order(q);
  CyclicBurstParams params = make_cyclic_burst_params(field, n, b);
  s.init_field_space(field, n);

  // cover[S] = 1 + min over windows A containing the lowest element of S of cover[S \ A].
  std::vector<std::uint32_t> window_masks;
  for (const auto& w : params.windows) {
    std::uint32_t mask = 0;
    for (int i : w) mask |= 1u << (i - 1);
    window_masks.push_back(mask);
  }
  std::vector<std::uint8_t> cover(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    int best = n + 1;
    for (auto wm : window_masks) {
      if (wm & low) best = std::min(best, 1 + cover[mask & ~wm]);
    }
    cover[mask] = static_cast<std::uint8_t>(best);
  }
  for (std::size_t i = 0; i < s.size_; ++i) s.weight_[i] = cover[support_mask(s.vector(i))];
  s.params_ = std::move(params);
  return s;
}

std::string MetricSpace::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  switch (kind_) {
    case MetricKind::CityBlock:
      os << " m=" << radix_ << " n=" << n_;
      break;
    case MetricKind::Varshamov:
      os << " n=" << n_;
      break;
    case MetricKind::PhaseRotation:
      os << " q=" << radix_ << " n=" << n_;
      break;
    case MetricKind::Projective:
      os << " q=" << radix_ << " n=" << n_
         << " subspaces=" << std::get<ProjectiveParams>(params_).subspaces.size();
      break;
    case MetricKind::Block: {
      os << " q=" << radix_ << " P={";
      const auto& blocks = std::get<BlockParams>(params_).blocks;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        os << (i ? ",{" : "{");
        for (std::size_t j = 0; j < blocks[i].size(); ++j) os << (j ? "," : "") << blocks[i][j];
        os << "}";
      }
      os << "}";
      break;
    }
    case MetricKind::CyclicBurst:
      os << " q=" << radix_ << " n=" << n_ << " b=" << std::get<CyclicBurstParams>(params_).b;
      break;
  }
  return os.str();
}

std::vector<std::uint32_t> MetricSpace::element(std::size_t index) const {
  if (index >= size_) throw Error(ErrorCode::InvalidElement, "element index out of range");
  std::vector<std::uint32_t> coords(n_);
  for (int l = n_; l-- > 0;) {
    coords[l] = static_cast<std::uint32_t>(index % radix_);
    index /= radix_;
  }
  return coords;
}

std::size_t MetricSpace::index_of(std::span<const std::uint32_t> coords) const {
  if (static_cast<int>(coords.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "wrong length");
  std::size_t idx = 0;
  for (auto c : coords) {
    if (c >= radix_) throw Error(ErrorCode::InvalidElement, "coordinate out of range");
    idx = idx * radix_ + c;
  }
  return idx;
}

FieldVector MetricSpace::vector(std::size_t index) const {
  if (!field_) throw Error(ErrorCode::NotApplicable, "not a vector space over a finite field");
  return FieldVector{field_, element(index)};
}

std::size_t MetricSpace::sub_index(std::size_t x, std::size_t y) const {
  std::size_t out = 0;
  std::size_t place = 1;
  for (int l = 0; l < n_; ++l) {
    const auto a = static_cast<Element>(x % radix_);
    const auto b = static_cast<Element>(y % radix_);
    out += field_->sub(a, b) * place;
    place *= radix_;
    x /= radix_;
    y /= radix_;
  }
  return out;
}

std::size_t MetricSpace::add_index(std::size_t x, std::size_t y) const {
  std::size_t out = 0;
  std::size_t place = 1;
  for (int l = 0; l < n_; ++l) {
    const auto a = static_cast<Element>(x % radix_);
    const auto b = static_cast<Element>(y % radix_);
    out += field_->add(a, b) * place;
    place *= radix_;
    x /= radix_;
    y /= radix_;
  }
  return out;
}

int MetricSpace::distance(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_) throw Error(ErrorCode::InvalidElement, "element index out of range");
  switch (kind_) {
    case MetricKind::CityBlock: {
      int d = 0;
      for (int l = 0; l < n_; ++l) {
        d += std::abs(static_cast<int>(i % radix_) - static_cast<int>(j % radix_));
        i /= radix_;
        j /= radix_;
      }
      return d;
    }
    case MetricKind::Varshamov: {
      const int n01 = std::popcount(static_cast<std::uint64_t>(~i & j));
      const int n10 = std::popcount(static_cast<std::uint64_t>(i & ~j));
      const int wx = std::popcount(static_cast<std::uint64_t>(i));
      const int wy = std::popcount(static_cast<std::uint64_t>(j));
      const int half = (std::popcount(static_cast<std::uint64_t>(i ^ j)) + std::abs(wx - wy)) / 2;
      if (half != std::max(n01, n10)) {
        throw Error(ErrorCode::InternalError, "Varshamov distance definitions disagree");
      }
      return half;
    }
    default:
      return weight_[sub_index(i, j)];
  }
}

int MetricSpace::weight(std::size_t i) const { return distance(0, i); }

std::vector<std::size_t> MetricSpace::unit_ball() const {
  std::vector<std::size_t> out;
  if (translation_invariant()) {
    for (std::size_t i = 1; i < size_; ++i) {
      if (weight_[i] == 1) out.push_back(i);
    }
    return out;
  }
  return unit_neighbors(0);
}

std::vector<std::size_t> MetricSpace::unit_neighbors(std::size_t i) const {
  if (i >= size_) throw Error(ErrorCode::InvalidElement, "element index out of range");
  std::vector<std::size_t> out;
  switch (kind_) {
    case MetricKind::CityBlock: {
      std::size_t place = 1;
      std::size_t rest = i;
      for (int l = 0; l < n_; ++l) {
        const std::size_t digit = rest % radix_;
        rest /= radix_;
        if (digit > 0) out.push_back(i - place);
        if (digit + 1 < radix_) out.push_back(i + place);
        place *= radix_;
      }
      break;
    }
    case MetricKind::Varshamov: {
      for (int a = 0; a < n_; ++a) {
        const std::size_t ba = std::size_t{1} << a;
        out.push_back(i ^ ba);
        if (!(i & ba)) continue;
        for (int b = 0; b < n_; ++b) {
          const std::size_t bb = std::size_t{1} << b;
          if (!(i & bb)) out.push_back(i ^ ba ^ bb);
        }
      }
      break;
    }
    default: {
      for (std::size_t s = 1; s < size_; ++s) {
        if (weight_[s] == 1) out.push_back(add_index(i, s));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int city_block_distance(std::span<const int> x, std::span<const int> y, int m) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "tuples differ in length");
  int d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= m || y[i] < 0 || y[i] >= m) {
      throw Error(ErrorCode::InvalidElement, "coordinate outside [0, m-1]");
    }
    d += std::abs(x[i] - y[i]);
  }
  return d;
}

int projective_weight(const FieldVector& x, const ProjectiveParams& params) {
  if (x.field != params.field || static_cast<int>(x.size()) != params.n) {
    throw Error(ErrorCode::DimensionMismatch, "vector does not match the projective family");
  }
  if (x.is_zero()) return 0;
  const int m = static_cast<int>(params.subspaces.size());
  for (int t = 1; t <= m; ++t) {
    const bool hit = for_each_subset(m, t, [&](const std::vector<int>& subset) {
      std::vector<FieldVector> gens;
      for (int i : subset) gens.push_back(params.subspaces[i]);
      return span_contains(gens, x);
    });
    if (hit) return t;
  }
  throw Error(ErrorCode::InternalError, "projective family does not span");
}

int phase_rotation_distance(const FieldVector& x, const FieldVector& y) {
  check_same(x, y);
  return phase_rotation_weight((x - y).coords, *x.field);
}

int block_distance(const FieldVector& x, const FieldVector& y, const BlockParams& params) {
  check_same(x, y);
  if (static_cast<int>(x.size()) != params.n) throw Error(ErrorCode::DimensionMismatch, "wrong length");
  const FieldVector z = x - y;
  int w = 0;
  for (const auto& b : params.blocks) {
    w += std::any_of(b.begin(), b.end(), [&](int i) { return z.coords[i - 1] != 0; }) ? 1 : 0;
  }
  return w;
}

int cyclic_burst_distance(const FieldVector& x, const FieldVector& y, const CyclicBurstParams& params) {
  check_same(x, y);
  if (static_cast<int>(x.size()) != params.n) throw Error(ErrorCode::DimensionMismatch, "wrong length");
  const std::uint32_t supp = support_mask(x - y);
  if (supp == 0) return 0;
  const int n = params.n;
  for (int t = 1; t <= n; ++t) {
    const bool hit = for_each_subset(n, t, [&](const std::vector<int>& subset) {
      std::uint32_t covered = 0;
      for (int i : subset) {
        for (int pos : params.windows[i]) covered |= 1u << (pos - 1);
      }
      return (supp & ~covered) == 0;
    });
    if (hit) return t;
  }
  throw Error(ErrorCode::InternalError, "windows do not cover the support");
}

int varshamov_distance(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
  int wx = 0, wy = 0, wd = 0, n01 = 0, n10 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] != 0 && x[i] != 1) || (y[i] != 0 && y[i] != 1)) {
      throw Error(ErrorCode::InvalidElement, "Varshamov vectors must be binary");
    }
    wx += x[i];
    wy += y[i];
    wd += x[i] != y[i] ? 1 : 0;
    n01 += (x[i] == 0 && y[i] == 1) ? 1 : 0;
    n10 += (x[i] == 1 && y[i] == 0) ? 1 : 0;
  }
  const int half = (wd + std::abs(wx - wy)) / 2;
  if (half != std::max(n01, n10)) {
    throw Error(ErrorCode::InternalError, "Varshamov distance definitions disagree");
  }
  return half;
}

}  // namespace scb

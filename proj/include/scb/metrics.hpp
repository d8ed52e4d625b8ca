#pragma once

// The six discrete metric spaces behind one interface. Elements are numbered
// in lexicographic order of their coordinate tuples (first coordinate most
// significant), so index 0 is the all-zeros element. Field-based spaces
// (projective, phase-rotation, block, cyclic burst) are translation
// invariant: d(x, y) = w(x - y), and distances come from a weight table over
// the whole ambient space.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "scb/algebra.hpp"

namespace scb {

enum class MetricKind { CityBlock, Projective, PhaseRotation, Block, CyclicBurst, Varshamov };

std::string_view to_string(MetricKind kind) noexcept;

struct CityBlockParams {
  int m = 3;
  int n = 1;
};

struct ProjectiveParams {
  FieldPtr field;
  int n = 0;
  std::vector<FieldVector> subspaces;  // one spanning vector per subspace
};

struct PhaseRotationParams {
  FieldPtr field;
  int n = 0;
};

struct BlockParams {
  FieldPtr field;
  int n = 0;
  std::vector<std::vector<int>> blocks;  // 1-indexed, sorted by descending size
};

struct CyclicBurstParams {
  FieldPtr field;
  int n = 0;
  int b = 0;
  std::vector<std::vector<int>> windows;  // A_0 .. A_{n-1}, 1-indexed
};

struct VarshamovParams {
  int n = 0;
};

using MetricParams = std::variant<CityBlockParams, ProjectiveParams, PhaseRotationParams,
                                  BlockParams, CyclicBurstParams, VarshamovParams>;

// Validates the family (rank n, pairwise non-proportional, nonzero).
ProjectiveParams make_projective_params(FieldPtr field, int n, std::vector<FieldVector> subspaces);
// {span(e_1), ..., span(e_n), span(1)}.
ProjectiveParams phase_rotation_family(FieldPtr field, int n);
// Sorts blocks by descending size and validates that they partition [n].
BlockParams make_block_params(FieldPtr field, std::vector<std::vector<int>> partition);
CyclicBurstParams make_cyclic_burst_params(FieldPtr field, int n, int b);

class MetricSpace {
 public:
  static constexpr std::size_t kMaxAmbient = std::size_t{1} << 20;

  static MetricSpace city_block(int m, int n);
  static MetricSpace projective(ProjectiveParams params);
  static MetricSpace phase_rotation(std::uint32_t q, int n);
  static MetricSpace block(std::uint32_t q, std::vector<std::vector<int>> partition);
  static MetricSpace cyclic_burst(std::uint32_t q, int n, int b);
  static MetricSpace varshamov(int n);

  MetricKind kind() const noexcept { return kind_; }
  const MetricParams& params() const noexcept { return params_; }
  // e.g. "phase-rotation q=3 n=2"
  std::string describe() const;

  std::size_t ambient_size() const noexcept { return size_; }
  int length() const noexcept { return n_; }
  // Alphabet size per coordinate (m for city block, q for field spaces, 2 for Varshamov).
  std::uint32_t alphabet() const noexcept { return radix_; }
  FieldPtr field() const noexcept { return field_; }
  bool translation_invariant() const noexcept { return !weight_.empty(); }

  std::vector<std::uint32_t> element(std::size_t index) const;
  std::size_t index_of(std::span<const std::uint32_t> coords) const;
  FieldVector vector(std::size_t index) const;  // field spaces only

  int distance(std::size_t i, std::size_t j) const;
  // Weight of element i, i.e. distance(0, i).
  int weight(std::size_t i) const;
  // Indices at distance exactly one from i, ascending.
  std::vector<std::size_t> unit_neighbors(std::size_t i) const;
  // Elements of weight one (the connecting set of the Cayley graph).
  std::vector<std::size_t> unit_ball() const;

  // Index of x - y (x + y for add) in a field space.
  std::size_t sub_index(std::size_t x, std::size_t y) const;
  std::size_t add_index(std::size_t x, std::size_t y) const;

 private:
  MetricSpace() = default;
  void init_field_space(FieldPtr field, int n);

  MetricKind kind_ = MetricKind::CityBlock;
  MetricParams params_;
  FieldPtr field_;
  int n_ = 0;
  std::uint32_t radix_ = 2;
  std::size_t size_ = 0;
  std::vector<std::uint8_t> weight_;
};

// Pointwise definitions, used to cross-check the table-driven distances.
int city_block_distance(std::span<const int> x, std::span<const int> y, int m);
int projective_weight(const FieldVector& x, const ProjectiveParams& params);
int phase_rotation_distance(const FieldVector& x, const FieldVector& y);
int block_distance(const FieldVector& x, const FieldVector& y, const BlockParams& params);
int cyclic_burst_distance(const FieldVector& x, const FieldVector& y, const CyclicBurstParams& params);
// Both the half-sum formula and max{N01, N10}; throws InternalError if they differ.
int varshamov_distance(std::span<const int> x, std::span<const int> y);

}  // namespace scb

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "linegeom/bits.hpp"
#include "linegeom/errors.hpp"

namespace linegeom {

using PointId = int;
using LineId = int;

/// A finite linear space: points 0..point_count-1 and a set of lines such
/// that every line has at least two points and every pair of distinct points
/// lies on exactly one line. Immutable after construction; lines are stored
/// with ascending point lists and sorted lexicographically, so line ids are
/// canonical for a given structure.
class LinearSpace {
public:
  /// Checks the linear-space axioms and canonicalizes the line list.
  /// Throws Error with code ShortLine, DuplicateLine, PairOnNoLine,
  /// PairOnTwoLines or InvalidPoint.
  static LinearSpace validate(int point_count,
                              std::vector<std::vector<PointId>> raw_lines);

  int point_count() const { return point_count_; }
  int line_count() const { return static_cast<int>(lines_.size()); }

  const std::vector<PointId>& line(LineId l) const {
    require_line(l);
    return lines_[static_cast<std::size_t>(l)];
  }
  const std::vector<std::vector<PointId>>& lines() const { return lines_; }
  const Bits& line_bits(LineId l) const {
    require_line(l);
    return line_bits_[static_cast<std::size_t>(l)];
  }

  /// The unique line through two distinct points.
  LineId line_through(PointId p, PointId q) const {
    require_point(p);
    require_point(q);
    if (p == q) raise(ErrorCode::PreconditionViolated, "points must differ");
    return pair_line_[static_cast<std::size_t>(p) *
                          static_cast<std::size_t>(point_count_) +
                      static_cast<std::size_t>(q)];
  }

  /// All lines through a point, ascending.
  const std::vector<LineId>& lines_through(PointId p) const {
    require_point(p);
    return stars_[static_cast<std::size_t>(p)];
  }

  /// Line id for an exact (ascending) point set, if present.
  std::optional<LineId> find_line(const std::vector<PointId>& points) const {
    auto it = line_index_.find(points);
    if (it == line_index_.end()) return std::nullopt;
    return it->second;
  }

  void require_point(PointId p) const {
    if (p < 0 || p >= point_count_)
      raise(ErrorCode::UnknownPoint, "point " + std::to_string(p), {p});
  }
  void require_line(LineId l) const {
    if (l < 0 || l >= line_count())
      raise(ErrorCode::UnknownLine, "line " + std::to_string(l), {l});
  }

  bool operator==(const LinearSpace& o) const {
    return point_count_ == o.point_count_ && lines_ == o.lines_;
  }

private:
  LinearSpace() = default;

  int point_count_ = 0;
  std::vector<std::vector<PointId>> lines_;
  std::vector<Bits> line_bits_;
  std::vector<LineId> pair_line_;  // point_count^2, -1 on the diagonal
  std::vector<std::vector<LineId>> stars_;
  std::map<std::vector<PointId>, LineId> line_index_;
};

/// A closed point set of a parent space (ascending point list).
struct Subspace {
  std::vector<PointId> points;
  bool operator==(const Subspace&) const = default;
};

struct SearchConfig {
  std::uint64_t node_budget = 10'000'000;  // exact-search node cap
  int exchange_max_points = 128;           // exchange test refuses above this
  std::uint64_t max_closed_sets = 1u << 20;
};

/// Closure of a seed set: the fixpoint of adding the full line through every
/// pair of current members.
Bits span_bits(const LinearSpace& space, Bits seed);
Subspace span(const LinearSpace& space, const std::vector<PointId>& set);
Subspace join(const LinearSpace& space, const std::vector<PointId>& s1,
              const std::vector<PointId>& s2);

bool is_closed(const LinearSpace& space, const Bits& set);
bool is_closed(const LinearSpace& space, const std::vector<PointId>& set);

/// One less than the minimum size of a generating set; -1 for the empty
/// space. Exact: greedy when the space satisfies the exchange axiom, else
/// branch-and-bound within cfg.node_budget (SearchBudgetExceeded beyond).
int dimension(const LinearSpace& space, const SearchConfig& cfg = {});

/// The linear space a closed subset carries: its points relabeled 0..k-1
/// and the parent lines that lie inside it.
struct InducedSpace {
  LinearSpace space;
  std::vector<PointId> parent_points;  // local id -> parent id
};
InducedSpace induced_space(const LinearSpace& space, const Subspace& sub);

/// Dimension of the induced structure on a closed set.
int subspace_dimension(const LinearSpace& space, const Subspace& sub,
                       const SearchConfig& cfg = {});

/// All subspaces of induced dimension exactly 2, canonically ordered by
/// ascending point list.
std::vector<Subspace> planes(const LinearSpace& space,
                             const SearchConfig& cfg = {});

struct ExchangeWitness {
  std::vector<PointId> closed_set;
  PointId a = -1;
  PointId b = -1;
};
struct ExchangeResult {
  bool exchange = true;
  std::optional<ExchangeWitness> witness;
};

/// Exhaustive exchange-axiom test: for every closed S and points A, B,
/// B ∈ (S ∨ {A}) \ S implies A ∈ S ∨ {B}. Quantifying over closed sets only
/// is equivalent because both sides depend on S through its closure.
ExchangeResult is_exchange_space(const LinearSpace& space,
                                 const SearchConfig& cfg = {});

struct GenProjWitness {
  std::vector<PointId> plane;
  LineId line1 = -1;
  LineId line2 = -1;
};
struct GenProjResult {
  bool generalized_projective = true;
  std::optional<GenProjWitness> witness;
};

/// True iff every plane, as an induced 2-dimensional space, has pairwise
/// intersecting lines.
GenProjResult is_generalized_projective_space(const LinearSpace& space,
                                              const SearchConfig& cfg = {});

/// For a generalized projective space, nonempty S and X outside its span:
/// S ∨ {X} equals the union of the lines joining X to the points of the
/// span of S. Exposed for property testing.
bool verbind_check(const LinearSpace& space, const std::vector<PointId>& set,
                   PointId x, const SearchConfig& cfg = {});

/// Planes of a 3-dimensional generalized projective space as points, pencils
/// of planes (all planes through a fixed line) as lines.
struct DualSpace {
  LinearSpace space;
  std::vector<std::vector<PointId>> plane_points;  // dual point -> source set
  std::vector<LineId> pencil_axis;                 // dual line -> source line
  std::map<std::vector<PointId>, int> plane_index;

  int plane_id_of(const std::vector<PointId>& pts) const {
    auto it = plane_index.find(pts);
    return it == plane_index.end() ? -1 : it->second;
  }
};

/// Requires dimension 3 (NotThreeDimensional) and generalized projectivity
/// (NotGeneralizedProjective). The result is itself a validated LinearSpace.
DualSpace dual_space(const LinearSpace& space, const SearchConfig& cfg = {});

}  // namespace linegeom

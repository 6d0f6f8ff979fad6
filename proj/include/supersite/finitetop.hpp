// Finite topological spaces with an explicit open-set lattice, continuous
// maps, and topological open embeddings. Point sets are bitmasks; spaces stay
// well under 32 points at desk scale.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace supersite {

using PointSet = std::uint32_t;

inline bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }
inline int set_size(PointSet a) { return __builtin_popcount(a); }

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpaceCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

class FiniteSpace;
using SpaceBasePtr = std::shared_ptr<const FiniteSpace>;

class FiniteSpace {
public:
  FiniteSpace(std::vector<std::string> point_names, std::vector<PointSet> opens);

  static SpaceBasePtr make(std::vector<std::string> point_names, std::vector<PointSet> opens) {
    return std::make_shared<FiniteSpace>(std::move(point_names), std::move(opens));
  }

  int num_points() const { return static_cast<int>(point_names_.size()); }
  PointSet full_set() const {
    return num_points() >= 32 ? ~PointSet(0) : (PointSet(1) << num_points()) - 1;
  }
  const std::vector<std::string>& point_names() const { return point_names_; }
  const std::vector<PointSet>& opens() const { return opens_; }

  std::optional<int> point_index(const std::string& name) const;
  const std::string& point_name(int p) const { return point_names_[static_cast<std::size_t>(p)]; }
  bool is_open(PointSet s) const;
  int open_index(PointSet s) const;  // -1 if not an open

  std::string set_name(PointSet s) const;

  // structural identity (names and lattice)
  bool same_space(const FiniteSpace& o) const {
    return point_names_ == o.point_names_ && opens_ == o.opens_;
  }

private:
  std::vector<std::string> point_names_;
  std::vector<PointSet> opens_;  // sorted ascending as integers, deduplicated
};

// lattice closure report (does not throw; lists violations)
SpaceCheck check_space(const FiniteSpace& x);

// least open containing p
PointSet minimal_open(const FiniteSpace& x, int p);

// subspace topology on s, with points renumbered; also returns old->new map
struct Subspace {
  SpaceBasePtr space;
  std::vector<int> embed;  // new index -> old index
};
Subspace subspace(const SpaceBasePtr& x, PointSet s);

class ContinuousMap {
public:
  ContinuousMap() = default;
  ContinuousMap(SpaceBasePtr src, SpaceBasePtr dst, std::vector<int> point_map);

  static ContinuousMap identity(const SpaceBasePtr& x);
  static ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

  const SpaceBasePtr& source() const { return src_; }
  const SpaceBasePtr& target() const { return dst_; }
  int apply(int p) const { return map_[static_cast<std::size_t>(p)]; }
  PointSet image() const;
  PointSet image_of(PointSet s) const;
  PointSet preimage(PointSet s) const;

  bool same_map(const ContinuousMap& o) const {
    return src_->same_space(*o.src_) && dst_->same_space(*o.dst_) && map_ == o.map_;
  }

private:
  SpaceBasePtr src_, dst_;
  std::vector<int> map_;
};

struct MapCheck {
  bool ok = true;
  std::string error;
};

MapCheck check_continuous(const ContinuousMap& f);

struct OpenEmbeddingTop {
  bool yes = false;
  PointSet image = 0;
  std::string reason;
};

OpenEmbeddingTop is_open_embedding_top(const ContinuousMap& f);

}  // namespace supersite

#include "supersite/finitetop.hpp"

#include <algorithm>

namespace supersite {

FiniteSpace::FiniteSpace(std::vector<std::string> point_names, std::vector<PointSet> opens)
    : point_names_(std::move(point_names)), opens_(std::move(opens)) {
  if (point_names_.size() > 31) throw TopologyError("spaces are limited to 31 points");
  for (PointSet s : opens_)
    if (!subset_of(s, full_set())) throw TopologyError("open set mentions unknown points");
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
}

std::optional<int> FiniteSpace::point_index(const std::string& name) const {
  for (std::size_t i = 0; i < point_names_.size(); ++i)
    if (point_names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool FiniteSpace::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

int FiniteSpace::open_index(PointSet s) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), s);
  if (it == opens_.end() || *it != s) return -1;
  return static_cast<int>(it - opens_.begin());
}

std::string FiniteSpace::set_name(PointSet s) const {
  std::string out = "{";
  bool first = true;
  for (int p = 0; p < num_points(); ++p) {
    if (!(s >> p & 1)) continue;
    if (!first) out += ",";
    first = false;
    out += point_names_[static_cast<std::size_t>(p)];
  }
  return out + "}";
}

SpaceCheck check_space(const FiniteSpace& x) {
  SpaceCheck rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  if (!x.is_open(0) || !x.is_open(x.full_set()))
    fail("MissingEmptyOrFull: opens must contain {} and the full point set");
  for (PointSet a : x.opens()) {
    for (PointSet b : x.opens()) {
      if (!x.is_open(a | b))
        fail("NotClosedUnderUnion: " + x.set_name(a) + " | " + x.set_name(b) + " = " +
             x.set_name(a | b));
      if (!x.is_open(a & b))
        fail("NotClosedUnderIntersection: " + x.set_name(a) + " & " + x.set_name(b) + " = " +
             x.set_name(a & b));
    }
  }
  return rep;
}

PointSet minimal_open(const FiniteSpace& x, int p) {
  if (p < 0 || p >= x.num_points()) throw TopologyError("UnknownPoint");
  PointSet acc = x.full_set();
  for (PointSet s : x.opens())
    if (s >> p & 1) acc &= s;
  return acc;
}

Subspace subspace(const SpaceBasePtr& x, PointSet s) {
  if (!subset_of(s, x->full_set())) throw TopologyError("subspace carrier not inside the space");
  std::vector<int> embed;
  std::vector<int> renum(static_cast<std::size_t>(x->num_points()), -1);
  std::vector<std::string> names;
  for (int p = 0; p < x->num_points(); ++p) {
    if (!(s >> p & 1)) continue;
    renum[static_cast<std::size_t>(p)] = static_cast<int>(embed.size());
    embed.push_back(p);
    names.push_back(x->point_name(p));
  }
  std::vector<PointSet> opens;
  for (PointSet u : x->opens()) {
    PointSet v = 0;
    PointSet cut = u & s;
    for (int p = 0; p < x->num_points(); ++p)
      if (cut >> p & 1) v |= PointSet(1) << renum[static_cast<std::size_t>(p)];
    opens.push_back(v);
  }
  return {FiniteSpace::make(std::move(names), std::move(opens)), std::move(embed)};
}

ContinuousMap::ContinuousMap(SpaceBasePtr src, SpaceBasePtr dst, std::vector<int> point_map)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(point_map)) {
  if (static_cast<int>(map_.size()) != src_->num_points())
    throw TopologyError("point assignment does not cover the source");
  for (int q : map_)
    if (q < 0 || q >= dst_->num_points()) throw TopologyError("point assignment leaves the target");
}

ContinuousMap ContinuousMap::identity(const SpaceBasePtr& x) {
  std::vector<int> id(static_cast<std::size_t>(x->num_points()));
  for (int p = 0; p < x->num_points(); ++p) id[static_cast<std::size_t>(p)] = p;
  return ContinuousMap(x, x, std::move(id));
}

ContinuousMap ContinuousMap::compose(const ContinuousMap& g, const ContinuousMap& f) {
  if (!f.target()->same_space(*g.source()))
    throw TopologyError("composition source/target mismatch");
  std::vector<int> m(static_cast<std::size_t>(f.source()->num_points()));
  for (int p = 0; p < f.source()->num_points(); ++p)
    m[static_cast<std::size_t>(p)] = g.apply(f.apply(p));
  return ContinuousMap(f.source(), g.target(), std::move(m));
}

PointSet ContinuousMap::image() const { return image_of(src_->full_set()); }

PointSet ContinuousMap::image_of(PointSet s) const {
  PointSet out = 0;
  for (int p = 0; p < src_->num_points(); ++p)
    if (s >> p & 1) out |= PointSet(1) << apply(p);
  return out;
}

PointSet ContinuousMap::preimage(PointSet s) const {
  PointSet out = 0;
  for (int p = 0; p < src_->num_points(); ++p)
    if (s >> apply(p) & 1) out |= PointSet(1) << p;
  return out;
}

MapCheck check_continuous(const ContinuousMap& f) {
  for (PointSet v : f.target()->opens()) {
    if (!f.source()->is_open(f.preimage(v)))
      return {false, "PreimageNotOpen: preimage of " + f.target()->set_name(v) + " is " +
                         f.source()->set_name(f.preimage(v))};
  }
  return {};
}

OpenEmbeddingTop is_open_embedding_top(const ContinuousMap& f) {
  OpenEmbeddingTop out;
  MapCheck cont = check_continuous(f);
  if (!cont.ok) {
    out.reason = cont.error;
    return out;
  }
  PointSet img = f.image();
  if (set_size(img) != f.source()->num_points()) {
    out.reason = "not injective";
    return out;
  }
  if (!f.target()->is_open(img)) {
    out.reason = "image " + f.target()->set_name(img) + " is not open";
    return out;
  }
  // homeomorphism onto the image: compare image opens with subspace opens
  std::vector<PointSet> image_opens;
  for (PointSet u : f.source()->opens()) image_opens.push_back(f.image_of(u));
  std::sort(image_opens.begin(), image_opens.end());
  image_opens.erase(std::unique(image_opens.begin(), image_opens.end()), image_opens.end());
  std::vector<PointSet> sub_opens;
  for (PointSet v : f.target()->opens()) sub_opens.push_back(v & img);
  std::sort(sub_opens.begin(), sub_opens.end());
  sub_opens.erase(std::unique(sub_opens.begin(), sub_opens.end()), sub_opens.end());
  if (image_opens != sub_opens) {
    out.reason = "not a homeomorphism onto the image with its subspace topology";
    return out;
  }
  out.yes = true;
  out.image = img;
  return out;
}

}  // namespace supersite

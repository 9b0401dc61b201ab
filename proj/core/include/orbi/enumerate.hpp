#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "orbi/signature.hpp"

namespace orbi {

struct IntRange {
  int min = 0;
  int max = 0;
};

enum class OrientabilityFilter { both, orientable_only, non_orientable_only };

/// Box of signatures to enumerate. Ranges are inclusive. Non-orientable
/// genus starts at 1 regardless of genus.min, and corner counts above zero
/// only pair with at least one mirror circle.
struct EnumerationBounds {
  IntRange genus{0, 0};
  IntRange mirror_circles{0, 0};
  IntRange cone_points{0, 3};
  IntRange corner_points{0, 0};
  int max_order = 12;
  OrientabilityFilter orientability = OrientabilityFilter::both;
};

/// Throws InvalidInput for negative or inverted ranges.
void check_bounds(const EnumerationBounds& bounds);

/// Parses "key=value,..." with keys genus, mirrors, cones, corners (value
/// "N" or "A..B"), order (maximum order) and orient (o, n or both). Missing
/// keys keep the EnumerationBounds defaults.
EnumerationBounds parse_bounds(std::string_view text);

/// Deterministic stream of every valid signature inside the bounds, each
/// exactly once, in increasing OrbifoldSignature order: orientable first,
/// then genus, mirror count, cone count, corner count, cone orders and
/// corner orders lexicographically.
class SignatureStream {
 public:
  explicit SignatureStream(const EnumerationBounds& bounds);

  /// Next signature, or nullptr once exhausted. The pointee is reused and
  /// stays valid only until the following call.
  const OrbifoldSignature* next();

 private:
  struct Prefix {
    bool orientable;
    int genus;
    int mirrors;
    int cones;
    int corners;
  };

  void load_prefix();
  bool advance_multiset(std::vector<int>& orders) const;

  std::vector<Prefix> prefixes_;
  std::size_t prefix_index_ = 0;
  int max_order_;
  bool started_ = false;
  OrbifoldSignature current_;
};

void for_each_signature(const EnumerationBounds& bounds,
                        const std::function<void(const OrbifoldSignature&)>& visit);
std::vector<OrbifoldSignature> enumerate_signatures(const EnumerationBounds& bounds);

/// Hyperbolic signatures in the bounds whose PGL(n) Hitchin component is a
/// point, in stream order.
std::vector<OrbifoldSignature> enumerate_rigid(int n, const EnumerationBounds& bounds);

}  // namespace orbi

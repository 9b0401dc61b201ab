#include "orbi/enumerate.hpp"

#include <charconv>
#include <string>

#include "orbi/error.hpp"
#include "orbi/hitchin.hpp"

namespace orbi {

void check_bounds(const EnumerationBounds& b) {
  auto check = [](const IntRange& r, const char* what) {
    if (r.min < 0 || r.max < r.min) {
      throw InvalidInput(std::string("degenerate bounds: ") + what + " range " +
                         std::to_string(r.min) + ".." + std::to_string(r.max));
    }
  };
  check(b.genus, "genus");
  check(b.mirror_circles, "mirrors");
  check(b.cone_points, "cones");
  check(b.corner_points, "corners");
  if (b.max_order < 0) throw InvalidInput("degenerate bounds: negative max order");
}

namespace {

int parse_int(std::string_view text, std::string_view key) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidInput("bounds: '" + std::string(key) + "' needs an integer, got '" +
                       std::string(text) + "'");
  }
  return v;
}

IntRange parse_range(std::string_view text, std::string_view key) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, key);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), key), parse_int(text.substr(dots + 2), key)};
}

}  // namespace

EnumerationBounds parse_bounds(std::string_view text) {
  EnumerationBounds b;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInput("bounds: expected key=value, got '" + std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "genus") {
      b.genus = parse_range(value, key);
    } else if (key == "mirrors") {
      b.mirror_circles = parse_range(value, key);
    } else if (key == "cones") {
      b.cone_points = parse_range(value, key);
    } else if (key == "corners") {
      b.corner_points = parse_range(value, key);
    } else if (key == "order") {
      b.max_order = parse_int(value, key);
    } else if (key == "orient") {
      if (value == "o") {
        b.orientability = OrientabilityFilter::orientable_only;
      } else if (value == "n") {
        b.orientability = OrientabilityFilter::non_orientable_only;
      } else if (value == "both") {
        b.orientability = OrientabilityFilter::both;
      } else {
        throw InvalidInput("bounds: orient must be o, n or both");
      }
    } else {
      throw InvalidInput("bounds: unknown key '" + std::string(key) + "'");
    }
  }
  check_bounds(b);
  return b;
}

SignatureStream::SignatureStream(const EnumerationBounds& b)
    : max_order_(b.max_order) {
  check_bounds(b);
  for (bool orientable : {true, false}) {
    if (orientable && b.orientability == OrientabilityFilter::non_orientable_only) continue;
    if (!orientable && b.orientability == OrientabilityFilter::orientable_only) continue;
    const int genus_min = orientable ? b.genus.min : std::max(1, b.genus.min);
    for (int g = genus_min; g <= b.genus.max; ++g)
      for (int mirrors = b.mirror_circles.min; mirrors <= b.mirror_circles.max; ++mirrors)
        for (int k = b.cone_points.min; k <= b.cone_points.max; ++k)
          for (int l = b.corner_points.min; l <= b.corner_points.max; ++l) {
            if (l > 0 && mirrors == 0) continue;
            if ((k > 0 || l > 0) && max_order_ < 2) continue;
            prefixes_.push_back({orientable, g, mirrors, k, l});
          }
  }
}

void SignatureStream::load_prefix() {
  const Prefix& p = prefixes_[prefix_index_];
  SignatureData& d = current_.data_;
  d.orientable = p.orientable;
  d.genus = p.genus;
  d.mirror_circles = p.mirrors;
  d.cone_orders.assign(static_cast<std::size_t>(p.cones), 2);
  d.corner_orders.assign(static_cast<std::size_t>(p.corners), 2);
}

bool SignatureStream::advance_multiset(std::vector<int>& orders) const {
  // Next non-decreasing sequence over [2, max_order] in lexicographic order.
  for (std::size_t i = orders.size(); i-- > 0;) {
    if (orders[i] < max_order_) {
      const int v = orders[i] + 1;
      for (std::size_t j = i; j < orders.size(); ++j) orders[j] = v;
      return true;
    }
  }
  return false;
}

const OrbifoldSignature* SignatureStream::next() {
  if (prefix_index_ >= prefixes_.size()) return nullptr;
  if (!started_) {
    started_ = true;
    load_prefix();
    return &current_;
  }
  SignatureData& d = current_.data_;
  if (advance_multiset(d.corner_orders)) return &current_;
  if (advance_multiset(d.cone_orders)) {
    d.corner_orders.assign(d.corner_orders.size(), 2);
    return &current_;
  }
  if (++prefix_index_ >= prefixes_.size()) return nullptr;
  load_prefix();
  return &current_;
}

void for_each_signature(const EnumerationBounds& bounds,
                        const std::function<void(const OrbifoldSignature&)>& visit) {
  SignatureStream stream(bounds);
  while (const OrbifoldSignature* sig = stream.next()) visit(*sig);
}

std::vector<OrbifoldSignature> enumerate_signatures(const EnumerationBounds& bounds) {
  std::vector<OrbifoldSignature> out;
  for_each_signature(bounds, [&](const OrbifoldSignature& s) { out.push_back(s); });
  return out;
}

std::vector<OrbifoldSignature> enumerate_rigid(int n, const EnumerationBounds& bounds) {
  if (n < 2) throw DomainError("rigidity rank needs n >= 2");
  std::vector<OrbifoldSignature> out;
  for_each_signature(bounds, [&](const OrbifoldSignature& s) {
    if (is_hyperbolic(s) && hitchin_dimension_pgl(s, n) == 0) out.push_back(s);
  });
  return out;
}

}  // namespace orbi

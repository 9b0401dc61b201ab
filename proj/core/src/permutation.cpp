#include "orbi/permutation.hpp"

#include <numeric>
#include <string>

#include "orbi/error.hpp"

namespace orbi {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidInput("not a permutation of " +
                         std::to_string(images_.size()) + " points");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Permutation Permutation::from_one_based(std::span<const std::int64_t> images) {
  std::vector<std::uint32_t> zero_based;
  zero_based.reserve(images.size());
  for (std::int64_t v : images) {
    if (v < 1 || v > static_cast<std::int64_t>(images.size())) {
      throw InvalidInput("permutation image " + std::to_string(v) +
                         " outside 1.." + std::to_string(images.size()));
    }
    zero_based.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return Permutation(std::move(zero_based));
}

std::vector<std::int64_t> Permutation::one_based() const {
  std::vector<std::int64_t> out(images_.begin(), images_.end());
  for (auto& v : out) ++v;
  return out;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) {
    throw InvalidInput("composing permutations of different degrees");
  }
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[i] = next.images_[images_[i]];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return out;
}

Permutation Permutation::pow(std::uint64_t exponent) const {
  Permutation result = identity(degree());
  Permutation base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result.then(base);
    base = base.then(base);
    exponent >>= 1u;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_lengths()) result = std::lcm(result, std::uint64_t{len});
  return result;
}

bool is_transitive(std::size_t degree, std::span<const Permutation> generators) {
  if (degree == 0) return false;
  std::vector<bool> reached(degree, false);
  std::vector<std::uint32_t> frontier{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const std::uint32_t point = frontier.back();
    frontier.pop_back();
    for (const auto& g : generators) {
      // Orbits of a finite group are closed under the generators alone.
      const std::uint32_t next = g(point);
      if (!reached[next]) {
        reached[next] = true;
        ++count;
        frontier.push_back(next);
      }
    }
  }
  return count == degree;
}

}  // namespace orbi

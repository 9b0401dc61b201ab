#pragma once

#include <string>
#include <string_view>

#include "orbi/covers.hpp"

namespace orbi {

/// Reads {"degree": N, "a": [[...], ...], "b": [[...], ...], "c": [[...], ...]}
/// with permutations in one-based one-line notation. "a" and "b" may be
/// omitted for genus 0. Throws InvalidInput on malformed documents.
PermutationAction parse_action_json(std::string_view text);

std::string action_to_json(const PermutationAction& action);

}  // namespace orbi

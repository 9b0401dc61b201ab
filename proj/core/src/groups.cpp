#include "orbi/groups.hpp"

#include "orbi/error.hpp"

namespace orbi {

namespace {

void require_orders(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2) {
    throw InvalidInput("triangle group orders must be >= 2");
  }
}

Word power(const Word& base, int exponent) {
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(exponent));
  for (int i = 0; i < exponent; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word letters(std::initializer_list<int> gens) {
  Word out;
  for (int g : gens) out.push_back({g, false});
  return out;
}

// Letters of an involutive word as a string, one char per generator.
std::string as_key(const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (const auto& l : word) out.push_back(static_cast<char>('a' + l.generator));
  return out;
}

bool is_rotation_of(const std::string& candidate, const std::string& relator) {
  if (candidate.size() != relator.size()) return false;
  const std::string doubled = relator + relator;
  if (doubled.find(candidate) != std::string::npos) return true;
  const std::string reversed(candidate.rbegin(), candidate.rend());
  return doubled.find(reversed) != std::string::npos;
}

}  // namespace

Word free_reduce(const Word& word) {
  Word out;
  out.reserve(word.size());
  for (const auto& l : word) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().inverse != l.inverse) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word involutive_reduce(const Word& word) {
  Word out;
  out.reserve(word.size());
  for (const auto& l : word) {
    if (!out.empty() && out.back().generator == l.generator) {
      out.pop_back();
    } else {
      out.push_back({l.generator, false});
    }
  }
  return out;
}

Word inverse(const Word& word, bool involutive) {
  Word out(word.rbegin(), word.rend());
  if (!involutive) {
    for (auto& l : out) l.inverse = !l.inverse;
  }
  return out;
}

Presentation presentation_fuchsian(const OrbifoldSignature& sig) {
  if (!sig.is_orientable_closed()) {
    throw DomainError("presentation_fuchsian needs an orientable signature "
                      "without mirrors, got " + to_string(sig));
  }
  Presentation out;
  const int g = sig.genus();
  for (int i = 1; i <= g; ++i) {
    out.generators.push_back("a" + std::to_string(i));
    out.generators.push_back("b" + std::to_string(i));
  }
  for (int j = 1; j <= sig.cone_count(); ++j) {
    out.generators.push_back("c" + std::to_string(j));
  }

  Word long_relator;
  for (int i = 0; i < g; ++i) {
    const int a = 2 * i;
    const int b = 2 * i + 1;
    long_relator.insert(long_relator.end(),
                        {{a, false}, {b, false}, {a, true}, {b, true}});
  }
  for (int j = 0; j < sig.cone_count(); ++j) {
    long_relator.push_back({2 * g + j, false});
  }
  if (!long_relator.empty()) out.relators.push_back(std::move(long_relator));
  for (int j = 0; j < sig.cone_count(); ++j) {
    out.relators.push_back(
        power(letters({2 * g + j}), sig.cone_orders()[static_cast<std::size_t>(j)]));
  }
  return out;
}

Presentation presentation_von_dyck(int p, int q, int r) {
  require_orders(p, q, r);
  Presentation out;
  out.generators = {"a", "b", "c"};
  out.relators = {power(letters({0}), p), power(letters({1}), q),
                  power(letters({2}), r), letters({0, 1, 2})};
  return out;
}

Presentation presentation_coxeter_triangle(int p, int q, int r) {
  require_orders(p, q, r);
  Presentation out;
  out.generators = {"x", "y", "z"};
  out.involutive = true;
  out.relators = {letters({0, 0}),
                  letters({1, 1}),
                  letters({2, 2}),
                  power(letters({0, 1}), p),
                  power(letters({1, 2}), q),
                  power(letters({2, 0}), r)};
  return out;
}

FlatteningImages standard_flattening() {
  return {letters({0, 1}), letters({1, 2}), letters({2, 0})};
}

bool flattening_morphism_check(int p, int q, int r) {
  return flattening_morphism_check(p, q, r, standard_flattening());
}

bool flattening_morphism_check(int p, int q, int r,
                               const FlatteningImages& images) {
  const Presentation source = presentation_von_dyck(p, q, r);
  const Presentation target = presentation_coxeter_triangle(p, q, r);
  const Word* image_of[3] = {&images.a, &images.b, &images.c};

  std::vector<std::string> targets;
  for (const auto& rel : target.relators) {
    Word reduced = involutive_reduce(rel);
    if (!reduced.empty()) targets.push_back(as_key(reduced));
  }

  for (const auto& rel : source.relators) {
    Word substituted;
    for (const auto& l : rel) {
      const Word& img = *image_of[l.generator];
      const Word piece = l.inverse ? inverse(img, true) : img;
      substituted.insert(substituted.end(), piece.begin(), piece.end());
    }
    const Word reduced = involutive_reduce(substituted);
    if (reduced.empty()) continue;
    const std::string key = as_key(reduced);
    bool matched = false;
    for (const auto& t : targets) {
      if (is_rotation_of(key, t)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Word parse_coxeter_word(std::string_view text) {
  Word out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < 'x' || ch > 'z') {
      throw InvalidInput("unknown Coxeter generator '" + std::string(1, ch) +
                         "' at offset " + std::to_string(i) +
                         " (expected x, y or z)");
    }
    out.push_back({ch - 'x', false});
  }
  return out;
}

int parity_quotient(const Word& word) {
  return involutive_reduce(word).size() % 2 == 0 ? 1 : -1;
}

int parity_quotient(std::string_view text) {
  return parity_quotient(parse_coxeter_word(text));
}

namespace {

std::string letter_text(const Presentation& pres, const Letter& l, int exponent) {
  std::string out = pres.generators.at(static_cast<std::size_t>(l.generator));
  const int signed_exp = l.inverse && !pres.involutive ? -exponent : exponent;
  if (signed_exp != 1) out += "^" + std::to_string(signed_exp);
  return out;
}

// Plain rendering: runs of the same letter collapse to powers, and
// a b a^-1 b^-1 becomes [a,b].
std::string plain_word(const Presentation& pres, const Word& word) {
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    if (!pres.involutive && i + 3 < word.size()) {
      const Letter& a = word[i];
      const Letter& b = word[i + 1];
      if (!a.inverse && !b.inverse && a.generator != b.generator &&
          word[i + 2] == Letter{a.generator, true} &&
          word[i + 3] == Letter{b.generator, true}) {
        out += "[" + pres.generators.at(static_cast<std::size_t>(a.generator)) +
               "," + pres.generators.at(static_cast<std::size_t>(b.generator)) + "]";
        i += 4;
        continue;
      }
    }
    std::size_t run = 1;
    while (i + run < word.size() && word[i + run] == word[i]) ++run;
    out += letter_text(pres, word[i], static_cast<int>(run));
    i += run;
  }
  return out;
}

}  // namespace

std::string format_word(const Presentation& pres, const Word& word) {
  if (word.empty()) return "1";
  // (u)^n for a word that is n > 1 copies of a block of two or more letters.
  for (std::size_t period = 2; period <= word.size() / 2; ++period) {
    if (word.size() % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < word.size() && periodic; ++i) {
      periodic = word[i] == word[i - period];
    }
    if (periodic) {
      const Word block(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(period));
      bool single_letter = true;
      for (const auto& l : block) single_letter = single_letter && l == block.front();
      if (single_letter) break;
      return "(" + plain_word(pres, block) + ")^" +
             std::to_string(word.size() / period);
    }
  }
  return plain_word(pres, word);
}

std::string format_presentation(const Presentation& pres) {
  std::string out = "<";
  for (std::size_t i = 0; i < pres.generators.size(); ++i) {
    if (i > 0) out += ",";
    out += pres.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_word(pres, pres.relators[i]);
  }
  out += ">";
  return out;
}

}  // namespace orbi

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbi/signature.hpp"

namespace orbi {

struct Letter {
  int generator = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Finite presentation. When `involutive` is set every generator is its own
/// inverse (the Coxeter alphabet) and letters never carry the inverse flag.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  bool involutive = false;
};

/// Cancels adjacent g g^-1 pairs.
Word free_reduce(const Word& word);
/// Free reduction where every generator is an involution: drops inverse
/// flags, then cancels adjacent equal letters.
Word involutive_reduce(const Word& word);
/// Inverse word; for involutive alphabets this is the reversal.
Word inverse(const Word& word, bool involutive);

/// < a_1, b_1, ..., a_g, b_g, c_1, ..., c_k |
///   [a_1,b_1] ... [a_g,b_g] c_1 ... c_k, c_1^{m_1}, ..., c_k^{m_k} >
/// for an orientable signature without mirrors. The long relator is omitted
/// when it would be empty (g = k = 0).
Presentation presentation_fuchsian(const OrbifoldSignature& sig);

/// Von Dyck group < a, b, c | a^p, b^q, c^r, abc > with the orders in the
/// given (not sorted) positions.
Presentation presentation_von_dyck(int p, int q, int r);

/// < x, y, z | x^2, y^2, z^2, (xy)^p, (yz)^q, (zx)^r >.
Presentation presentation_coxeter_triangle(int p, int q, int r);

/// Images of a, b, c in the Coxeter alphabet {x = 0, y = 1, z = 2}.
struct FlatteningImages {
  Word a;
  Word b;
  Word c;
};

/// a -> xy, b -> yz, c -> zx.
FlatteningImages standard_flattening();

/// Substitutes the images into each Von Dyck relator, reduces with
/// x^2 = y^2 = z^2 = 1, and accepts when every image is empty or a cyclic
/// rotation (either direction) of a Coxeter relator.
bool flattening_morphism_check(int p, int q, int r);
bool flattening_morphism_check(int p, int q, int r, const FlatteningImages& images);

/// Word over the letters 'x', 'y', 'z'. Throws InvalidInput on anything else.
Word parse_coxeter_word(std::string_view text);

/// (-1)^(length of the involutively reduced word).
int parity_quotient(const Word& word);
int parity_quotient(std::string_view text);

/// Word text with `^` powers, `(uv)^n` for periodic words and `[a,b]` for
/// commutators.
std::string format_word(const Presentation& presentation, const Word& word);
/// "<g1,g2,... | r1, r2, ...>"
std::string format_presentation(const Presentation& presentation);

}  // namespace orbi

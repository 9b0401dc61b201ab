#include <charconv>
#include <optional>

#include "orbi/error.hpp"
#include "orbi/signature.hpp"

namespace orbi {

namespace {

void append_list(std::string& out, std::span<const int> orders) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(orders[i]);
  }
}

class SignatureParser {
 public:
  explicit SignatureParser(std::string_view text) : text_(text) {}

  OrbifoldSignature parse() {
    SignatureData raw;
    if (at_end() || (peek() != 'o' && peek() != 'n')) {
      fail("expected orientability flag", {"o", "n"});
    }
    raw.orientable = text_[pos_++] == 'o';

    const std::size_t genus_at = pos_;
    raw.genus = number("<genus>");
    if (!raw.orientable && raw.genus < 1) {
      throw ParseError("non-orientable surface needs at least one cross-cap at offset " +
                           std::to_string(genus_at),
                       genus_at, {"<genus >= 1>"});
    }

    bool saw_mirrors = false;
    if (!at_end() && peek() == 'b') {
      ++pos_;
      saw_mirrors = true;
      raw.mirror_circles = number("<mirror count>");
    }
    if (lookahead("c:")) {
      pos_ += 2;
      raw.cone_orders = order_list();
    }
    std::optional<std::size_t> corners_at;
    if (lookahead("d:")) {
      corners_at = pos_;
      pos_ += 2;
      raw.corner_orders = order_list();
    }
    if (!at_end()) {
      std::vector<std::string> expected;
      if (!corners_at) {
        if (raw.cone_orders.empty()) {
          if (!saw_mirrors) expected.push_back("b<B>");
          expected.push_back("c:");
        }
        expected.push_back("d:");
      }
      expected.push_back("<end>");
      fail("unexpected character '" + std::string(1, peek()) + "'",
           std::move(expected));
    }
    if (corners_at && raw.mirror_circles == 0) {
      throw ParseError("corner reflectors require a mirror boundary circle (b<B>) at offset " +
                           std::to_string(*corners_at),
                       *corners_at, {"b<B>"});
    }
    return validate_signature(std::move(raw));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool lookahead(std::string_view token) const {
    return text_.substr(pos_, token.size()) == token;
  }

  [[noreturn]] void fail(std::string message,
                         std::vector<std::string> expected) const {
    std::string full = std::move(message) + " at offset " +
                       std::to_string(pos_) + " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) full += " | ";
      full += expected[i];
    }
    full += ")";
    throw ParseError(std::move(full), pos_, std::move(expected));
  }

  int number(const char* what) {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (at_end() || peek() < '0' || peek() > '9') {
      fail(std::string("expected ") + what, {what});
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail(std::string(what) + " out of range", {what});
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::vector<int> order_list() {
    std::vector<int> orders;
    for (;;) {
      const std::size_t at = pos_;
      int m = number("<order>");
      if (m < 2) {
        throw ParseError("order " + std::to_string(m) + " < 2 at offset " +
                             std::to_string(at),
                         at, {"<order >= 2>"});
      }
      orders.push_back(m);
      if (at_end() || peek() != ',') break;
      ++pos_;
    }
    return orders;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const OrbifoldSignature& sig) {
  std::string out;
  out += sig.orientable() ? 'o' : 'n';
  out += std::to_string(sig.genus());
  if (sig.mirror_circles() > 0) {
    out += 'b';
    out += std::to_string(sig.mirror_circles());
  }
  if (sig.cone_count() > 0) {
    out += "c:";
    append_list(out, sig.cone_orders());
  }
  if (sig.corner_count() > 0) {
    out += "d:";
    append_list(out, sig.corner_orders());
  }
  return out;
}

OrbifoldSignature parse_signature(std::string_view text) {
  return SignatureParser(text).parse();
}

}  // namespace orbi

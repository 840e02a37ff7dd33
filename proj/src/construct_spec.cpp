#include "polydig/construct_spec.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "polydig/error.hpp"

namespace polydig {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Digraph parse() {
    Digraph g = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("construct spec at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool peek_digit_after_comma() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ',') return false;
    std::size_t p = pos_ + 1;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]));
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) fail("expected a constructor name");
    return std::string(s_.substr(b, pos_ - b));
  }

  int number() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a non-negative integer");
    if (pos_ - b > 6) fail("integer too large");
    return std::stoi(std::string(s_.substr(b, pos_ - b)));
  }

  // Runs a constructor, turning precondition failures into input errors.
  template <typename F>
  Digraph build(F&& f) {
    try {
      Digraph g = f();
      if (g.order() > Digraph::kMaxOrder) fail("result exceeds the maximum order");
      return g;
    } catch (const std::logic_error& e) {
      fail(e.what());
    }
  }

  Digraph expr() {
    const std::string name = word();
    if (peek(':')) {
      ++pos_;
      const int n = number();
      if (n > Digraph::kMaxOrder * Digraph::kMaxOrder) fail("order too large");
      if (name == "empty") return build([&] { return empty_digraph(n); });
      if (name == "complete") return build([&] { return complete_digraph(n); });
      if (name == "dicycle") return build([&] { return dicycle(n); });
      if (name == "tournament") return build([&] { return regular_tournament(n); });
      if (name == "thm39") return build([&] { return square_order_nonjoin(n); });
      if (name == "star") {
        expect(',');
        const int k = number();
        return build([&] { return imploding_star(n, k); });
      }
      if (name == "thm35") {
        int variant = 0;
        if (peek_digit_after_comma()) {
          expect(',');
          variant = number();
          if (variant > 1) fail("thm35 variant must be 0 or 1");
        }
        return build([&] {
          auto fam = split_cycle_family(n);
          return variant == 0 ? fam.balanced_split : fam.normal_restored;
        });
      }
      fail("unknown constructor '" + name + "'");
    }
    expect('(');
    if (name == "djoin" || name == "bjoin" || name == "union") {
      Digraph a = expr();
      expect(',');
      Digraph b = expr();
      expect(')');
      return build([&] {
        if (name == "djoin") return directed_join(a, b);
        if (name == "bjoin") return bidirectional_join(a, b);
        return disjoint_union(a, b);
      });
    }
    if (name == "inflate") {
      Digraph a = expr();
      expect(',');
      const int k = number();
      expect(')');
      if (k > Digraph::kMaxOrder) fail("inflation factor too large");
      return build([&] { return kronecker_inflate(a, k); });
    }
    if (name == "complement") {
      Digraph a = expr();
      expect(')');
      return complement(a);
    }
    if (name == "twin") {
      Digraph a = expr();
      std::vector<int> vs;
      while (peek(',')) {
        ++pos_;
        vs.push_back(number());
      }
      expect(')');
      return build([&] { return twin_split(a, vs); });
    }
    fail("unknown operator '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Digraph parse_construct_spec(std::string_view spec) { return Parser(spec).parse(); }

}  // namespace polydig

#include "barth/dsl.hpp"

#include "barth/errors.hpp"

#include <cctype>
#include <limits>

#include <fmt/format.h>

namespace barth {

bool operator==(const SumNode& a, const SumNode& b) { return a.terms == b.terms; }

bool operator==(const TwistNode& a, const TwistNode& b) {
  return a.shift == b.shift && a.base == b.base;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  BundleExpr parse() {
    BundleExpr e = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError(fmt::format("unexpected '{}'", src_[pos_]), pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= src_.size())
        throw ParseError(fmt::format("expected '{}' but input ended", c), pos_);
      throw ParseError(fmt::format("expected '{}' but found '{}'", c, src_[pos_]), pos_);
    }
    ++pos_;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-')
      ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == digits)
      throw ParseError("expected an integer", digits);
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  long small_integer() {
    const std::size_t start = (skip_ws(), pos_);
    const Integer z = integer();
    if (!z.fits_slong_p())
      throw ParseError("integer out of range", start);
    return z.get_si();
  }

  BundleExpr expr() {
    std::vector<BundleExpr> terms;
    terms.push_back(term());
    while (peek('+')) {
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1)
      return std::move(terms.front());
    for (const auto& t : terms)
      reject_nested_normal(t);
    return {SumNode{std::move(terms)}};
  }

  BundleExpr term() {
    BundleExpr e = atom();
    while (peek('@')) {
      ++pos_;
      reject_nested_normal(e);
      expect('(');
      const long t = small_integer();
      expect(')');
      e = BundleExpr{TwistNode{std::move(e), t}};
    }
    return e;
  }

  BundleExpr atom() {
    skip_ws();
    if (pos_ >= src_.size())
      throw ParseError("expected a bundle but input ended", pos_);
    const char c = src_[pos_];
    switch (c) {
    case 'O': {
      ++pos_;
      expect('(');
      const long a = small_integer();
      expect(')');
      return {LineBundleNode{a}};
    }
    case 'T':
      ++pos_;
      return {TangentNode{}};
    case 'N':
      ++pos_;
      return normal();
    case '(': {
      ++pos_;
      BundleExpr inner = expr();
      expect(')');
      return inner;
    }
    default:
      throw ParseError(fmt::format("unexpected '{}'", c), pos_);
    }
  }

  void keyword(char k) {
    expect(k);
    expect('=');
  }

  BundleExpr normal() {
    const std::size_t start = pos_ - 1;
    expect('{');
    keyword('r');
    const long r = small_integer();
    expect(',');
    keyword('c');
    expect('[');
    std::vector<Integer> c;
    c.push_back(integer());
    while (peek(',')) {
      ++pos_;
      c.push_back(integer());
    }
    expect(']');
    std::optional<Integer> d;
    if (peek(',')) {
      ++pos_;
      keyword('d');
      d = integer();
    }
    expect('}');
    if (r < 1 || r > std::numeric_limits<int>::max() / 2)
      throw ShapeError(fmt::format("N{{...}} at position {}: codimension r = {} must be positive",
                                   start, r));
    if (static_cast<long>(c.size()) != r + 1)
      throw ShapeError(fmt::format("N{{...}} at position {}: r = {} needs {} Chern entries, got {}",
                                   start, r, r + 1, c.size()));
    if (c.front() != 1)
      throw ShapeError(fmt::format("N{{...}} at position {}: c_0 must be 1", start));
    return {AbstractNormalNode{static_cast<int>(r), std::move(c), std::move(d)}};
  }

  static void reject_nested_normal(const BundleExpr& e) {
    if (std::holds_alternative<AbstractNormalNode>(e.node))
      throw ShapeError("N{...} describes normal data and cannot be summed or twisted");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void print_into(const BundleExpr& e, std::string& out);

void print_grouped(const BundleExpr& e, std::string& out) {
  const bool group = std::holds_alternative<SumNode>(e.node);
  if (group)
    out += '(';
  print_into(e, out);
  if (group)
    out += ')';
}

void print_into(const BundleExpr& e, std::string& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LineBundleNode>) {
          out += fmt::format("O({})", node.degree);
        } else if constexpr (std::is_same_v<T, TangentNode>) {
          out += 'T';
        } else if constexpr (std::is_same_v<T, SumNode>) {
          for (std::size_t i = 0; i < node.terms.size(); ++i) {
            if (i != 0)
              out += '+';
            print_grouped(node.terms[i], out);
          }
        } else if constexpr (std::is_same_v<T, TwistNode>) {
          print_grouped(*node.base, out);
          out += fmt::format("@({})", node.shift);
        } else {
          out += fmt::format("N{{r={},c=[", node.codim);
          for (std::size_t i = 0; i < node.c.size(); ++i)
            out += (i == 0 ? "" : ",") + node.c[i].get_str();
          out += ']';
          if (node.degree)
            out += ",d=" + node.degree->get_str();
          out += '}';
        }
      },
      e.node);
}

BundleSpec elaborate_bundle(const BundleExpr& e, int n) {
  return std::visit(
      [&](const auto& node) -> BundleSpec {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LineBundleNode>) {
          return line_bundle(n, node.degree);
        } else if constexpr (std::is_same_v<T, TangentNode>) {
          return tangent_bundle(n);
        } else if constexpr (std::is_same_v<T, SumNode>) {
          BundleSpec acc = elaborate_bundle(node.terms.front(), n);
          for (std::size_t i = 1; i < node.terms.size(); ++i)
            acc = direct_sum(acc, elaborate_bundle(node.terms[i], n));
          return acc;
        } else if constexpr (std::is_same_v<T, TwistNode>) {
          return twist(elaborate_bundle(*node.base, n), node.shift);
        } else {
          throw ShapeError("N{...} cannot appear inside a bundle expression");
        }
      },
      e.node);
}

} // namespace

BundleExpr parse_bundle(std::string_view src) { return Parser(src).parse(); }

std::string print(const BundleExpr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

Elaborated elaborate(const BundleExpr& e, int ambient_dim) {
  if (const auto* normal = std::get_if<AbstractNormalNode>(&e.node)) {
    if (normal->degree)
      return ChernVector(ambient_dim, normal->c, *normal->degree,
                         DegreeCheck::forensic_override);
    return ChernVector(ambient_dim, normal->c);
  }
  return elaborate_bundle(e, ambient_dim);
}

ChernData chern_data(const Elaborated& e) {
  return std::visit([](const auto& x) { return ChernData(x); }, e);
}

ChernVector as_normal_data(const Elaborated& e) {
  if (const auto* cv = std::get_if<ChernVector>(&e))
    return *cv;
  const auto& bundle = std::get<BundleSpec>(e);
  const ChernData data(bundle);
  return ChernVector(bundle.ambient_dim(), data.c());
}

} // namespace barth

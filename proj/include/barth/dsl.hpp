#pragma once

#include "barth/bundles.hpp"
#include "barth/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace barth {

/// Owning pointer with value semantics, for recursive AST nodes.
template <class T>
class Box {
public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

private:
  std::unique_ptr<T> ptr_;
};

struct BundleExpr;

struct LineBundleNode {
  long degree;
  friend bool operator==(const LineBundleNode&, const LineBundleNode&) = default;
};

struct TangentNode {
  friend bool operator==(const TangentNode&, const TangentNode&) = default;
};

struct SumNode {
  std::vector<BundleExpr> terms;
  friend bool operator==(const SumNode&, const SumNode&);
};

struct TwistNode {
  Box<BundleExpr> base;
  long shift;
  friend bool operator==(const TwistNode&, const TwistNode&);
};

/// Abstract normal-bundle data N{r=.., c=[..], d=..}. Only valid as a whole
/// expression, never inside a sum or twist.
struct AbstractNormalNode {
  int codim;
  std::vector<Integer> c;
  std::optional<Integer> degree;
  friend bool operator==(const AbstractNormalNode&, const AbstractNormalNode&) = default;
};

struct BundleExpr {
  std::variant<LineBundleNode, TangentNode, SumNode, TwistNode, AbstractNormalNode> node;
  friend bool operator==(const BundleExpr&, const BundleExpr&) = default;
};

/// Grammar (whitespace-insensitive):
///   expr  := term { "+" term }
///   term  := atom { "@(" int ")" }
///   atom  := "O(" int ")" | "T" | "(" expr ")"
///          | "N{" "r=" int "," "c=[" int {"," int} "]" [ "," "d=" int ] "}"
/// Throws ParseError (with offset) on bad syntax and ShapeError on a
/// malformed N{...} or one used inside a larger expression.
BundleExpr parse_bundle(std::string_view src);

/// Canonical text; parse_bundle(print(e)) == e.
std::string print(const BundleExpr& e);

using Elaborated = std::variant<BundleSpec, ChernVector>;

/// Evaluates an expression on P^n. An explicit d in N{...} that differs from
/// c_r is accepted as a forensic override.
Elaborated elaborate(const BundleExpr& e, int ambient_dim);

/// Chern data of whichever alternative was produced.
ChernData chern_data(const Elaborated& e);

/// Normal-bundle view: a bundle E is read as the normal bundle of its zero
/// locus (same Chern classes, degree c_r).
ChernVector as_normal_data(const Elaborated& e);

} // namespace barth

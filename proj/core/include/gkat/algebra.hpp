#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gkat/element.hpp"

namespace gkat {

/// A realisation of the two-sorted signature (K, T, +, ;, *, ->, 0, 1).
///
/// Implementations are logically immutable and may be shared read-only
/// between threads. Finite algebras enumerate their whole carrier through
/// `elements()`; sampled algebras expose a fixed sample list there instead
/// (always containing 0 and 1) and report `is_finite() == false`.
class Algebra {
 public:
  Algebra();
  virtual ~Algebra() = default;

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  virtual const std::string& name() const = 0;
  virtual bool is_finite() const = 0;

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element plus(Element a, Element b) const = 0;
  virtual Element seq(Element a, Element b) const = 0;
  virtual Element star(Element a) const = 0;
  /// Residuation; only meaningful when both arguments are tests.
  virtual Element arrow(Element a, Element b) const = 0;
  virtual bool is_test(Element a) const = 0;

  /// Whole carrier when finite, sample list otherwise. Declaration order.
  virtual std::span<const Element> elements() const = 0;
  /// The members of `elements()` that are tests, in the same order.
  virtual std::span<const Element> test_elements() const = 0;

  virtual std::string element_name(Element a) const = 0;
  virtual std::optional<Element> find_element(std::string_view name) const = 0;

  /// Stable digest of the algebra's defining data, used in reports.
  virtual std::uint64_t identity_hash() const = 0;

  std::uint32_t id() const noexcept { return id_; }
  bool owns(Element e) const noexcept { return e.owner == id_; }
  /// Throws DomainMismatchError unless `e` was issued by this algebra.
  void require_owned(Element e) const;

 protected:
  Element make_element(std::uint32_t index) const noexcept {
    return Element{id_, index};
  }

 private:
  std::uint32_t id_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// p <= q iff p + q = q.
bool derived_leq(const Algebra& alg, Element a, Element b);

/// 64-bit FNV-1a; used for algebra identity digests.
std::uint64_t fnv1a(std::string_view bytes,
                    std::uint64_t seed = 14695981039346656037ull);

}  // namespace gkat

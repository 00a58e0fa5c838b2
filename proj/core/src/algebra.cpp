#include "gkat/algebra.hpp"

#include <atomic>

#include "gkat/errors.hpp"

namespace gkat {

namespace {
std::atomic<std::uint32_t> next_algebra_id{1};
}  // namespace

Algebra::Algebra() : id_(next_algebra_id.fetch_add(1)) {}

void Algebra::require_owned(Element e) const {
  if (!owns(e)) {
    throw DomainMismatchError("element does not belong to algebra '" + name() +
                              "'");
  }
}

bool derived_leq(const Algebra& alg, Element a, Element b) {
  alg.require_owned(a);
  alg.require_owned(b);
  return alg.plus(a, b) == b;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gkat

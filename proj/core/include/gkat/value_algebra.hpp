#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkat/algebra.hpp"
#include "gkat/errors.hpp"

namespace gkat {

/// Append-only storage whose elements never move. Slot `i` may be read from
/// any thread once its index has been handed out under the owner's lock.
template <class T>
class StableStore {
 public:
  static constexpr std::size_t kChunk = 4096;
  static constexpr std::size_t kMaxChunks = 1 << 16;

  StableStore() { chunks_.reserve(kMaxChunks); }

  std::size_t push(T value) {
    if (size_ % kChunk == 0) {
      if (chunks_.size() == kMaxChunks) throw SizeError("value store exhausted");
      chunks_.push_back(std::make_unique<std::array<T, kChunk>>());
    }
    (*chunks_[size_ / kChunk])[size_ % kChunk] = std::move(value);
    return size_++;
  }
  const T& operator[](std::size_t i) const { return (*chunks_[i / kChunk])[i % kChunk]; }
  std::size_t size() const noexcept { return size_; }

 private:
  std::vector<std::unique_ptr<std::array<T, kChunk>>> chunks_;
  std::size_t size_ = 0;
};

/// Procedural algebra over values of `Carrier::Value`. Results are interned
/// so that element equality coincides with value equality. The carrier type
/// must provide zero/one/plus/seq/star/arrow/is_test/render/parse/hash.
template <class Carrier>
class ValueAlgebra final : public Algebra {
 public:
  using Value = typename Carrier::Value;

  ValueAlgebra(std::string name, Carrier carrier)
      : name_(std::move(name)), carrier_(std::move(carrier)) {
    zero_ = intern(carrier_.zero());
    one_ = intern(carrier_.one());
  }

  /// Installs the sample list used by sampled checking; 0 and 1 are added
  /// at the front when missing. Duplicates are dropped.
  void set_samples(const std::vector<Value>& samples) {
    std::vector<Element> list{zero_, one_};
    for (const auto& v : samples) {
      const Element e = intern(v);
      if (std::find(list.begin(), list.end(), e) == list.end()) list.push_back(e);
    }
    samples_ = std::move(list);
    tests_.clear();
    for (auto e : samples_) {
      if (is_test(e)) tests_.push_back(e);
    }
    std::string digest = name_;
    for (auto e : samples_) digest += "|" + element_name(e);
    hash_ = fnv1a(digest);
  }

  const std::string& name() const override { return name_; }
  bool is_finite() const override { return false; }

  Element zero() const override { return zero_; }
  Element one() const override { return one_; }
  Element plus(Element a, Element b) const override {
    return intern(carrier_.plus(value(a), value(b)));
  }
  Element seq(Element a, Element b) const override {
    return intern(carrier_.seq(value(a), value(b)));
  }
  Element star(Element a) const override { return intern(carrier_.star(value(a))); }
  Element arrow(Element a, Element b) const override {
    return intern(carrier_.arrow(value(a), value(b)));
  }
  bool is_test(Element a) const override { return carrier_.is_test(value(a)); }

  std::span<const Element> elements() const override { return samples_; }
  std::span<const Element> test_elements() const override { return tests_; }

  std::string element_name(Element a) const override {
    return carrier_.render(value(a));
  }
  std::optional<Element> find_element(std::string_view name) const override {
    auto v = carrier_.parse(name);
    if (!v) return std::nullopt;
    return intern(*v);
  }
  std::uint64_t identity_hash() const override { return hash_; }

  Element intern(const Value& v) const {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = index_.try_emplace(v, 0);
    if (inserted) it->second = static_cast<std::uint32_t>(store_.push(v));
    return make_element(it->second);
  }
  const Value& value(Element e) const {
    require_owned(e);
    return store_[e.index];
  }
  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t interned_count() const {
    std::lock_guard lock(mutex_);
    return store_.size();
  }

 private:
  struct Hasher {
    const Carrier* carrier;
    std::size_t operator()(const Value& v) const { return carrier->hash(v); }
  };

  std::string name_;
  Carrier carrier_;
  mutable std::mutex mutex_;
  mutable StableStore<Value> store_;
  mutable std::unordered_map<Value, std::uint32_t, Hasher> index_{16, Hasher{&carrier_}};
  Element zero_{}, one_{};
  std::vector<Element> samples_;
  std::vector<Element> tests_;
  std::uint64_t hash_ = 0;
};

}  // namespace gkat

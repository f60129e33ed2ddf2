#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parade/error.hpp"

namespace parade {

using ElemId = std::uint32_t;
using Word = std::vector<ElemId>;

// A finite partial group realization: a designated element set with unit and
// involutive inverse, a word-membership predicate (exact at every length) and
// the reduction map defined on words.
class PartialGroup {
 public:
  virtual ~PartialGroup() = default;

  virtual std::size_t size() const = 0;
  virtual ElemId unit() const = 0;
  virtual ElemId inverse(ElemId e) const = 0;
  virtual bool word_in(std::span<const ElemId> w) const = 0;
  virtual std::optional<ElemId> reduce(std::span<const ElemId> w) const = 0;
  virtual std::string label(ElemId e) const = 0;
  virtual std::string kind() const = 0;

  bool pair_in(ElemId a, ElemId b) const {
    const ElemId w[2] = {a, b};
    return word_in(w);
  }
  std::optional<ElemId> reduce2(ElemId a, ElemId b) const {
    const ElemId w[2] = {a, b};
    return reduce(w);
  }
  ElemId reduce_or_throw(std::span<const ElemId> w) const {
    auto r = reduce(w);
    if (!r) fail(Errc::NotAWord, "reduce applied to a non-word");
    return *r;
  }
  Word inverse_word(std::span<const ElemId> w) const {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = inverse(w[w.size() - 1 - i]);
    return out;
  }
  void check_elem(ElemId e) const {
    if (e >= size()) fail(Errc::UnknownElement, "element id out of range");
  }
  // Least k <= size() with e^k reducing to the unit, or 0 when the power chain
  // leaves the word set first (possible in a proper partial group).
  std::size_t order_of(ElemId e) const;
};

using PGPtr = std::shared_ptr<const PartialGroup>;

// Words of one fixed length, stored flat.
class WordList {
 public:
  explicit WordList(std::size_t len) : len_(len) {}
  std::size_t length() const { return len_; }
  std::size_t size() const { return len_ == 0 ? 0 : data_.size() / len_; }
  std::span<const ElemId> operator[](std::size_t i) const {
    return {data_.data() + i * len_, len_};
  }
  void push(std::span<const ElemId> w) { data_.insert(data_.end(), w.begin(), w.end()); }
  void push_letter_extension(std::span<const ElemId> base, ElemId letter) {
    data_.insert(data_.end(), base.begin(), base.end());
    data_.push_back(letter);
  }

 private:
  std::size_t len_;
  std::vector<ElemId> data_;
};

// Prefix-closed word enumeration: level[n-1] lists the words of length n,
// built by extending level n-2 with every letter and keeping the words.
std::vector<WordList> enumerate_word_lists(const PartialGroup& pg, int max_len);
std::vector<std::vector<Word>> enumerate_words(const PartialGroup& pg, int max_len);

}  // namespace parade

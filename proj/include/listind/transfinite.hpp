/* Copyright 2026 The listind Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Transfinite sequences of naturals of length below w^3.
//
// A TransfiniteList is a finite sequence of blocks followed by a finite tail
// word. Each block is either a Letter, one sequence  w ^ N_k  of length w
// (an NElem), or a Cycle  (c1 ... cn)^w  of length w^2 built from NElem
// letters. The denoted sequence is the concatenation of the blocks' sequences
// followed by the tail.
//
// Every value is kept in canonical form:
//   * NElem prefixes never end in start-1 (that entry is folded into the tail);
//   * cycles are primitive (not a power of a shorter letter sequence);
//   * a Letter never precedes a Cycle whose last letter equals it (the letter
//     is absorbed by rotating the cycle).
// Under these rules two values denote the same sequence iff they are
// structurally equal.

#ifndef LISTIND_TRANSFINITE_HPP_
#define LISTIND_TRANSFINITE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "listind/ordinal.hpp"

namespace listind {

using Word = std::vector<Natural>;

Word repeat(const Word& w, Natural times);

// w ^ N_start, where N_k = (k, k+1, k+2, ...).
class NElem {
 public:
  NElem() = default;
  // Canonicalizes: strips trailing prefix entries equal to start-1.
  NElem(Word prefix, Natural start);
  static NElem tail_from(Natural k) { return NElem({}, k); }

  const Word& prefix() const { return prefix_; }
  Natural start() const { return start_; }

  Natural at(Natural index) const;
  NElem drop(Natural count) const;
  NElem prepend(const Word& w) const;

  std::string to_string() const;

  bool operator==(const NElem&) const = default;
  bool operator<(const NElem& other) const {
    return std::tie(prefix_, start_) < std::tie(other.prefix_, other.start_);
  }

 private:
  Word prefix_;
  Natural start_ = 0;
};

// The w-fold repetition of a nonempty letter sequence.
struct Cycle {
  std::vector<NElem> letters;
  bool operator==(const Cycle&) const = default;
  bool operator<(const Cycle& other) const { return letters < other.letters; }
};

using Block = std::variant<NElem, Cycle>;

class TransfiniteList {
 public:
  TransfiniteList() = default;

  static TransfiniteList word(Word w);
  static TransfiniteList letter(const NElem& n);
  // (c1 ... cn)^w. Throws DomainError on an empty cycle.
  static TransfiniteList omega_power(std::vector<NElem> cycle);
  // Normalizes arbitrary blocks into canonical form.
  static TransfiniteList from_parts(std::vector<Block> blocks, Word tail);

  const std::vector<Block>& blocks() const { return blocks_; }
  const Word& tail() const { return tail_; }

  bool is_word() const { return blocks_.empty(); }
  bool is_empty() const { return blocks_.empty() && tail_.empty(); }
  // Single NElem without tail.
  bool is_nelem() const;

  Ordinal length() const;
  // Entry at position `index`; throws DomainError when index >= length().
  Natural at(const Ordinal& index) const;
  // The sequence starting at position `start`; throws DomainError when
  // start > length().
  TransfiniteList suffix(const Ordinal& start) const;
  // (init, last) with *this == init ^ (last), present iff the length is a
  // successor ordinal.
  std::optional<std::pair<TransfiniteList, Natural>> last_decomposition() const;

  std::string to_string() const;

  bool operator==(const TransfiniteList&) const = default;
  bool operator<(const TransfiniteList& other) const {
    return std::tie(blocks_, tail_) < std::tie(other.blocks_, other.tail_);
  }

 private:
  std::vector<Block> blocks_;
  Word tail_;
};

TransfiniteList concat(const TransfiniteList& a, const TransfiniteList& b);
TransfiniteList cons(Natural head, const TransfiniteList& rest);

// Length of the longest common prefix; equals min(|a|, |b|) iff one is a
// prefix of the other.
Ordinal common_prefix_length(const TransfiniteList& a, const TransfiniteList& b);

class LiteralSyntaxError : public std::invalid_argument {
 public:
  LiteralSyntaxError(const std::string& message, std::size_t column)
      : std::invalid_argument(message + " at column " + std::to_string(column)),
        column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Literal syntax: "[1,2,3]" word, "[1,2]~N(3)" or "N(3)" single letter,
// "rep(N(0),[1]~N(4))" w-cycle, segments joined with ".".
TransfiniteList parse_list(std::string_view text);

// Reads one literal starting at text[pos] and advances pos past it.
// Columns in errors are 1-based offsets into `text`.
TransfiniteList parse_list_at(std::string_view text, std::size_t& pos);
// True when text[pos..] starts a list literal.
bool starts_list_literal(std::string_view text, std::size_t pos);

}  // namespace listind

#endif  // LISTIND_TRANSFINITE_HPP_

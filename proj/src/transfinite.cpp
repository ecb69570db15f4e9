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

#include "listind/transfinite.hpp"

#include <algorithm>
#include <cctype>

namespace listind {

namespace {

const Ordinal& omega() {
  static const Ordinal w = Ordinal::omega();
  return w;
}

const Ordinal& omega_squared() {
  static const Ordinal w2 = Ordinal::omega_power(2);
  return w2;
}

const Ordinal& extent(const Block& b) {
  return std::holds_alternative<NElem>(b) ? omega() : omega_squared();
}

std::vector<NElem> rotate_left(const std::vector<NElem>& letters, Natural by) {
  std::vector<NElem> out(letters);
  std::rotate(out.begin(), out.begin() + static_cast<long>(by % out.size()), out.end());
  return out;
}

// Shortest r with letters == r^k.
std::vector<NElem> primitive_root(const std::vector<NElem>& letters) {
  const std::size_t n = letters.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = letters[i] == letters[i - d];
    if (periodic) return {letters.begin(), letters.begin() + static_cast<long>(d)};
  }
  return letters;
}

// First position where two distinct NElems differ. Beyond the longer prefix
// both are arithmetic progressions with step 1, so the first difference is at
// most max(|p1|, |p2|).
Natural first_difference(const NElem& a, const NElem& b) {
  const Natural limit = std::max(a.prefix().size(), b.prefix().size());
  for (Natural i = 0; i <= limit; ++i)
    if (a.at(i) != b.at(i)) return i;
  throw std::logic_error("first_difference called on equal letters");
}

}  // namespace

Word repeat(const Word& w, Natural times) {
  Word out;
  out.reserve(checked_mul(w.size(), times));
  for (Natural i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

NElem::NElem(Word prefix, Natural start) : prefix_(std::move(prefix)), start_(start) {
  while (start_ > 0 && !prefix_.empty() && prefix_.back() == start_ - 1) {
    prefix_.pop_back();
    --start_;
  }
}

Natural NElem::at(Natural index) const {
  if (index < prefix_.size()) return prefix_[index];
  return checked_add(start_, index - prefix_.size());
}

NElem NElem::drop(Natural count) const {
  if (count <= prefix_.size())
    return NElem({prefix_.begin() + static_cast<long>(count), prefix_.end()}, start_);
  return NElem({}, checked_add(start_, count - prefix_.size()));
}

NElem NElem::prepend(const Word& w) const {
  Word p(w);
  p.insert(p.end(), prefix_.begin(), prefix_.end());
  return NElem(std::move(p), start_);
}

namespace {

std::string word_text(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

}  // namespace

std::string NElem::to_string() const {
  std::string n = "N(" + std::to_string(start_) + ")";
  return prefix_.empty() ? n : word_text(prefix_) + "~" + n;
}

TransfiniteList TransfiniteList::word(Word w) {
  TransfiniteList out;
  out.tail_ = std::move(w);
  return out;
}

TransfiniteList TransfiniteList::letter(const NElem& n) {
  TransfiniteList out;
  out.blocks_.push_back(n);
  return out;
}

TransfiniteList TransfiniteList::omega_power(std::vector<NElem> cycle) {
  return from_parts({Cycle{std::move(cycle)}}, {});
}

TransfiniteList TransfiniteList::from_parts(std::vector<Block> blocks, Word tail) {
  TransfiniteList out;
  out.tail_ = std::move(tail);
  for (Block& b : blocks) {
    if (auto* c = std::get_if<Cycle>(&b)) {
      if (c->letters.empty()) throw DomainError("a cycle needs at least one letter");
      std::vector<NElem> letters = primitive_root(c->letters);
      // Absorb preceding copies of the last letter: L (c1..cn-1 L)^w = (L c1..cn-1)^w.
      while (!out.blocks_.empty()) {
        const auto* prev = std::get_if<NElem>(&out.blocks_.back());
        if (prev == nullptr || !(*prev == letters.back())) break;
        out.blocks_.pop_back();
        std::rotate(letters.rbegin(), letters.rbegin() + 1, letters.rend());
      }
      out.blocks_.push_back(Cycle{std::move(letters)});
    } else {
      out.blocks_.push_back(std::move(b));
    }
  }
  return out;
}

bool TransfiniteList::is_nelem() const {
  return blocks_.size() == 1 && tail_.empty() && std::holds_alternative<NElem>(blocks_[0]);
}

Ordinal TransfiniteList::length() const {
  Ordinal total;
  for (const Block& b : blocks_) total = total + extent(b);
  return total + Ordinal(tail_.size());
}

Natural TransfiniteList::at(const Ordinal& index) const {
  Ordinal offset;
  for (const Block& b : blocks_) {
    const Ordinal end = offset + extent(b);
    if (index < end) {
      const Ordinal local = subtract_left(index, offset);
      if (const auto* n = std::get_if<NElem>(&b)) return n->at(local.finite_value());
      const auto& letters = std::get<Cycle>(b).letters;
      const DivMod dm = divmod(local, omega());
      return letters[dm.quotient.finite_value() % letters.size()].at(dm.remainder.finite_value());
    }
    offset = end;
  }
  const Ordinal local = index >= offset ? subtract_left(index, offset) : Ordinal();
  if (!local.is_finite() || local.finite_value() >= tail_.size())
    throw DomainError("position " + index.to_string() + " is outside a sequence of length " +
                      length().to_string());
  return tail_[local.finite_value()];
}

TransfiniteList TransfiniteList::suffix(const Ordinal& start) const {
  Ordinal offset;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    const Ordinal end = offset + extent(b);
    if (start < end) {
      const Ordinal local = subtract_left(start, offset);
      std::vector<Block> out;
      if (const auto* n = std::get_if<NElem>(&b)) {
        out.push_back(n->drop(local.finite_value()));
      } else {
        const auto& letters = std::get<Cycle>(b).letters;
        const DivMod dm = divmod(local, omega());
        const Natural skipped = dm.quotient.finite_value() % letters.size();
        const Natural within = dm.remainder.finite_value();
        if (within == 0) {
          out.push_back(Cycle{rotate_left(letters, skipped)});
        } else {
          out.push_back(letters[skipped].drop(within));
          out.push_back(Cycle{rotate_left(letters, skipped + 1)});
        }
      }
      out.insert(out.end(), blocks_.begin() + static_cast<long>(i) + 1, blocks_.end());
      return from_parts(std::move(out), tail_);
    }
    offset = end;
  }
  const Ordinal local = subtract_left(start, offset);
  if (!local.is_finite() || local.finite_value() > tail_.size())
    throw DomainError("suffix start " + start.to_string() + " exceeds length " +
                      length().to_string());
  return word({tail_.begin() + static_cast<long>(local.finite_value()), tail_.end()});
}

std::optional<std::pair<TransfiniteList, Natural>> TransfiniteList::last_decomposition() const {
  if (tail_.empty()) return std::nullopt;
  TransfiniteList init = *this;
  const Natural last = init.tail_.back();
  init.tail_.pop_back();
  return std::make_pair(std::move(init), last);
}

std::string TransfiniteList::to_string() const {
  std::string out;
  auto segment = [&out](const std::string& s) {
    if (!out.empty()) out += ".";
    out += s;
  };
  for (const Block& b : blocks_) {
    if (const auto* n = std::get_if<NElem>(&b)) {
      segment(n->to_string());
    } else {
      std::string c = "rep(";
      const auto& letters = std::get<Cycle>(b).letters;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) c += ",";
        c += letters[i].to_string();
      }
      segment(c + ")");
    }
  }
  if (!tail_.empty() || out.empty()) segment(word_text(tail_));
  return out;
}

TransfiniteList concat(const TransfiniteList& a, const TransfiniteList& b) {
  std::vector<Block> blocks = a.blocks();
  const Word& w = a.tail();
  if (b.is_word()) {
    Word tail = w;
    tail.insert(tail.end(), b.tail().begin(), b.tail().end());
    return TransfiniteList::from_parts(std::move(blocks), std::move(tail));
  }
  auto rest = b.blocks().begin();
  if (!w.empty()) {
    // a's tail word fuses with b's first letter.
    if (const auto* n = std::get_if<NElem>(&*rest)) {
      blocks.push_back(n->prepend(w));
    } else {
      const auto& letters = std::get<Cycle>(*rest).letters;
      blocks.push_back(letters.front().prepend(w));
      blocks.push_back(Cycle{rotate_left(letters, 1)});
    }
    ++rest;
  }
  blocks.insert(blocks.end(), rest, b.blocks().end());
  return TransfiniteList::from_parts(std::move(blocks), b.tail());
}

TransfiniteList cons(Natural head, const TransfiniteList& rest) {
  return concat(TransfiniteList::word({head}), rest);
}

Ordinal common_prefix_length(const TransfiniteList& a, const TransfiniteList& b) {
  Ordinal matched;
  TransfiniteList x = a;
  TransfiniteList y = b;
  for (;;) {
    if (x.is_empty() || y.is_empty()) return matched;
    if (x.is_word() || y.is_word()) {
      Natural limit = x.is_word() ? x.tail().size() : y.tail().size();
      if (x.is_word() && y.is_word()) limit = std::min(x.tail().size(), y.tail().size());
      for (Natural i = 0; i < limit; ++i)
        if (x.at(i) != y.at(i)) return matched + Ordinal(i);
      return matched + Ordinal(limit);
    }
    const Block& bx = x.blocks().front();
    const Block& by = y.blocks().front();
    const auto* cx = std::get_if<Cycle>(&bx);
    const auto* cy = std::get_if<Cycle>(&by);
    if (cx != nullptr && cy != nullptr) {
      if (*cx == *cy) {
        matched = matched + omega_squared();
        x = x.suffix(omega_squared());
        y = y.suffix(omega_squared());
        continue;
      }
      // Two periodic letter streams that agree on n1 + n2 letters are equal.
      const auto& lx = cx->letters;
      const auto& ly = cy->letters;
      for (Natural j = 0; j < lx.size() + ly.size(); ++j) {
        const NElem& p = lx[j % lx.size()];
        const NElem& q = ly[j % ly.size()];
        if (!(p == q))
          return matched + omega() * Ordinal(j) + Ordinal(first_difference(p, q));
      }
      throw std::logic_error("distinct primitive cycles agree on n1 + n2 letters");
    }
    const NElem& p = cx ? cx->letters.front() : std::get<NElem>(bx);
    const NElem& q = cy ? cy->letters.front() : std::get<NElem>(by);
    if (!(p == q)) return matched + Ordinal(first_difference(p, q));
    matched = matched + omega();
    x = x.suffix(omega());
    y = y.suffix(omega());
  }
}

// Literal parsing.

namespace {

class LiteralReader {
 public:
  LiteralReader(std::string_view text, std::size_t& pos) : text_(text), pos_(pos) {}

  TransfiniteList read() {
    TransfiniteList acc = segment();
    for (;;) {
      std::size_t save = pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '.' && starts_list_literal(text_, pos_ + 1)) {
        ++pos_;
        acc = concat(acc, segment());
      } else {
        pos_ = save;
        return acc;
      }
    }
  }

 private:
  TransfiniteList segment() {
    skip_space();
    if (peek('[')) {
      Word w = word();
      std::size_t save = pos_;
      skip_space();
      if (accept('~')) {
        skip_space();
        return TransfiniteList::letter(tail_letter(std::move(w)));
      }
      pos_ = save;
      return TransfiniteList::word(std::move(w));
    }
    if (peek_keyword("rep")) {
      pos_ += 3;
      expect('(');
      std::vector<NElem> letters;
      do {
        letters.push_back(nelem());
        skip_space();
      } while (accept(','));
      expect(')');
      return TransfiniteList::omega_power(std::move(letters));
    }
    if (peek_keyword("N")) return TransfiniteList::letter(tail_letter({}));
    fail("expected a list literal");
  }

  NElem nelem() {
    skip_space();
    Word prefix;
    if (peek('[')) {
      prefix = word();
      skip_space();
      if (!accept('~')) fail("expected '~' after the prefix of a letter");
      skip_space();
    }
    return tail_letter(std::move(prefix));
  }

  NElem tail_letter(Word prefix) {
    if (!peek_keyword("N")) fail("expected N(k)");
    ++pos_;
    expect('(');
    skip_space();
    Natural k = natural();
    expect(')');
    return NElem(std::move(prefix), k);
  }

  Word word() {
    expect('[');
    Word w;
    skip_space();
    if (accept(']')) return w;
    do {
      skip_space();
      w.push_back(natural());
      skip_space();
    } while (accept(','));
    expect(']');
    return w;
  }

  Natural natural() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(pos_ >= text_.size() ? "unexpected end of input" : "expected a number");
    Natural n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = checked_add(checked_mul(n, 10), static_cast<Natural>(text_[pos_] - '0'));
      ++pos_;
    }
    return n;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool peek_keyword(std::string_view kw) const {
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t p = pos_ + kw.size();
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == '(';
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    skip_space();
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw LiteralSyntaxError(what, pos_ + 1);
  }

  std::string_view text_;
  std::size_t& pos_;
};

}  // namespace

bool starts_list_literal(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size()) return false;
  if (text[pos] == '[') return true;
  auto keyword = [&](std::string_view kw) {
    if (text.substr(pos, kw.size()) != kw) return false;
    std::size_t p = pos + kw.size();
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    return p < text.size() && text[p] == '(';
  };
  return keyword("N") || keyword("rep");
}

TransfiniteList parse_list_at(std::string_view text, std::size_t& pos) {
  return LiteralReader(text, pos).read();
}

TransfiniteList parse_list(std::string_view text) {
  std::size_t pos = 0;
  TransfiniteList out = parse_list_at(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw LiteralSyntaxError("unexpected trailing input", pos + 1);
  return out;
}

}  // namespace listind

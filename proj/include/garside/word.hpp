#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>

namespace garside {

// A positive word in the generators x1..xn of an Artin monoid, one byte per
// letter. Generator indices are 1-based everywhere; the empty word is the
// monoid identity. Words are plain values: equality and ordering are literal
// (letter by letter), not modulo the defining relations.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);

  // Accepts whitespace-separated tokens "x3 x2 x1" or bare indices "3 2 1";
  // an empty (or all-whitespace) string is the identity.
  static Word parse(const std::string& text);

  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }

  // Generator index at position pos (positions are 0-based).
  int letter(std::size_t pos) const {
    return static_cast<unsigned char>(rep_[pos]);
  }
  void set_letter(std::size_t pos, int gen);
  void push_back(int gen);

  Word reversed() const;
  Word prefix(std::size_t count) const;
  Word suffix(std::size_t count) const;
  int max_letter() const;

  std::string str() const;  // "x1 x2 x1"; empty string for the identity

  Word& operator+=(const Word& other) {
    rep_ += other.rep_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  const std::string& bytes() const { return rep_; }

 private:
  std::string rep_;
};

// s t s t ... with `length` letters.
Word alternating_word(int s, int t, int length);

}  // namespace garside

template <>
struct std::hash<garside::Word> {
  std::size_t operator()(const garside::Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};

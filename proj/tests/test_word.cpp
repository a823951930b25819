#include <stdexcept>

#include "doctest.h"
#include "garside/word.hpp"

using garside::Word;
using garside::alternating_word;

TEST_CASE("word construction and access") {
  Word w{3, 2, 1};
  CHECK(w.size() == 3);
  CHECK(w.letter(0) == 3);
  CHECK(w.letter(2) == 1);
  CHECK(!w.empty());
  CHECK(Word{}.empty());
  CHECK(Word{}.size() == 0);

  w.push_back(7);
  CHECK(w.letter(3) == 7);
  w.set_letter(0, 5);
  CHECK(w.letter(0) == 5);

  CHECK_THROWS_AS(Word{0}, std::invalid_argument);
  CHECK_THROWS_AS(Word{-3}, std::invalid_argument);
  CHECK_THROWS_AS(Word{256}, std::invalid_argument);
  CHECK_THROWS_AS(w.push_back(0), std::invalid_argument);
}

TEST_CASE("word parsing") {
  CHECK(Word::parse("x3 x2 x1") == Word{3, 2, 1});
  CHECK(Word::parse("3 2 1") == Word{3, 2, 1});
  CHECK(Word::parse("  x12\tx1 ") == Word{12, 1});
  CHECK(Word::parse("X2 x1") == Word{2, 1});
  CHECK(Word::parse("") == Word{});
  CHECK(Word::parse("   ") == Word{});

  CHECK_THROWS_AS(Word::parse("x0"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("xa"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("x1 banana"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("-2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("x999"), std::invalid_argument);
}

TEST_CASE("word formatting round-trips") {
  Word w{1, 2, 1};
  CHECK(w.str() == "x1 x2 x1");
  CHECK(Word{}.str() == "");
  CHECK(Word::parse(w.str()) == w);
}

TEST_CASE("word slicing and concatenation") {
  Word w{1, 2, 3, 4};
  CHECK(w.prefix(2) == Word{1, 2});
  CHECK(w.prefix(0) == Word{});
  CHECK(w.prefix(4) == w);
  CHECK(w.suffix(2) == Word{3, 4});
  CHECK(w.suffix(0) == Word{});
  CHECK(w.reversed() == Word{4, 3, 2, 1});
  CHECK(Word{}.reversed() == Word{});

  CHECK(Word{1, 2} + Word{3} == Word{1, 2, 3});
  Word u{1};
  u += Word{2, 2};
  CHECK(u == Word{1, 2, 2});
  CHECK(Word{} + Word{} == Word{});

  CHECK(w.max_letter() == 4);
  CHECK(Word{}.max_letter() == 0);
}

TEST_CASE("word ordering is length-free lexicographic on letters") {
  CHECK(Word{1, 2} < Word{1, 3});
  CHECK(Word{1} < Word{1, 1});
  CHECK(Word{2} > Word{1, 9, 9});
}

TEST_CASE("alternating words") {
  CHECK(alternating_word(1, 2, 3) == Word{1, 2, 1});
  CHECK(alternating_word(2, 1, 4) == Word{2, 1, 2, 1});
  CHECK(alternating_word(3, 1, 0) == Word{});
  CHECK(alternating_word(1, 2, 1) == Word{1});
}

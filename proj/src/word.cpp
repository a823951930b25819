#include "garside/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace garside {

namespace {

constexpr int kMaxGenerator = 255;

int check_generator(int gen) {
  if (gen < 1 || gen > kMaxGenerator) {
    throw std::invalid_argument("generator index out of range: " +
                                std::to_string(gen));
  }
  return gen;
}

}  // namespace

Word::Word(std::initializer_list<int> letters) {
  rep_.reserve(letters.size());
  for (int gen : letters) {
    rep_.push_back(static_cast<char>(check_generator(gen)));
  }
}

Word Word::parse(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::string digits = token;
    if (digits.size() > 1 && (digits[0] == 'x' || digits[0] == 'X')) {
      digits.erase(0, 1);
    }
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("bad word token: '" + token + "'");
    }
    long value = 0;
    try {
      value = std::stol(digits);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word token: '" + token + "'");
    }
    if (value < 1 || value > kMaxGenerator) {
      throw std::invalid_argument("generator index out of range in token '" +
                                  token + "'");
    }
    w.push_back(static_cast<int>(value));
  }
  return w;
}

void Word::set_letter(std::size_t pos, int gen) {
  rep_[pos] = static_cast<char>(check_generator(gen));
}

void Word::push_back(int gen) {
  rep_.push_back(static_cast<char>(check_generator(gen)));
}

Word Word::reversed() const {
  Word out;
  out.rep_.assign(rep_.rbegin(), rep_.rend());
  return out;
}

Word Word::prefix(std::size_t count) const {
  Word out;
  out.rep_ = rep_.substr(0, count);
  return out;
}

Word Word::suffix(std::size_t count) const {
  Word out;
  if (count >= rep_.size()) {
    out.rep_ = rep_;
  } else {
    out.rep_ = rep_.substr(rep_.size() - count);
  }
  return out;
}

int Word::max_letter() const {
  int best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    best = std::max(best, letter(i));
  }
  return best;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ' ';
    out += 'x';
    out += std::to_string(letter(i));
  }
  return out;
}

Word alternating_word(int s, int t, int length) {
  check_generator(s);
  check_generator(t);
  if (length < 0) {
    throw std::invalid_argument("negative alternating length");
  }
  Word w;
  for (int k = 0; k < length; ++k) {
    w.push_back(k % 2 == 0 ? s : t);
  }
  return w;
}

}  // namespace garside

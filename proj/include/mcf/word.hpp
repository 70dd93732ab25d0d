#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mcf/error.hpp"

namespace mcf {

// Finite binary digit string a_0 ... a_{t-1}; serializes as ASCII '0'/'1'.
class Word {
 public:
  Word() = default;

  static Word parse(std::string_view s) {
    for (char c : s)
      if (c != '0' && c != '1')
        throw Error(ErrorKind::InvalidInput, "word must consist of '0'/'1': '" + std::string(s) + "'");
    Word w;
    w.digits_ = std::string(s);
    return w;
  }

  // The word of length `length` spelling the low bits of `bits`, a_0 being
  // the most significant; enumerating bits = 0 .. 2^length - 1 yields all words.
  static Word from_bits(unsigned long long bits, std::size_t length) {
    Word w;
    w.digits_.resize(length);
    for (std::size_t i = 0; i < length; ++i)
      w.digits_[i] = ((bits >> (length - 1 - i)) & 1ULL) ? '1' : '0';
    return w;
  }

  static Word repeat(int digit, std::size_t count) {
    Word w;
    w.digits_.assign(count, digit ? '1' : '0');
    return w;
  }

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  int operator[](std::size_t i) const { return digits_[i] == '1' ? 1 : 0; }
  void push_back(int digit) { digits_.push_back(digit ? '1' : '0'); }
  Word prefix(std::size_t t) const { return parse(std::string_view(digits_).substr(0, t)); }
  Word suffix_from(std::size_t i) const { return parse(std::string_view(digits_).substr(i)); }
  const std::string& str() const noexcept { return digits_; }

  friend Word operator+(const Word& a, const Word& b) {
    Word w;
    w.digits_ = a.digits_ + b.digits_;
    return w;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string digits_;
};

}  // namespace mcf

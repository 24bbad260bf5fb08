#pragma once

// Words in the free group on generators e_1, e_2, ... and the operations on
// them.  Words are plain values; nothing here keeps state.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace hoops::words {

/// One letter e_i^{+1} or e_i^{-1}.
struct GenSymbol
{
  int index = 1; ///< i >= 1
  int sign = 1;  ///< +1 or -1

  /// Throws PreconditionError unless index >= 1 and sign is +-1.
  static GenSymbol make(int index, int sign);
  /// Signed-integer encoding: +i for e_i, -i for e_i^{-1}.
  static GenSymbol from_signed(int value);

  int as_signed() const { return sign * index; }
  GenSymbol inverse() const { return {index, -sign}; }
  bool cancels(GenSymbol other) const { return index == other.index && sign == -other.sign; }

  friend bool operator==(GenSymbol, GenSymbol) = default;
  friend auto operator<=>(GenSymbol, GenSymbol) = default;
};

class Word
{
public:
  Word() = default;
  explicit Word(std::vector<GenSymbol> symbols);

  /// Builds a word from the signed-integer encoding, e.g. {2, 3, -1} is e2 e3 e1^-1.
  static Word from_signed(const std::vector<int>& values);
  static Word from_signed(std::initializer_list<int> values);
  static Word generator(int index) { return Word({GenSymbol::make(index, 1)}); }

  const std::vector<GenSymbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const GenSymbol& operator[](std::size_t i) const { return symbols_[i]; }

  /// True when no adjacent pair cancels.
  bool is_reduced() const;
  std::vector<int> to_signed() const;
  /// Distinct generator indices in increasing order.
  std::vector<int> generators() const;
  int max_index() const;

  /// Human-readable form, e.g. "e1 e2 e1^-1"; the empty word prints as "1".
  std::string to_string() const;
  /// JSON-style signed list, e.g. "[2,3,-1]".
  std::string to_signed_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
  friend Word reduce(Word&& w);

private:
  std::vector<GenSymbol> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Free reduction: the unique word obtained by cancelling e_i e_i^-1 pairs.
Word reduce(const Word& w);
/// Same, reusing the storage of a temporary.
Word reduce(Word&& w);
/// reduce(a b)
Word multiply(const Word& a, const Word& b);
Word invert(const Word& w);
/// reduce(a b a^-1 b^-1)
Word commutator(const Word& a, const Word& b);
/// Raises w to an integer power (negative powers invert).
Word power(const Word& w, int exponent);

/// Substitutes images[i-1] for e_i (and its inverse for e_i^-1) and reduces.
/// Every generator of w must have an image.
Word substitute(const Word& w, const std::vector<Word>& images);

/// Image of a word in the free abelian group: signed count per generator.
///
/// Indices that occur in the word are listed even if their count is zero;
/// comparison treats absent entries as zero.
class ExponentVector
{
public:
  ExponentVector() = default;

  std::int64_t operator[](int index) const;
  void add(int index, std::int64_t amount);
  bool is_zero() const;
  const std::map<int, std::int64_t>& entries() const { return entries_; }

  ExponentVector operator+(const ExponentVector& other) const;
  friend bool operator==(const ExponentVector& a, const ExponentVector& b);

private:
  std::map<int, std::int64_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

ExponentVector exponent_vector(const Word& w);

} // namespace hoops::words

#include "hoops/words.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hoops::words {

GenSymbol GenSymbol::make(int index, int sign)
{
  if (index < 1)
    throw PreconditionError("generator index must be >= 1, got " + std::to_string(index));
  if (sign != 1 && sign != -1)
    throw PreconditionError("generator sign must be +1 or -1, got " + std::to_string(sign));
  return {index, sign};
}

GenSymbol GenSymbol::from_signed(int value)
{
  if (value == 0)
    throw PreconditionError("0 is not a generator symbol");
  return value > 0 ? GenSymbol{value, 1} : GenSymbol{-value, -1};
}

Word::Word(std::vector<GenSymbol> symbols) : symbols_(std::move(symbols))
{
  for (const auto& s : symbols_)
    GenSymbol::make(s.index, s.sign);
}

Word Word::from_signed(const std::vector<int>& values)
{
  std::vector<GenSymbol> symbols;
  symbols.reserve(values.size());
  for (int v : values)
    symbols.push_back(GenSymbol::from_signed(v));
  Word w;
  w.symbols_ = std::move(symbols);
  return w;
}

Word Word::from_signed(std::initializer_list<int> values)
{
  return from_signed(std::vector<int>(values));
}

bool Word::is_reduced() const
{
  for (std::size_t i = 1; i < symbols_.size(); ++i)
    if (symbols_[i - 1].cancels(symbols_[i]))
      return false;
  return true;
}

std::vector<int> Word::to_signed() const
{
  std::vector<int> out;
  out.reserve(symbols_.size());
  for (const auto& s : symbols_)
    out.push_back(s.as_signed());
  return out;
}

std::vector<int> Word::generators() const
{
  std::set<int> seen;
  for (const auto& s : symbols_)
    seen.insert(s.index);
  return {seen.begin(), seen.end()};
}

int Word::max_index() const
{
  int m = 0;
  for (const auto& s : symbols_)
    m = std::max(m, s.index);
  return m;
}

std::string Word::to_string() const
{
  if (symbols_.empty())
    return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i)
      os << ' ';
    os << 'e' << symbols_[i].index;
    if (symbols_[i].sign < 0)
      os << "^-1";
  }
  return os.str();
}

std::string Word::to_signed_string() const
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i)
      os << ',';
    os << symbols_[i].as_signed();
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w)
{
  return os << w.to_string();
}

Word reduce(const Word& w)
{
  return reduce(Word(w));
}

Word reduce(Word&& w)
{
  // Stack reduction in place: symbols_[0..top) is the stack; each symbol
  // either cancels the top or is pushed.
  auto& s = w.symbols_;
  std::size_t top = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (top > 0 && s[top - 1].cancels(s[i]))
      --top;
    else
      s[top++] = s[i];
  }
  s.resize(top);
  return std::move(w);
}

Word multiply(const Word& a, const Word& b)
{
  std::vector<GenSymbol> cat = a.symbols();
  cat.insert(cat.end(), b.symbols().begin(), b.symbols().end());
  return reduce(Word(std::move(cat)));
}

Word invert(const Word& w)
{
  std::vector<GenSymbol> out;
  out.reserve(w.size());
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word commutator(const Word& a, const Word& b)
{
  return multiply(multiply(a, b), multiply(invert(a), invert(b)));
}

Word power(const Word& w, int exponent)
{
  const Word base = exponent < 0 ? invert(w) : w;
  Word out;
  for (int k = 0; k < std::abs(exponent); ++k)
    out = multiply(out, base);
  return out;
}

Word substitute(const Word& w, const std::vector<Word>& images)
{
  std::vector<GenSymbol> out;
  for (const auto& s : w.symbols()) {
    if (s.index > static_cast<int>(images.size()))
      throw PreconditionError("no image given for generator e" + std::to_string(s.index));
    const Word& img = images[s.index - 1];
    const Word piece = s.sign > 0 ? img : invert(img);
    out.insert(out.end(), piece.symbols().begin(), piece.symbols().end());
  }
  return reduce(Word(std::move(out)));
}

std::int64_t ExponentVector::operator[](int index) const
{
  auto it = entries_.find(index);
  return it == entries_.end() ? 0 : it->second;
}

void ExponentVector::add(int index, std::int64_t amount)
{
  entries_[index] += amount;
}

bool ExponentVector::is_zero() const
{
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const
{
  ExponentVector out = *this;
  for (const auto& [k, v] : other.entries_)
    out.add(k, v);
  return out;
}

bool operator==(const ExponentVector& a, const ExponentVector& b)
{
  std::set<int> keys;
  for (const auto& kv : a.entries_)
    keys.insert(kv.first);
  for (const auto& kv : b.entries_)
    keys.insert(kv.first);
  return std::all_of(keys.begin(), keys.end(), [&](int k) { return a[k] == b[k]; });
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v)
{
  os << '{';
  bool first = true;
  for (const auto& [k, c] : v.entries()) {
    if (!first)
      os << ", ";
    first = false;
    os << k << ':' << c;
  }
  return os << '}';
}

ExponentVector exponent_vector(const Word& w)
{
  ExponentVector v;
  for (const auto& s : w.symbols())
    v.add(s.index, s.sign);
  return v;
}

} // namespace hoops::words

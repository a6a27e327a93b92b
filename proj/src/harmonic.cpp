#include "zcong/harmonic.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace zcong {

MhsIndex::MhsIndex(std::initializer_list<int> entries) : MhsIndex(std::vector<int>(entries)) {}

MhsIndex::MhsIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("MHS index needs depth >= 1");
  for (int a : entries_)
    if (a == 0) throw std::invalid_argument("MHS index entries must be nonzero");
}

MhsIndex MhsIndex::repeated(int a, int r) {
  if (r < 1) throw std::invalid_argument("repetition count must be >= 1");
  return MhsIndex(std::vector<int>(static_cast<std::size_t>(r), a));
}

MhsIndex MhsIndex::parse(const std::string& text) {
  std::vector<int> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed MHS index: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("malformed MHS index: " + text);
    entries.push_back(value);
  }
  return MhsIndex(std::move(entries));
}

int MhsIndex::weight() const {
  int w = 0;
  for (int a : entries_) w += std::abs(a);
  return w;
}

MhsIndex MhsIndex::prefix() const {
  if (entries_.size() < 2) throw std::logic_error("prefix of a depth-1 index");
  return MhsIndex(std::vector<int>(entries_.begin(), entries_.end() - 1));
}

std::string MhsIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

BigRational mhs(int n, const MhsIndex& index) { return mhs(n, index, RationalBackend{}); }

namespace {

using Word = std::vector<int>;

int combine(int a, int b) {
  int sign = ((a < 0) != (b < 0)) ? -1 : 1;
  return sign * (std::abs(a) + std::abs(b));
}

// Quasi-shuffle on words, recursing on the last letters.
std::map<Word, long> stuffle_words(const Word& u, const Word& v) {
  if (u.empty()) return {{v, 1}};
  if (v.empty()) return {{u, 1}};
  std::map<Word, long> out;
  Word u0(u.begin(), u.end() - 1);
  Word v0(v.begin(), v.end() - 1);
  auto append = [&out](const std::map<Word, long>& part, int letter) {
    for (const auto& [w, c] : part) {
      Word ext = w;
      ext.push_back(letter);
      out[ext] += c;
    }
  };
  append(stuffle_words(u0, v), u.back());
  append(stuffle_words(u, v0), v.back());
  append(stuffle_words(u0, v0), combine(u.back(), v.back()));
  return out;
}

}  // namespace

std::map<MhsIndex, long> stuffle_product(const MhsIndex& u, const MhsIndex& v) {
  std::map<MhsIndex, long> out;
  for (const auto& [w, c] : stuffle_words(u.entries(), v.entries())) out.emplace(MhsIndex(w), c);
  return out;
}

bool stuffle_check(int n, const MhsIndex& u, const MhsIndex& v) {
  BigRational lhs = mhs(n, u) * mhs(n, v);
  BigRational rhs = 0;
  for (const auto& [w, c] : stuffle_product(u, v)) rhs += c * mhs(n, w);
  return lhs == rhs;
}

bool stuffle_check(int n, int a, int b) {
  BigRational lhs = mhs(n, {a}) * mhs(n, {b});
  BigRational rhs = mhs(n, {a, b}) + mhs(n, {b, a}) + mhs(n, {combine(a, b)});
  return lhs == rhs;
}

bool stuffle_check(int n, int a, int b, int c) {
  BigRational lhs = mhs(n, {a, b}) * mhs(n, {c});
  BigRational rhs = mhs(n, {a, b, c}) + mhs(n, {a, c, b}) + mhs(n, {c, a, b}) + mhs(n, {combine(a, c), b}) +
                    mhs(n, {a, combine(b, c)});
  return lhs == rhs;
}

bool splitting_rule_check(int n) {
  if (n < 1) return true;
  BigRational rhs = mhs(n - 1, {1, 1}) + mhs(n - 1, {1}) / n;
  return mhs(n, {1, 1}) == rhs;
}

}  // namespace zcong

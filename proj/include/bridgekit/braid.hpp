#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bridgekit {

struct BraidLetter {
  int index = 1;  // 1 .. strand_count-1
  int sign = 1;   // +1 or -1
};

inline bool operator==(const BraidLetter& a, const BraidLetter& b) {
  return a.index == b.index && a.sign == b.sign;
}

/// A word in the half-twist generators of the braid group on `strand_count`
/// strands. Letters act top to bottom.
struct BraidWord {
  int strand_count = 2;
  std::vector<BraidLetter> letters;
};

struct PlatPresentation {
  int n = 1;  // bridge number; the word lives on 2n strands
  BraidWord word;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class IndexOutOfRange : public std::runtime_error {
 public:
  explicit IndexOutOfRange(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses whitespace-separated signed generator indices: "2 -1 3" reads as
/// s_2 s_1^{-1} s_3. When strand_count > 0, indices are range-checked.
inline BraidWord parse_braid(const std::string& text, int strand_count = 0) {
  BraidWord w;
  w.strand_count = strand_count;
  std::istringstream in(text);
  std::string tok;
  int max_index = 0;
  while (in >> tok) {
    int v = 0;
    size_t used = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("not a braid letter: '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("not a braid letter: '" + tok + "'");
    if (v == 0) throw ParseError("generator index 0 is not allowed");
    int k = v > 0 ? v : -v;
    if (strand_count > 0 && k > strand_count - 1)
      throw IndexOutOfRange("generator s_" + std::to_string(k) + " needs at least " +
                            std::to_string(k + 1) + " strands");
    max_index = std::max(max_index, k);
    w.letters.push_back({k, v > 0 ? 1 : -1});
  }
  if (strand_count == 0) w.strand_count = std::max(2, max_index + 1);
  return w;
}

inline std::string to_text(const BraidWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << w.letters[i].sign * w.letters[i].index;
  }
  return os.str();
}

/// Adds one bridge: the original word on strands 1..2n followed by a single
/// positive letter at index 2n. The plat closure presents the same link with
/// a stabilized bridge sphere.
inline PlatPresentation stabilize(const PlatPresentation& p) {
  PlatPresentation q;
  q.n = p.n + 1;
  q.word.strand_count = 2 * q.n;
  q.word.letters = p.word.letters;
  q.word.letters.push_back({2 * p.n, 1});
  return q;
}

}  // namespace bridgekit

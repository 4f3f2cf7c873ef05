#pragma once

// Worst-case word trees over {A, C0, C1, C2}.
//
// A state (a,b) with b >= 1 branches in two. A and C0 lower the defect,
// (a,b) -> (a - (2b-1), b - 1); C1 and C2 keep it, (a,b) -> (a - b, b). Every
// drop is taken with equality, which is the combinatorial shadow bounded by
// mubar: the leaf count of the tree rooted at (a,b) equals mubar(a,b).

#include "multbound/core.hpp"
#include "multbound/polytope.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace multbound {

enum class Letter : unsigned char { A, C0, C1, C2 };
/// Image alphabet of nu: A -> A, C_i -> C.
enum class Projected : unsigned char { A, C };

using WordState = LocalPair;

class TerminalState : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonTerminalWord : public DomainError {
 public:
  using DomainError::DomainError;
};

inline const char* letter_name(Letter l) noexcept {
  switch (l) {
    case Letter::A: return "A";
    case Letter::C0: return "C0";
    case Letter::C1: return "C1";
    case Letter::C2: return "C2";
  }
  return "?";
}

constexpr bool is_decrement(Letter l) noexcept { return l == Letter::A || l == Letter::C0; }

constexpr Projected nu(Letter l) noexcept { return l == Letter::A ? Projected::A : Projected::C; }

struct Word {
  std::vector<Letter> letters;
  WordState final_state;

  bool terminal() const noexcept { return final_state.b == 0; }
  std::size_t size() const noexcept { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
};

inline std::string to_string(const Word& w) {
  if (w.letters.empty()) return "()";
  std::string out;
  for (const Letter l : w.letters) {
    if (!out.empty()) out += ' ';
    out += letter_name(l);
  }
  return out;
}

inline std::string to_string(const std::vector<Projected>& image) {
  std::string out;
  for (const Projected p : image) out += (p == Projected::A ? 'A' : 'C');
  return out;
}

/// Equality-drop successor of `s` under `l`; may leave U.
constexpr WordState successor(WordState s, Letter l) noexcept {
  if (is_decrement(l)) return {s.a - (2 * s.b - 1), s.b - 1};
  return {s.a - s.b, s.b};
}

/// Admissible worst-case successors in letter order; C1/C2 are dropped when
/// (a - b, b) leaves U.
inline std::vector<std::pair<Letter, WordState>> transitions(WordState s) {
  require_admissible(s);
  if (s.b == 0) throw TerminalState("state (" + std::to_string(s.a) + ",0) is terminal");
  std::vector<std::pair<Letter, WordState>> out;
  for (const Letter l : {Letter::A, Letter::C0, Letter::C1, Letter::C2}) {
    const WordState next = successor(s, l);
    if (is_admissible(next)) out.emplace_back(l, next);
  }
  return out;
}

/// Replays `letters` from `root`, rejecting any step outside the transition rules.
inline WordState replay(WordState root, const std::vector<Letter>& letters) {
  WordState s = root;
  for (const Letter l : letters) {
    const auto options = transitions(s);
    const auto it = std::find_if(options.begin(), options.end(),
                                 [l](const auto& option) { return option.first == l; });
    if (it == options.end()) {
      throw DomainError(std::string("letter ") + letter_name(l) + " not allowed at (" +
                        std::to_string(s.a) + "," + std::to_string(s.b) + ")");
    }
    s = it->second;
  }
  return s;
}

namespace detail {

/// Builds the binary worst-case tree. Subtree leaf counts are computed by the
/// builder itself, not borrowed from mubar, so the two stay independent.
class WorstCaseTreeBuilder {
 public:
  std::vector<Word> build(WordState root) {
    require_admissible(root);
    std::vector<Word> out;
    std::vector<Letter> prefix;
    emit(root, prefix, out);
    return out;
  }

  const BigInt& leaf_count(WordState s) {
    if (const auto it = leaves_.find(s); it != leaves_.end()) return it->second;
    BigInt n = 1;
    if (s.b != 0) {
      const auto [second_letter, second] = c_branch(s);
      n = leaf_count(successor(s, Letter::A)) + leaf_count(second);
    }
    return leaves_.emplace(s, std::move(n)).first->second;
  }

 private:
  /// The second child: C0 when the C1 step would leave U, otherwise the
  /// larger of the C0 and C1 subtrees (C0 on ties).
  std::pair<Letter, WordState> c_branch(WordState s) {
    const WordState down = successor(s, Letter::C0);
    if (s.a < s.b * (s.b + 1)) return {Letter::C0, down};
    const WordState stay = successor(s, Letter::C1);
    if (leaf_count(stay) > leaf_count(down)) return {Letter::C1, stay};
    return {Letter::C0, down};
  }

  void emit(WordState s, std::vector<Letter>& prefix, std::vector<Word>& out) {
    if (s.b == 0) {
      out.push_back(Word{prefix, s});
      return;
    }
    prefix.push_back(Letter::A);
    emit(successor(s, Letter::A), prefix, out);
    const auto [letter, next] = c_branch(s);
    prefix.back() = letter;
    emit(next, prefix, out);
    prefix.pop_back();
  }

  std::map<WordState, BigInt> leaves_;
};

}  // namespace detail

/// Terminal words of the worst-case tree rooted at `root`, in lexicographic
/// letter order (the depth-first order of the tree).
inline std::vector<Word> worst_case_words(WordState root) {
  return detail::WorstCaseTreeBuilder{}.build(root);
}

inline std::vector<Projected> nu_project(const std::vector<Letter>& letters) {
  std::vector<Projected> out;
  out.reserve(letters.size());
  for (const Letter l : letters) out.push_back(nu(l));
  return out;
}

inline std::vector<Projected> nu_project(const Word& w) { return nu_project(w.letters); }

/// True iff the nu-images are pairwise distinct and none is a proper prefix of
/// another.
inline bool check_prefix_free(const std::vector<Word>& words) {
  std::vector<std::vector<Projected>> images;
  images.reserve(words.size());
  for (const Word& w : words) images.push_back(nu_project(w));
  std::sort(images.begin(), images.end());
  // In sorted order a prefix of any image is a prefix of its successor.
  for (std::size_t i = 1; i < images.size(); ++i) {
    const auto& shorter = images[i - 1];
    const auto& longer = images[i];
    if (shorter.size() <= longer.size() &&
        std::equal(shorter.begin(), shorter.end(), longer.begin())) {
      return false;
    }
  }
  return true;
}

struct PositionEncoding {
  /// m[j]: number of C1/C2 letters between decrement letters j-1 and j.
  std::vector<long long> m;
  /// Decrement letter (A or C0) occupying each of the b positions.
  std::vector<Letter> letters;

  friend bool operator==(const PositionEncoding&, const PositionEncoding&) = default;
  friend auto operator<=>(const PositionEncoding&, const PositionEncoding&) = default;
};

inline PositionEncoding encode_positions(const Word& w, WordState root) {
  if (!w.terminal()) throw NonTerminalWord("encode_positions requires a terminal word");
  PositionEncoding enc;
  enc.m.reserve(static_cast<std::size_t>(root.b));
  long long run = 0;
  for (const Letter l : w.letters) {
    if (is_decrement(l)) {
      enc.m.push_back(run);
      enc.letters.push_back(l);
      run = 0;
    } else {
      ++run;
    }
  }
  if (enc.m.size() != static_cast<std::size_t>(root.b) || run != 0) {
    throw DomainError("word does not descend from root defect " + std::to_string(root.b));
  }
  return enc;
}

}  // namespace multbound

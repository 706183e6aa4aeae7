#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regshift {

using Symbols = std::vector<int>;        ///< symbol indices into a Dfa alphabet
using StateSequence = std::vector<int>;  ///< induced states s_1 .. s_{T+1}

/// Complete deterministic finite automaton over a character alphabet.
///
/// States are the dense indices 0..num_states()-1 and symbols the indices of
/// the alphabet string. The transition table is total. Instances are
/// immutable once constructed.
class Dfa {
 public:
  /// Validates and builds a DFA. `table[s][a]` is the successor of state `s`
  /// on the symbol `alphabet[a]`. Throws InvalidParameter on any violation.
  Dfa(std::string alphabet, const std::vector<std::vector<int>>& table, int start,
      const std::vector<int>& accepting);

  int num_states() const { return num_states_; }
  int num_symbols() const { return static_cast<int>(alphabet_.size()); }
  const std::string& alphabet() const { return alphabet_; }
  int start() const { return start_; }

  int next(int state, int symbol) const {
    return transition_[static_cast<std::size_t>(state) * alphabet_.size() +
                       static_cast<std::size_t>(symbol)];
  }
  bool is_accepting(int state) const { return accepting_[static_cast<std::size_t>(state)] != 0; }
  std::vector<int> accepting_states() const;

  /// Index of `c` in the alphabet, or -1.
  int symbol_index(char c) const;

  /// Encodes a text string; throws InvalidInput naming the first bad position.
  Symbols encode(std::string_view text) const;
  std::string decode(std::span<const int> symbols) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::string alphabet_;
  int num_states_ = 0;
  std::vector<int> transition_;
  int start_ = 0;
  std::vector<char> accepting_;
};

Dfa build_parity_dfa();
Dfa build_mod_k_dfa(int k);

/// Induced state sequence of length |x|+1 starting at the start state.
StateSequence run(const Dfa& dfa, std::span<const int> x);
StateSequence run(const Dfa& dfa, std::string_view x);

bool accepts(const Dfa& dfa, std::span<const int> x);
bool accepts(const Dfa& dfa, std::string_view x);

/// Same states and transitions, accepting set replaced by its complement.
Dfa complement(const Dfa& dfa);

inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 20;

/// All accepted strings of length <= max_len in length-then-lexicographic
/// (alphabet index) order. Throws ResourceError when |alphabet|^max_len
/// exceeds `budget`.
std::vector<std::string> enumerate_language(const Dfa& dfa, int max_len,
                                            std::size_t budget = kDefaultEnumerationBudget);

// Text format:
//   dfa v1
//   states <n>
//   alphabet <chars>
//   start <i>
//   accept <i,j,...>
//   <n lines of |alphabet| space-separated successor indices>
void write_dfa(std::ostream& out, const Dfa& dfa);
Dfa read_dfa(std::istream& in);
Dfa load_dfa(const std::string& path);
void save_dfa(const std::string& path, const Dfa& dfa);

}  // namespace regshift

#ifndef PALIMORPH_EERTREE_HPP
#define PALIMORPH_EERTREE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "palimorph/word.hpp"

namespace palimorph {

/// All distinct palindromic factors of the scanned text, arranged so that the
/// node for a·p·a hangs below the node for p.  Node 0 is the imaginary root
/// (length -1, parent of the single letters), node 1 the empty palindrome.
class PalindromeTree {
 public:
  struct Node {
    int len = 0;
    int suffix_link = 0;
    int parent = -1;           // node this one extends by one letter on each side
    std::uint8_t letter = 0;   // that letter
    std::map<std::uint8_t, int> children;
  };

  explicit PalindromeTree(AlphabetPtr alphabet);

  /// Builds the tree from an explicit palindrome set, which must contain the
  /// trimmed core of each of its members.  The result is frozen: append is
  /// no longer available because no scan text backs the tree.
  static PalindromeTree from_palindromes(const AlphabetPtr& alphabet,
                                         const std::set<Word>& palindromes);

  /// Appends one symbol; amortized constant work.  Returns the id of a newly
  /// created node or -1 when no new palindrome appeared.
  int append(std::uint8_t symbol);
  void append(const Word& w);

  std::size_t node_count() const { return nodes_.size(); }
  const Node& node(int id) const { return nodes_[id]; }

  /// Number of distinct palindromic factors seen (roots excluded).
  std::size_t distinct_palindromes() const { return nodes_.size() - 2; }

  /// Count of distinct palindromes per exact length.
  std::vector<std::size_t> census_by_length() const;

  /// Ids from the innermost seed (a letter or the empty word) out to the
  /// longest palindrome, each obtained from the previous by wrapping one
  /// letter around both ends.  The deepest maximal chain in the tree.
  std::vector<int> longest_branch() const;

  /// Reconstructs the palindrome a node stands for.
  Word node_word(int id) const;

  const AlphabetPtr& alphabet() const { return alphabet_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<Node> nodes_;
  std::vector<std::uint8_t> text_;
  int active_ = 1;
  bool frozen_ = false;
};

}  // namespace palimorph

#endif

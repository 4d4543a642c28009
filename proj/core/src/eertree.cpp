#include "palimorph/eertree.hpp"

#include <algorithm>
#include <stdexcept>

namespace palimorph {

PalindromeTree::PalindromeTree(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("palindrome tree needs an alphabet");
  Node imaginary;
  imaginary.len = -1;
  imaginary.suffix_link = 0;
  Node empty;
  empty.len = 0;
  empty.suffix_link = 0;
  nodes_.push_back(imaginary);
  nodes_.push_back(empty);
}

PalindromeTree PalindromeTree::from_palindromes(const AlphabetPtr& alphabet,
                                                const std::set<Word>& palindromes) {
  PalindromeTree tree(alphabet);
  tree.frozen_ = true;
  std::vector<const Word*> ordered;
  ordered.reserve(palindromes.size());
  for (const Word& p : palindromes) {
    if (!is_palindrome(p)) throw std::invalid_argument("set contains a non-palindrome");
    if (!p.empty()) ordered.push_back(&p);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Word* a, const Word* b) { return a->size() < b->size(); });
  std::map<Word, int> id_of;
  id_of.emplace(Word::empty(alphabet), 1);
  for (const Word* p : ordered) {
    int parent;
    if (p->size() == 1) {
      parent = 0;
    } else {
      auto it = id_of.find(p->subword(1, p->size() - 2));
      if (it == id_of.end())
        throw std::invalid_argument("palindrome set is not closed under trimming");
      parent = it->second;
    }
    Node fresh;
    fresh.len = static_cast<int>(p->size());
    fresh.suffix_link = 1;  // not meaningful for a frozen tree
    fresh.parent = parent;
    fresh.letter = (*p)[0];
    int id = static_cast<int>(tree.nodes_.size());
    tree.nodes_.push_back(fresh);
    tree.nodes_[parent].children.emplace((*p)[0], id);
    id_of.emplace(*p, id);
  }
  return tree;
}

int PalindromeTree::append(std::uint8_t symbol) {
  if (frozen_) throw std::logic_error("cannot append to a tree built from a set");
  if (symbol >= alphabet_->size())
    throw std::invalid_argument("symbol outside the tree's alphabet");
  text_.push_back(symbol);
  std::size_t pos = text_.size() - 1;

  auto extendable = [&](int node) {
    int len = nodes_[node].len;
    return static_cast<long>(pos) - len - 1 >= 0 && text_[pos - len - 1] == symbol;
  };

  int x = active_;
  while (!extendable(x)) x = nodes_[x].suffix_link;

  auto it = nodes_[x].children.find(symbol);
  if (it != nodes_[x].children.end()) {
    active_ = it->second;
    return -1;
  }

  int link;
  if (nodes_[x].len + 2 == 1) {
    link = 1;  // single letters hang off the empty palindrome by suffix link
  } else {
    int y = nodes_[x].suffix_link;
    while (!extendable(y)) y = nodes_[y].suffix_link;
    link = nodes_[y].children.at(symbol);
  }

  Node fresh;
  fresh.len = nodes_[x].len + 2;
  fresh.suffix_link = link;
  fresh.parent = x;
  fresh.letter = symbol;
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(fresh);
  nodes_[x].children.emplace(symbol, id);
  active_ = id;
  return id;
}

void PalindromeTree::append(const Word& w) {
  if (!same_alphabet(w.alphabet(), alphabet_))
    throw std::invalid_argument("word over a different alphabet");
  for (std::uint8_t s : w.symbols()) append(s);
}

std::vector<std::size_t> PalindromeTree::census_by_length() const {
  std::size_t max_len = 0;
  for (std::size_t i = 2; i < nodes_.size(); ++i)
    max_len = std::max(max_len, static_cast<std::size_t>(nodes_[i].len));
  std::vector<std::size_t> counts(max_len + 1, 0);
  for (std::size_t i = 2; i < nodes_.size(); ++i) ++counts[nodes_[i].len];
  return counts;
}

std::vector<int> PalindromeTree::longest_branch() const {
  int deepest = -1;
  for (std::size_t i = 2; i < nodes_.size(); ++i)
    if (deepest < 0 || nodes_[i].len > nodes_[deepest].len)
      deepest = static_cast<int>(i);  // first created wins ties
  std::vector<int> chain;
  for (int id = deepest; id > 1; id = nodes_[id].parent) chain.push_back(id);
  // Even-length chains bottom out at the empty palindrome.
  if (!chain.empty() && nodes_[chain.back()].len % 2 == 0) chain.push_back(1);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Word PalindromeTree::node_word(int id) const {
  if (id <= 0) throw std::invalid_argument("no word for the imaginary root");
  std::vector<std::uint8_t> outer;  // letters from the outside in
  int at = id;
  while (at > 1) {  // the two roots carry no letter
    outer.push_back(nodes_[at].letter);
    at = nodes_[at].parent;
  }
  std::vector<std::uint8_t> symbols(outer.begin(), outer.end());
  // Walks ending at the imaginary root saw the centre letter once already.
  std::size_t mirror_from = (at == 0) ? outer.size() - 1 : outer.size();
  for (std::size_t i = mirror_from; i-- > 0;) symbols.push_back(outer[i]);
  return Word(alphabet_, std::move(symbols));
}

}  // namespace palimorph

#include "bqs/fundamental.hpp"

#include <algorithm>

#include "bqs/errors.hpp"

namespace bqs {

namespace {

struct Letter {
  std::size_t offset;  // class inside the block, 0-based
  bool opens_block;    // first letter of a block: strictly after the previous letter
};

class ChainEnumerator {
 public:
  ChainEnumerator(const PVector& index, Alphabet alphabet)
      : alphabet_(alphabet), out_(alphabet), exps_(alphabet.size(), 0) {
    for (int k = 1; k <= index.size(); ++k) {
      bool first = true;
      auto block = index.block(k);
      for (std::size_t j = 0; j < block.size(); ++j) {
        for (Exponent r = 0; r < block[j]; ++r) {
          letters_.push_back(Letter{j, first});
          first = false;
        }
      }
    }
  }

  Polynomial run() && {
    visit(0, 1);
    return std::move(out_);
  }

 private:
  // `low` is the smallest position the next letter may take, before the
  // strictness adjustment for a block opener.
  void visit(std::size_t letter, int low) {
    if (letter == letters_.size()) {
      out_.add_term(exps_, 1);
      return;
    }
    const Letter& l = letters_[letter];
    const int start = (l.opens_block && letter > 0) ? low + 1 : low;
    for (int i = start; i <= alphabet_.n; ++i) {
      const std::size_t flat = static_cast<std::size_t>(i - 1) * alphabet_.p + l.offset;
      ++exps_[flat];
      visit(letter + 1, i);
      --exps_[flat];
    }
  }

  Alphabet alphabet_;
  Polynomial out_;
  ExponentVector exps_;
  std::vector<Letter> letters_;
};

}  // namespace

Polynomial chain_polynomial(const PVector& index, Alphabet alphabet) {
  validate_alphabet(alphabet);
  if (index.p() != alphabet.p) {
    throw DimensionError("index has p=" + std::to_string(index.p()) + ", alphabet has p=" +
                         std::to_string(alphabet.p));
  }
  return ChainEnumerator(index, alphabet).run();
}

Polynomial fundamental(const PComposition& c, Alphabet alphabet) {
  return chain_polynomial(c.vector(), alphabet);
}

RecursiveFundamentalBuilder::RecursiveFundamentalBuilder(Alphabet alphabet)
    : alphabet_(alphabet) {
  validate_alphabet(alphabet);
}

const Polynomial& RecursiveFundamentalBuilder::build(const PComposition& c) {
  if (c.p() != alphabet_.p) throw DimensionError("composition and alphabet disagree on p");
  return build(c.vector().entries(), 1);
}

const Polynomial& RecursiveFundamentalBuilder::build(const std::vector<Exponent>& entries,
                                                     int first) {
  auto key = std::make_pair(entries, first);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Polynomial result(alphabet_);
  const std::size_t p = static_cast<std::size_t>(alphabet_.p);
  if (entries.empty()) {
    result = Polynomial::constant(alphabet_, 1);
  } else if (first <= alphabet_.n) {
    // Chains that avoid index `first` altogether.
    result += build(entries, first + 1);

    const auto lead = static_cast<std::size_t>(
        std::find_if(entries.begin(), entries.end(), [](Exponent e) { return e != 0; }) -
        entries.begin());
    if (lead >= p) {
      throw CompositionError("first block of a composition is zero");
    }
    std::vector<Exponent> rest = entries;
    --rest[lead];
    const bool block_empty =
        std::all_of(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(p),
                    [](Exponent e) { return e == 0; });
    const Monomial var = Monomial::variable(alphabet_, first, static_cast<int>(lead) + 1);
    if (block_empty) {
      rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(p));
      result.add_scaled(build(rest, first + 1), 1, var);
    } else {
      result.add_scaled(build(rest, first), 1, var);
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

FExpansion expand_in_f_basis(const Polynomial& f) {
  const Alphabet alphabet = f.alphabet();
  FExpansion out;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto& [lead, coeff] = *rest.begin();
    PVector v(alphabet.p, lead);
    PVector c = v.truncated(length(v));
    if (!is_p_composition(c)) {
      throw NotQuasisymmetricError("leading monomial exponent (" + to_string(v) +
                                   ") is not a composition followed by zeros");
    }
    FTerm term{coeff, PComposition(std::move(c))};
    rest.add_scaled(fundamental(term.composition, alphabet), -term.coefficient,
                    Monomial(alphabet));
    out.push_back(std::move(term));
  }
  return out;
}

FExpansion product_in_f_basis(const PComposition& a, const PComposition& b, int ambient) {
  if (a.p() != b.p()) throw DimensionError("compositions disagree on p");
  // A composition never has an all-zero block, so every c in the support has
  // size(c) <= |c| = |a| + |b|.  size(a) + size(b) is not enough: for p = 1,
  // F_2 * F_2 contains F_121.
  const auto minimal = static_cast<int>(a.total() + b.total());
  if (ambient == 0) ambient = minimal;
  if (ambient < minimal) {
    throw DimensionError("ambient size " + std::to_string(ambient) + " is below |a|+|b|=" +
                         std::to_string(minimal));
  }
  if (ambient == 0) return {FTerm{1, PComposition::empty(a.p())}};
  const Alphabet alphabet{a.p(), ambient};
  return expand_in_f_basis(fundamental(a, alphabet) * fundamental(b, alphabet));
}

Polynomial evaluate(const FExpansion& expansion, Alphabet alphabet) {
  Polynomial out(alphabet);
  for (const auto& term : expansion) {
    out.add_scaled(fundamental(term.composition, alphabet), term.coefficient, Monomial(alphabet));
  }
  return out;
}

}  // namespace bqs

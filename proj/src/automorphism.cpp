#include "fbc/automorphism.hpp"

#include <algorithm>

namespace fbc {

Automorphism::Automorphism(Alphabet alphabet, std::vector<Word> images,
                           std::vector<Word> inverse_images)
    : alphabet_(std::move(alphabet)),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  if (alphabet_.rank() == 0) throw SpecError("rank must be at least 1");
  if (images_.size() != rank() || inverse_images_.size() != rank())
    throw SpecError("image tables do not match the rank");
  auto check_range = [&](const std::vector<Word>& table) {
    for (const auto& w : table)
      for (Letter x : w)
        if (x.generator() >= rank())
          throw SpecError("image uses a generator outside the alphabet");
  };
  check_range(images_);
  check_range(inverse_images_);
  for (std::size_t g = 0; g < rank(); ++g) {
    const Word x{Letter(g, 1)};
    if (apply(apply_inverse(x)) != x || apply_inverse(apply(x)) != x)
      throw SpecError("inverse_images is not inverse to images at generator '" +
                      alphabet_.name(g) + "'");
  }
  for (const auto& w : images_) lipschitz_ = std::max(lipschitz_, w.size());
  for (const auto& w : inverse_images_)
    inverse_lipschitz_ = std::max(inverse_lipschitz_, w.size());
}

Word Automorphism::substitute(const std::vector<Word>& table, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter x : w) {
    const auto& img = table[x.generator()].vec();
    if (x.sign() > 0) {
      for (Letter y : img) push_reduced(out, y);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        push_reduced(out, it->inverse());
    }
  }
  return Word::from_reduced(std::move(out));
}

Word Automorphism::apply_power(const Word& w, long k) const {
  Word out = w;
  for (long i = 0; i < k; ++i) out = apply(out);
  for (long i = 0; i > k; --i) out = apply_inverse(out);
  return out;
}

Word Automorphism::letter_power(Letter x, long k) const {
  return apply_power(Word::from_reduced({x}), k);
}

Automorphism inverse(const Automorphism& phi) {
  return Automorphism(phi.alphabet(), phi.inverse_images(), phi.images());
}

Automorphism power(const Automorphism& phi, std::size_t k) {
  std::vector<Word> fwd, back;
  for (std::size_t g = 0; g < phi.rank(); ++g) {
    fwd.push_back(phi.letter_power(Letter(g, 1), static_cast<long>(k)));
    back.push_back(phi.letter_power(Letter(g, 1), -static_cast<long>(k)));
  }
  return Automorphism(phi.alphabet(), std::move(fwd), std::move(back));
}

}  // namespace fbc

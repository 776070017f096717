#pragma once

#include <cstddef>
#include <vector>

#include "fbc/words.hpp"

namespace fbc {

/// An automorphism of the free group of rank n, given by the images of the
/// generators together with the images under its inverse. Construction
/// verifies that the two maps compose to the identity on generators.
class Automorphism {
 public:
  /// Throws SpecError naming the first generator where phi(phi^-1(x)) != x
  /// or phi^-1(phi(x)) != x, or when ranks disagree or rank is 0.
  Automorphism(Alphabet alphabet, std::vector<Word> images,
               std::vector<Word> inverse_images);

  std::size_t rank() const { return alphabet_.rank(); }
  const Alphabet& alphabet() const { return alphabet_; }
  const Word& image(std::size_t g) const { return images_.at(g); }
  const Word& inverse_image(std::size_t g) const {
    return inverse_images_.at(g);
  }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  /// max |phi(x)| over generators.
  std::size_t lipschitz() const { return lipschitz_; }
  /// max |phi^-1(x)| over generators.
  std::size_t inverse_lipschitz() const { return inverse_lipschitz_; }

  Word apply(const Word& w) const { return substitute(images_, w); }
  Word apply_inverse(const Word& w) const {
    return substitute(inverse_images_, w);
  }
  /// phi^k for any integer k; k < 0 uses the inverse images.
  Word apply_power(const Word& w, long k) const;

  /// Reduced word for phi^k(x) for a single letter.
  Word letter_power(Letter x, long k) const;

 private:
  static Word substitute(const std::vector<Word>& table, const Word& w);

  Alphabet alphabet_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
  std::size_t lipschitz_ = 0;
  std::size_t inverse_lipschitz_ = 0;
};

/// phi^-1 as an Automorphism in its own right.
Automorphism inverse(const Automorphism& phi);

/// phi^k for k >= 1, with inverse images phi^-k.
Automorphism power(const Automorphism& phi, std::size_t k);

}  // namespace fbc

#pragma once

#include <vector>

#include "swancalc/exact/field.hpp"

namespace swancalc::exact {

/// Field homomorphism F_{p^k} -> F_{p^K} (k | K), fixed by the image of the
/// generator x of the source. The default choice is the smallest root of
/// the source modulus in the target.
class Embedding {
 public:
  Embedding() = default;
  Embedding(const Field* src, const Field* dst, Elem image_of_x);

  const Field* source() const { return src_; }
  const Field* target() const { return dst_; }
  Elem image_of_x() const { return img_; }
  Elem operator()(Elem a) const;
  /// this after other: other.source -> this.target.
  Embedding after(const Embedding& other) const;

 private:
  const Field* src_ = nullptr;
  const Field* dst_ = nullptr;
  Elem img_ = 0;
  std::vector<Elem> powers_;
};

Embedding canonical_embedding(const Field* src, const Field* dst);
Embedding identity_embedding(const Field* f);

}  // namespace swancalc::exact

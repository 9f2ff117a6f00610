#include "swancalc/exact/embedding.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "swancalc/error.hpp"
#include "swancalc/exact/poly.hpp"

namespace swancalc::exact {

Embedding::Embedding(const Field* src, const Field* dst, Elem image_of_x) : src_(src), dst_(dst), img_(image_of_x) {
  if (src->p() != dst->p() || dst->k() % src->k() != 0) throw InputError("no embedding between these fields");
  powers_.resize(src->k());
  Elem c = dst->one();
  for (int i = 0; i < src->k(); ++i) {
    powers_[i] = c;
    c = dst->mul(c, img_);
  }
}

Elem Embedding::operator()(Elem a) const {
  if (src_ == dst_ && img_ == src_->x()) return a;
  Elem r = 0;
  for (int i = 0; i < src_->k(); ++i) {
    auto d = static_cast<std::uint32_t>(a % src_->p());
    a /= src_->p();
    if (d) r = dst_->add(r, dst_->scale(powers_[i], d));
  }
  return r;
}

Embedding Embedding::after(const Embedding& other) const {
  if (other.target() != src_) throw IntegrityError("embedding composition mismatch");
  return Embedding(other.source(), dst_, (*this)(other.image_of_x()));
}

Embedding identity_embedding(const Field* f) { return Embedding(f, f, f->x()); }

Embedding canonical_embedding(const Field* src, const Field* dst) {
  if (src == dst) return identity_embedding(src);
  if (src->k() == 1) return Embedding(src, dst, 0);
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, Elem> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({src, dst});
    if (it != cache.end()) return Embedding(src, dst, it->second);
  }
  std::vector<Elem> c;
  for (auto m : src->modulus()) c.push_back(dst->from_int(m));
  auto rs = roots(Poly(dst, c));
  if (rs.empty()) throw InputError("no embedding between these fields");
  std::lock_guard<std::mutex> lock(mu);
  cache[{src, dst}] = rs.front();
  return Embedding(src, dst, rs.front());
}

}  // namespace swancalc::exact

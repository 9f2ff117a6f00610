#include "swancalc/curve/pointcount.hpp"

#include <numeric>

#include "swancalc/error.hpp"
#include "swancalc/exact/embedding.hpp"

namespace swancalc::curve {

using exact::CyclotomicInt;

namespace {

struct LayerEval {
  std::vector<Elem> num, den;
  Elem at_infinity = 0;  // g(inf) when infinity is not a boundary point
};

Elem horner(const Field* F, const std::vector<Elem>& c, Elem t) {
  Elem v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = F->add(F->mul(v, t), *it);
  return v;
}

}  // namespace

std::vector<std::vector<std::int64_t>> frobenius_histogram(const Cover& cover, int max_m) {
  const auto& G = cover.group();
  const Field* K = cover.base();
  const std::uint32_t p = K->p();
  const auto& layers = cover.layers();
  bool inf_in_s = false;
  for (auto& x : cover.boundary()) inf_in_s = inf_in_s || x.infinity;
  std::vector<std::vector<std::int64_t>> hist;
  for (int m = 1; m <= max_m; ++m) {
    if (K->k() * m > 12) {
      throw UnsupportedError("point counting over F_" + std::to_string(p) + "^" + std::to_string(K->k() * m) + " is outside the supported fields");
    }
    auto Fp = exact::make_field(p, K->k() * m);
    const Field* F = Fp.get();
    auto emb = exact::canonical_embedding(K, F);
    const std::uint64_t Q = F->q();
    std::vector<LayerEval> ev;
    std::vector<std::uint64_t> kummer_c(layers.size(), 0);
    for (std::size_t i = 0; i < layers.size(); ++i) {
      auto g = reduced(K, layers[i].g);
      LayerEval le;
      for (auto c : g.num) le.num.push_back(emb(c));
      for (auto c : g.den) le.den.push_back(emb(c));
      if (!inf_in_s) le.at_infinity = g.num.size() == g.den.size() ? F->div(le.num.back(), le.den.back()) : 0;
      ev.push_back(std::move(le));
      if (layers[i].kind == LayerKind::Kummer) {
        const std::uint64_t e = static_cast<std::uint64_t>(layers[i].degree);
        Elem zeta = emb(K->pow(K->generator(), static_cast<std::int64_t>((K->q() - 1) / e)));
        // emb(zeta) = gen^{c (Q-1)/e}; Frobenius exponent a = log(g) / c mod e.
        std::uint64_t c = F->log(zeta) / ((Q - 1) / e);
        std::uint64_t cinv = 0;
        for (std::uint64_t x = 1; x < e; ++x) {
          if (c * x % e == 1) cinv = x;
        }
        kummer_c[i] = cinv;
      }
    }
    std::vector<std::uint32_t> tr_basis;
    for (int i = 0; i < F->k(); ++i) {
      Elem b = 1;
      for (int j = 0; j < i; ++j) b *= p;
      tr_basis.push_back(F->trace(b));
    }
    auto trace = [&](Elem v) {
      std::uint64_t s = 0;
      for (int i = 0; i < F->k(); ++i) {
        s += static_cast<std::uint64_t>(v % p) * tr_basis[static_cast<std::size_t>(i)];
        v /= p;
      }
      return static_cast<int>(s % p);
    };
    std::vector<char> excluded(Q, 0);
    for (auto& x : cover.boundary()) {
      if (!x.infinity) excluded[emb(x.a)] = 1;
    }
    std::vector<std::int64_t> h(static_cast<std::size_t>(G.size()), 0);
    std::vector<int> coords(layers.size());
    auto frob = [&](std::size_t i, Elem g) {
      if (layers[i].kind == LayerKind::ArtinSchreier) return trace(g);
      if (g == 0) throw IntegrityError("Kummer right-hand side vanishes outside the boundary");
      const std::uint64_t e = static_cast<std::uint64_t>(layers[i].degree);
      return static_cast<int>(F->log(g) % e * kummer_c[i] % e);
    };
    for (std::uint64_t t = 0; t < Q; ++t) {
      if (excluded[t]) continue;
      for (std::size_t i = 0; i < layers.size(); ++i) {
        Elem d = horner(F, ev[i].den, t);
        if (d == 0) throw IntegrityError("pole outside the boundary");
        coords[i] = frob(i, F->div(horner(F, ev[i].num, t), d));
      }
      ++h[static_cast<std::size_t>(G.from_coords(coords))];
    }
    if (!inf_in_s) {
      for (std::size_t i = 0; i < layers.size(); ++i) coords[i] = frob(i, ev[i].at_infinity);
      ++h[static_cast<std::size_t>(G.from_coords(coords))];
    }
    hist.push_back(std::move(h));
  }
  return hist;
}

LFunction character_l_function(const Cover& cover, const std::vector<std::vector<std::int64_t>>& hist,
                               const std::vector<int>& chi) {
  const auto& G = cover.group();
  const auto& orders = G.abelian_orders();
  if (chi.size() != orders.size()) throw InputError("character exponent vector has the wrong length");
  const std::int64_t q = static_cast<std::int64_t>(cover.base()->q());
  std::uint32_t M = 1;
  for (int o : orders) M = std::lcm(M, static_cast<std::uint32_t>(o));
  auto value = [&](int a) {
    auto c = G.coords(a);
    std::int64_t e = 0;
    for (std::size_t i = 0; i < c.size(); ++i) e += static_cast<std::int64_t>(chi[i]) * c[i] * (M / static_cast<std::uint32_t>(orders[i]));
    return e % M;
  };
  bool trivial = true;
  for (std::size_t i = 0; i < chi.size(); ++i) trivial = trivial && chi[i] % orders[i] == 0;
  LFunction L;
  L.horizon = static_cast<int>(hist.size());
  if (trivial) {
    // N_m = A q^m + B for P^1 minus rational points; chi_c = A + B.
    if (hist.size() < 2) throw InputError("the trivial character needs two point counts");
    std::int64_t n1 = 0, n2 = 0;
    for (auto x : hist[0]) n1 += x;
    for (auto x : hist[1]) n2 += x;
    if ((n2 - n1) % (q * q - q) != 0) throw IntegrityError("point counts are not of the form A q^m + B");
    std::int64_t A = (n2 - n1) / (q * q - q);
    std::int64_t B = n1 - A * q;
    L.euler_char = A + B;
    L.settled = true;
    L.pure = true;
    L.degree = 0;
    return L;
  }
  std::vector<CyclotomicInt> S(hist.size() + 1, CyclotomicInt::integer(0));
  for (std::size_t m = 0; m < hist.size(); ++m) {
    std::vector<std::int64_t> c(M, 0);
    for (int a = 0; a < G.size(); ++a) c[static_cast<std::size_t>(value(a))] += hist[m][static_cast<std::size_t>(a)];
    CyclotomicInt s(M);
    for (std::uint32_t k = 0; k < M; ++k) {
      if (c[k]) s = s + c[k] * CyclotomicInt::zeta(M, k);
    }
    S[m + 1] = s;
  }
  // Newton: k c_k = sum_{i=1}^k S_i c_{k-i}.
  L.coeffs.push_back(CyclotomicInt::integer(1));
  for (std::size_t k = 1; k <= hist.size(); ++k) {
    CyclotomicInt acc(M);
    for (std::size_t i = 1; i <= k; ++i) acc = acc + S[i] * L.coeffs[k - i];
    L.coeffs.push_back(acc.divided(static_cast<std::int64_t>(k)));
  }
  for (int k = L.horizon; k >= 0; --k) {
    if (!L.coeffs[static_cast<std::size_t>(k)].is_zero()) {
      L.degree = k;
      break;
    }
  }
  L.settled = L.degree < L.horizon;
  // Boundary points where chi is unramified give weight-zero eigenvalues.
  int unramified = 0;
  for (int x = 0; x < static_cast<int>(cover.boundary().size()); ++x) {
    bool ram = false;
    for (int s : cover.places(x).front().inertia) ram = ram || value(s) != 0;
    unramified += ram ? 0 : 1;
  }
  const auto& cd = L.coeffs[static_cast<std::size_t>(L.degree)];
  std::int64_t w = L.degree - unramified;
  L.pure = w >= 0;
  if (L.pure) {
    std::int64_t qw = 1;
    for (std::int64_t i = 0; i < w; ++i) qw *= q;
    L.pure = cd * cd.conj() == CyclotomicInt::integer(qw);
  }
  L.euler_char = -L.degree;
  return L;
}

LFunction character_l_function(const Cover& cover, const std::vector<int>& chi, int expected_degree) {
  int horizon = std::max(2, expected_degree + 1);
  return character_l_function(cover, frobenius_histogram(cover, horizon), chi);
}

}  // namespace swancalc::curve

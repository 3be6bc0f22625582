#include "qfodc/rmatrix.hpp"

#include "qfodc/error.hpp"

namespace qfodc {

Scalar RMatrix::entry(int i, int j, int k, int l) const {
  auto it = entries_.find({i, j, k, l});
  return it == entries_.end() ? Scalar() : it->second;
}

void RMatrix::set_entry(int i, int j, int k, int l, const Scalar& v) {
  if (v.is_zero()) {
    entries_.erase({i, j, k, l});
  } else {
    entries_[{i, j, k, l}] = v;
  }
}

RMatrix RMatrix::compose(const RMatrix& o) const {
  if (n_ != o.n_) throw Error("R-matrix size mismatch");
  RMatrix r(n_);
  for (const auto& [ab, v] : entries_) {
    for (int k = 1; k <= n_; ++k)
      for (int l = 1; l <= n_; ++l) {
        Scalar w = o.entry(ab[2], ab[3], k, l);
        if (w.is_zero()) continue;
        Scalar cur = r.entry(ab[0], ab[1], k, l);
        r.set_entry(ab[0], ab[1], k, l, cur + v * w);
      }
  }
  return r;
}

bool RMatrix::is_identity() const {
  for (const auto& [ab, v] : entries_) {
    bool diag = (ab[0] == ab[2] && ab[1] == ab[3]);
    if (!diag || !v.is_one()) return false;
  }
  return entries_.size() == static_cast<size_t>(n_) * static_cast<size_t>(n_);
}

RMatrix RMatrix::scaled(const Scalar& c) const {
  RMatrix r(n_);
  if (c.is_zero()) return r;
  for (const auto& [ab, v] : entries_) r.entries_[ab] = v * c;
  return r;
}

RMatrix RMatrix::operator-(const RMatrix& o) const {
  RMatrix r = *this;
  for (const auto& [ab, v] : o.entries_) {
    Scalar cur = r.entry(ab[0], ab[1], ab[2], ab[3]);
    r.set_entry(ab[0], ab[1], ab[2], ab[3], cur - v);
  }
  return r;
}

RMatrix RMatrix::inverse() const {
  size_t dim = static_cast<size_t>(n_) * static_cast<size_t>(n_);
  auto flat = [&](int i, int j) { return static_cast<size_t>((i - 1) * n_ + (j - 1)); };
  FracMatrix m(dim, dim);
  for (const auto& [ab, v] : entries_)
    m.at(flat(ab[0], ab[1]), flat(ab[2], ab[3])) = ScalarFraction(v);
  auto inv = m.inverse();
  if (!inv) throw Error("singular R-matrix");
  RMatrix r(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        for (int l = 1; l <= n_; ++l) {
          const ScalarFraction& e = inv->at(flat(i, j), flat(k, l));
          if (e.is_zero()) continue;
          auto s = e.as_scalar();
          if (!s) throw Error("non-polynomial R-matrix inverse entry");
          r.set_entry(i, j, k, l, *s);
        }
  return r;
}

bool RMatrix::braid_relation_holds() const {
  // operators on triple indices (a,b,c); R12 acts on (a,b), R23 on (b,c)
  using Key = std::array<int, 3>;
  using Op = std::map<Key, std::map<Key, Scalar>>;

  auto apply12 = [&](const Op& in) {
    Op out;
    for (const auto& [src, row] : in)
      for (const auto& [mid, v] : row)
        for (const auto& [ab, w] : entries_) {
          if (ab[2] != mid[0] || ab[3] != mid[1]) continue;
          Key dst{ab[0], ab[1], mid[2]};
          auto& cell = out[src][dst];
          cell += v * w;
          if (cell.is_zero()) out[src].erase(dst);
        }
    return out;
  };
  auto apply23 = [&](const Op& in) {
    Op out;
    for (const auto& [src, row] : in)
      for (const auto& [mid, v] : row)
        for (const auto& [ab, w] : entries_) {
          if (ab[2] != mid[1] || ab[3] != mid[2]) continue;
          Key dst{mid[0], ab[0], ab[1]};
          auto& cell = out[src][dst];
          cell += v * w;
          if (cell.is_zero()) out[src].erase(dst);
        }
    return out;
  };

  Op id;
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      for (int c = 1; c <= n_; ++c) id[{a, b, c}][{a, b, c}] = Scalar(1);

  Op lhs = apply12(apply23(apply12(id)));
  Op rhs = apply23(apply12(apply23(id)));
  for (auto* op : {&lhs, &rhs})
    for (auto it = op->begin(); it != op->end();) {
      if (it->second.empty()) it = op->erase(it);
      else ++it;
    }
  return lhs == rhs;
}

RMatrix build_rhat(const GroupSpec& g) {
  const int n = g.n();
  RMatrix r(n);
  Scalar q = Scalar::q_power(1);
  Scalar qdiff = Scalar::q_power(1) - Scalar::q_power(-1);
  switch (g.family()) {
    case GroupFamily::GLq:
    case GroupFamily::SLq: {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Scalar cur = r.entry(i, j, j, i);
          r.set_entry(i, j, j, i, cur + Scalar::q_power(i == j ? 1 : 0));
          if (j > i) {
            Scalar c2 = r.entry(i, j, i, j);
            r.set_entry(i, j, i, j, c2 + qdiff);
          }
        }
      break;
    }
    case GroupFamily::Oq:
    case GroupFamily::Spq: {
      Scalar eps(g.epsilon());
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          int bp = g.conjugate_index(b);
          long long e = (a == b ? 1 : 0) - (a == bp ? 1 : 0);
          Scalar cur = r.entry(a, b, b, a);
          r.set_entry(a, b, b, a, cur + Scalar::q_power(e));
          if (b > a) {
            Scalar c2 = r.entry(a, b, a, b);
            r.set_entry(a, b, a, b, c2 + qdiff);
          }
        }
      // - eps (q - q^{-1}) theta(a' - m) C^a_{a'} C^m_{m'} at rows (a,a'),
      // columns (m, m')
      for (int a = 1; a <= n; ++a) {
        int ap = g.conjugate_index(a);
        for (int m = 1; m <= n; ++m) {
          int mp = g.conjugate_index(m);
          if (theta_step(ap - m) == 0) continue;
          Scalar t = eps * qdiff * g.metric_entry(a) * g.metric_entry(m);
          Scalar cur = r.entry(a, ap, m, mp);
          r.set_entry(a, ap, m, mp, cur - t);
        }
      }
      break;
    }
  }
  return r;
}

}  // namespace qfodc

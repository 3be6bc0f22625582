#include "qfodc/group.hpp"

#include "qfodc/error.hpp"

namespace qfodc {

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::GLq: return "glq";
    case GroupFamily::SLq: return "slq";
    case GroupFamily::Oq: return "oq";
    case GroupFamily::Spq: return "spq";
  }
  return "?";
}

GroupFamily family_from_name(const std::string& s) {
  if (s == "glq") return GroupFamily::GLq;
  if (s == "slq") return GroupFamily::SLq;
  if (s == "oq") return GroupFamily::Oq;
  if (s == "spq") return GroupFamily::Spq;
  throw Error("unknown group family '" + s + "'");
}

GroupSpec GroupSpec::make(GroupFamily family, int n) {
  if (n < 1) throw Error("group size must be positive");
  GroupSpec g;
  g.family_ = family;
  g.n_ = n;
  switch (family) {
    case GroupFamily::GLq:
    case GroupFamily::SLq: {
      g.gamma_.reserve(static_cast<size_t>(n));
      for (int i = 1; i <= n; ++i) g.gamma_.push_back(Scalar::q_power(2 * i));
      if (family == GroupFamily::SLq) {
        g.exp_denom_ = n;
        g.z_ = Scalar::q_power(Exponent(-1, n));  // z^N = q^{-1}
      }
      break;
    }
    case GroupFamily::Oq:
    case GroupFamily::Spq: {
      if (family == GroupFamily::Spq && n % 2 != 0)
        throw Error("symplectic series needs even N");
      g.epsilon_ = (family == GroupFamily::Oq) ? 1 : -1;
      // C^i_{i'} = eps_i q^{rho_i}; rho stored in half-units below.
      std::vector<long long> rho2(static_cast<size_t>(n));
      int half = n / 2;
      // The braid relation pins the orientation: C^i_{i'} = eps_i q^{-rho_i}
      // with rho the usual half-sum weights (descending down the diagonal).
      for (int i = 1; i <= n; ++i) {
        long long r2;
        if (family == GroupFamily::Oq) {
          if (n % 2 == 1) {
            int mid = (n + 1) / 2;
            r2 = (i < mid) ? (n - 2 * i) : (i == mid ? 0 : n - 2 * i + 2);
          } else {
            r2 = (i <= half) ? (n - 2 * i) : (n - 2 * i + 2);
          }
        } else {
          r2 = (i <= half) ? (n - 2 * i + 2) : (n - 2 * i);
        }
        rho2[static_cast<size_t>(i - 1)] = -r2;
      }
      bool needs_half = false;
      for (long long r2 : rho2)
        if (r2 % 2 != 0) needs_half = true;
      g.exp_denom_ = needs_half ? 2 : 1;
      g.metric_.reserve(static_cast<size_t>(n));
      for (int i = 1; i <= n; ++i) {
        int sign = 1;
        if (family == GroupFamily::Spq && i > half) sign = -1;
        Scalar c = Scalar::monomial(sign, Exponent(rho2[static_cast<size_t>(i - 1)], 2));
        g.metric_.push_back(c);
      }
      break;
    }
  }
  return g;
}

const Scalar& GroupSpec::gamma(int i) const {
  if (gamma_.empty()) throw Unsupported("gamma weights not available for " + name());
  if (i < 1 || i > n_) throw Error("gamma index out of range");
  return gamma_[static_cast<size_t>(i - 1)];
}

const Scalar& GroupSpec::metric_entry(int i) const {
  if (metric_.empty()) throw Unsupported("no metric for " + name());
  if (i < 1 || i > n_) throw Error("metric index out of range");
  return metric_[static_cast<size_t>(i - 1)];
}

std::string GroupSpec::name() const {
  return family_name(family_) + "(" + std::to_string(n_) + ")";
}

}  // namespace qfodc

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qfodc/algebra.hpp"
#include "qfodc/fraction.hpp"
#include "qfodc/functional.hpp"
#include "qfodc/group.hpp"
#include "qfodc/rmatrix.hpp"

namespace qfodc {

// Evaluation engine for <functional, algebra element> by sparse contraction
// of the coproduct grid.  All single-cell tables are derived from the braid
// matrix and frozen at construction; evaluation is pure, so one engine can
// serve concurrent readers (the word-level memo is guarded by a mutex).
class PairingEngine {
 public:
  explicit PairingEngine(const GroupSpec& g);

  const GroupSpec& group() const { return g_; }
  const RMatrix& rhat() const { return rhat_; }
  const RMatrix& rhat_inv() const { return rinv_; }

  // <S^pa(l^{kind,a}_b), S^pl(u^c_d)>
  Scalar cell(LKind kind, int pa, int a, int b, int pl, int c, int d) const;
  // Single-atom pairing; rejects the square-of-antipode combination for the
  // metric families, which have no gamma weights wired.
  Scalar atom_pairing(const Atom& atom, const Letter& letter) const;
  // Value of l^{kind,k}_k on u^c_c.
  Scalar diag_value(LKind kind, int k, int c) const;
  // Value of a diagonal monomial character on u^c_c (always invertible).
  Scalar grouplike_value(const GroupLike& z, int c) const;
  Scalar grouplike_on_detq(const GroupLike& z) const;

  ScalarFraction eval(const FunctionalElement& f, const AlgebraElement& a) const;
  Scalar eval_monomial_word(const FuncMonomial& m, const Word& w) const;

  // Parity-0 atoms with a nonzero letter table; the monomial alphabet for
  // pairing-based zero tests.
  const std::vector<Atom>& alphabet() const { return alphabet_; }

  // Scans every atom monomial of length <= bound (including the counit) for
  // a nonzero pairing with e; nullopt means all pairings vanish.
  std::optional<FuncMonomial> pairing_nonzero_witness(const AlgebraElement& e,
                                                      int bound) const;

  // Values of f on every word in parity-0 letters of length <= bound,
  // sparsely (missing = zero).  Shares prefix work across the word tree.
  std::map<Word, ScalarFraction> value_table(const FunctionalElement& f, int bound) const;

 private:
  struct Row;     // one functional factor
  struct Column;  // one word slot
  using State = std::map<std::vector<std::uint8_t>, Scalar>;

  std::vector<Row> make_rows(const FuncMonomial& m) const;
  std::vector<Column> make_columns(const Word& w) const;
  State initial_state(const std::vector<Row>& rows) const;
  State process_column(const std::vector<Row>& rows, const State& in,
                       const Column& col) const;
  Scalar readout(const std::vector<Row>& rows, const State& st) const;

  GroupSpec g_;
  RMatrix rhat_;
  RMatrix rinv_;
  std::vector<Atom> alphabet_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<FuncMonomial, Word>, Scalar> memo_;
};

// Result of a degree-bounded span membership test.  Rejection is sound; an
// acceptance is certified only on words up to the bound.
struct SpanResult {
  bool in_span = false;
  std::vector<ScalarFraction> coefficients;
  int degree_bound = 0;
  std::string witness;  // inconsistent word, when not in span
};

SpanResult express_in_span(const PairingEngine& eng, const FunctionalElement& target,
                           const std::vector<FunctionalElement>& basis, int degree_bound);

// All words in parity-0 letters with length <= bound (includes the empty word).
std::vector<Word> enumerate_words(int n, int bound);

}  // namespace qfodc

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "posetlab/error.h"
#include "posetlab/gset.h"
#include "posetlab/poset.h"

namespace posetlab {

// Induced "N": a < b, c < d, c < b, with (a,c), (a,d), (b,d) incomparable.
struct NWitness {
  PointId a, b, c, d;
  friend bool operator==(const NWitness&, const NWitness&) = default;
};

class NotNFree : public Error {
 public:
  explicit NotNFree(NWitness w)
      : Error(ErrorKind::NotNFree, "poset contains an N"), witness_(w) {}
  const NWitness& witness() const { return witness_; }

 private:
  NWitness witness_;
};

// Lexicographically least witness quadruple (a, b, c, d), if any.
std::optional<NWitness> find_n(const Poset& p);

// Series-parallel expression over singleton leaves. Ser(upper, lower) puts
// every point of `lower` below every point of `upper`.
class SPTree {
 public:
  enum class Kind { Leaf, Par, Ser };

  static SPTree leaf(PointId point);
  static SPTree par(SPTree left, SPTree right);
  static SPTree ser(SPTree upper, SPTree lower);

  Kind kind() const { return kind_; }
  PointId point() const { return point_; }
  // Par: left/right. Ser: upper/lower.
  const SPTree& first() const { return *first_; }
  const SPTree& second() const { return *second_; }
  std::size_t leaf_count() const { return leaves_; }

 private:
  SPTree() = default;
  Kind kind_ = Kind::Leaf;
  PointId point_ = 0;
  std::size_t leaves_ = 1;
  std::shared_ptr<const SPTree> first_;
  std::shared_ptr<const SPTree> second_;
};

// `leaf`, `par(x,y)`, `ser(upper,lower)`.
std::string to_string(const SPTree& t);

// Builds the poset the expression denotes. Leaf k gets label labels[k] when
// labels are given (and "x<k>" otherwise).
Poset evaluate(const SPTree& t, const std::vector<std::string>* labels = nullptr);

// Throws NotNFree (with witness) or EmptyPoset.
SPTree decompose(const Poset& p);

// g-set of P + Q from the g-sets of P and Q.
GSet gset_par(const GSet& p, const GSet& q);

// g-set of upper / lower (Grundy product).
GSet gset_ser(const GSet& upper, const GSet& lower);

GSet gset_of(const SPTree& t);
Nimber grundy_nfree(const Poset& p);

}  // namespace posetlab

#pragma once

// Finite groups given by Cayley tables, and their left regular representation.
//
// Elements are indices 0..order-1 and element 0 is always the identity.
// compose(a, b) is the product a∘b; for permutation groups b acts first.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "qrf/linalg.hpp"

namespace qrf {

using Element = int;

// Unvalidated table as read from input. validate_group reports what is wrong
// with it; GroupTable only ever holds a table that passed.
struct CayleyTable {
  std::string name;
  std::vector<std::vector<Element>> compose;
  Element identity = 0;
  std::vector<std::string> labels;
};

struct GroupViolation {
  enum class Kind { kShape, kClosure, kIdentity, kInverse, kAssociativity };
  Kind kind;
  std::string message;
};

std::vector<GroupViolation> validate_group(const CayleyTable& table);

class GroupTable {
 public:
  // Throws GroupError listing the violations if the table is not a group.
  explicit GroupTable(CayleyTable table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return compose_.size(); }
  Element identity() const { return 0; }
  Element compose(Element a, Element b) const { return compose_[a][b]; }
  Element inverse(Element g) const { return inverse_[g]; }
  const std::vector<Element>& inverses() const { return inverse_; }
  const std::string& label(Element g) const { return labels_[g]; }
  bool contains(Element g) const { return g >= 0 && static_cast<std::size_t>(g) < order(); }

  CayleyTable table() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.compose_ == b.compose_; }

 private:
  std::string name_;
  std::vector<std::vector<Element>> compose_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// Z_n with compose(a, b) = (a + b) mod n. Throws std::invalid_argument for n = 0.
GroupPtr make_cyclic_group(int n);

// S_3 permuting {0,1,2}, canonical order [e, (01), (02), (12), (012), (021)].
GroupPtr make_symmetric_group_3();

// Images of 0,1,2 under the S_3 element with the given canonical index.
const std::vector<int>& s3_permutation(Element g);

class PermutationMatrix {
 public:
  explicit PermutationMatrix(std::vector<std::size_t> mapping);

  std::size_t dimension() const { return mapping_.size(); }
  // Index of the basis vector that |i> is sent to.
  std::size_t image(std::size_t i) const { return mapping_[i]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

  ComplexMatrix dense() const;
  PermutationMatrix operator*(const PermutationMatrix& rhs) const;
  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

// U(g)|h> = |g∘h>. Throws std::out_of_range for an invalid element.
PermutationMatrix left_regular_representation(const GroupTable& group, Element g);

}  // namespace qrf

#include "qrf/group.hpp"

#include <array>
#include <stdexcept>

#include "qrf/errors.hpp"

namespace qrf {
namespace {

constexpr std::size_t kMaxReportedPerKind = 16;

std::string triple(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

std::vector<GroupViolation> validate_group(const CayleyTable& table) {
  using Kind = GroupViolation::Kind;
  std::vector<GroupViolation> out;
  const auto& t = table.compose;
  const std::size_t n = t.size();

  if (n == 0) {
    out.push_back({Kind::kShape, "empty Cayley table"});
    return out;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a].size() != n) {
      out.push_back({Kind::kShape, "row " + std::to_string(a) + " has " + std::to_string(t[a].size()) +
                                       " entries, expected " + std::to_string(n)});
    }
  }
  if (!table.labels.empty() && table.labels.size() != n) {
    out.push_back({Kind::kShape, "label count does not match the order"});
  }
  if (!out.empty()) return out;

  const auto in_range = [n](Element x) { return x >= 0 && static_cast<std::size_t>(x) < n; };
  std::size_t closure_failures = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!in_range(t[a][b]) && closure_failures++ < kMaxReportedPerKind) {
        out.push_back({Kind::kClosure, "compose(" + std::to_string(a) + "," + std::to_string(b) +
                                           ") = " + std::to_string(t[a][b]) + " is not an element"});
      }
    }
  }
  // The remaining checks index the table by its own entries.
  if (closure_failures > 0) return out;

  if (table.identity != 0) {
    out.push_back({Kind::kIdentity, "identity must be element 0, got " + std::to_string(table.identity)});
  }
  const Element e = 0;
  for (std::size_t g = 0; g < n; ++g) {
    const auto gi = static_cast<Element>(g);
    if (t[e][g] != gi || t[g][e] != gi) {
      out.push_back({Kind::kIdentity, "element 0 is not a two-sided identity for " + std::to_string(g)});
      break;
    }
  }

  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h) found = t[g][h] == e && t[h][g] == e;
    if (!found) out.push_back({Kind::kInverse, "element " + std::to_string(g) + " has no two-sided inverse"});
  }

  std::size_t assoc_failures = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]] && assoc_failures++ < kMaxReportedPerKind) {
          out.push_back({Kind::kAssociativity,
                         "associativity fails for " + triple(static_cast<Element>(a), static_cast<Element>(b),
                                                             static_cast<Element>(c))});
        }
      }
    }
  }
  return out;
}

GroupTable::GroupTable(CayleyTable table) {
  const auto violations = validate_group(table);
  if (!violations.empty()) {
    std::string msg = "invalid group '" + table.name + "':";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw GroupError(msg);
  }
  name_ = std::move(table.name);
  compose_ = std::move(table.compose);
  const std::size_t n = compose_.size();
  inverse_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (compose_[g][h] == 0) inverse_[g] = static_cast<Element>(h);
    }
  }
  if (table.labels.empty()) {
    for (std::size_t g = 0; g < n; ++g) labels_.push_back(std::to_string(g));
  } else {
    labels_ = std::move(table.labels);
  }
}

CayleyTable GroupTable::table() const { return CayleyTable{name_, compose_, 0, labels_}; }

GroupPtr make_cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive, got " + std::to_string(n));
  CayleyTable t;
  t.name = "Z" + std::to_string(n);
  t.compose.assign(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t.compose[a][b] = (a + b) % n;
  }
  return std::make_shared<const GroupTable>(std::move(t));
}

const std::vector<int>& s3_permutation(Element g) {
  static const std::array<std::vector<int>, 6> kPerms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
      {1, 2, 0},  // (012): 0->1->2->0
      {2, 0, 1},  // (021): 0->2->1->0
  }};
  if (g < 0 || g >= 6) throw std::out_of_range("S3 element index " + std::to_string(g));
  return kPerms[g];
}

GroupPtr make_symmetric_group_3() {
  CayleyTable t;
  t.name = "S3";
  t.labels = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
  t.compose.assign(6, std::vector<Element>(6));
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) {
      const auto& pa = s3_permutation(a);
      const auto& pb = s3_permutation(b);
      std::vector<int> ab(3);
      for (int i = 0; i < 3; ++i) ab[i] = pa[pb[i]];
      for (Element c = 0; c < 6; ++c) {
        if (s3_permutation(c) == ab) t.compose[a][b] = c;
      }
    }
  }
  return std::make_shared<const GroupTable>(std::move(t));
}

PermutationMatrix::PermutationMatrix(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> hit(mapping_.size(), false);
  for (auto m : mapping_) {
    if (m >= mapping_.size() || hit[m]) throw std::invalid_argument("permutation mapping is not a bijection");
    hit[m] = true;
  }
}

ComplexMatrix PermutationMatrix::dense() const {
  ComplexMatrix m(mapping_.size(), mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) m(mapping_[i], i) = 1.0;
  return m;
}

PermutationMatrix PermutationMatrix::operator*(const PermutationMatrix& rhs) const {
  if (rhs.dimension() != dimension()) throw ShapeError("permutation product dimension mismatch");
  std::vector<std::size_t> out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mapping_[rhs.mapping_[i]];
  return PermutationMatrix(std::move(out));
}

PermutationMatrix left_regular_representation(const GroupTable& group, Element g) {
  if (!group.contains(g)) {
    throw std::out_of_range("element " + std::to_string(g) + " not in group " + group.name());
  }
  std::vector<std::size_t> mapping(group.order());
  for (std::size_t h = 0; h < group.order(); ++h) {
    mapping[h] = static_cast<std::size_t>(group.compose(g, static_cast<Element>(h)));
  }
  return PermutationMatrix(std::move(mapping));
}

}  // namespace qrf

#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "sact/universe.hpp"

namespace sact {

/// An abstract class of acts, represented extensionally as a membership
/// mask over one universe. Classes are isomorphism-closed by construction
/// (the universe stores one act per class) and always contain the trivial
/// acts; the constructor forces them in.
class ActClass {
 public:
  ActClass(Universe const& u, std::vector<bool> members, std::string label = "")
      : u_(&u), members_(std::move(members)), label_(std::move(label)) {
    assert(static_cast<int>(members_.size()) == u.size());
    for (int i : u.trivial_indices()) members_[i] = true;
  }

  static ActClass trivials(Universe const& u, std::string label = "trivials") {
    return ActClass(u, std::vector<bool>(u.size(), false), std::move(label));
  }

  static ActClass all(Universe const& u, std::string label = "all") {
    return ActClass(u, std::vector<bool>(u.size(), true), std::move(label));
  }

  static ActClass from_indices(Universe const& u,
                               std::vector<int> const& indices,
                               std::string label = "") {
    std::vector<bool> members(u.size(), false);
    for (int i : indices) {
      assert(i >= 0 && i < u.size());
      members[i] = true;
    }
    return ActClass(u, std::move(members), std::move(label));
  }

  Universe const& universe() const noexcept { return *u_; }
  bool contains(int index) const { return members_[index]; }
  std::vector<bool> const& mask() const noexcept { return members_; }

  int count() const {
    int c = 0;
    for (bool b : members_)
      if (b) ++c;
    return c;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(members_.size()); ++i)
      if (members_[i]) out.push_back(i);
    return out;
  }

  std::string const& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Equality is extensional; labels are cosmetic.
  bool operator==(ActClass const& other) const {
    return members_ == other.members_;
  }

 private:
  Universe const* u_;
  std::vector<bool> members_;
  std::string label_;
};

/// Every act class over the universe: one per subset of the non-trivial
/// acts, in mask-lexicographic order (trivials-only first, everything last).
inline std::vector<ActClass> all_act_classes(Universe const& u) {
  std::vector<int> frees;
  for (int i = 0; i < u.size(); ++i)
    if (u.act(i).size() > 1) frees.push_back(i);
  std::vector<ActClass> out;
  auto nfree = frees.size();
  assert(nfree < 24);
  for (unsigned long long bits = 0; bits < (1ull << nfree); ++bits) {
    std::vector<bool> members(u.size(), false);
    std::string label = "{";
    for (std::size_t k = 0; k < nfree; ++k)
      if (bits >> k & 1ull) {
        members[frees[k]] = true;
        if (label.size() > 1) label += ' ';
        label += u.act_name(frees[k]);
      }
    label += '}';
    out.push_back(ActClass(u, std::move(members), std::move(label)));
  }
  return out;
}

}  // namespace sact

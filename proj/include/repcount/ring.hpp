#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace repcount {

  // A polynomial-ring indeterminate: either the (i, j) entry of the l-th
  // generic matrix (1-based) or a named auxiliary variable.
  struct VariableId {
    enum class Kind { entry, auxiliary };

    Kind        kind  = Kind::entry;
    int         row   = 0;
    int         col   = 0;
    int         gen   = 0;
    std::string tag   = {};
    int         index = 0;

    static VariableId entry(int i, int j, int l) {
      return {Kind::entry, i, j, l, {}, 0};
    }
    static VariableId auxiliary(std::string tag, int index = 0) {
      return {Kind::auxiliary, 0, 0, 0, std::move(tag), index};
    }

    [[nodiscard]] std::string name() const;

    friend bool operator==(VariableId const&, VariableId const&) = default;
  };

  // Ordered list of variables; position = rank (position 0 is the largest
  // variable for every monomial order).
  class Ring {
   public:
    Ring() = default;
    explicit Ring(std::vector<VariableId> vars);

    // n*n*s entry variables ranked by (l, i, j) lexicographically.
    static Ring matrix_entries(int n, int s);

    [[nodiscard]] size_t size() const noexcept { return vars_.size(); }
    [[nodiscard]] VariableId const& variable(size_t i) const { return vars_[i]; }
    [[nodiscard]] std::vector<VariableId> const& variables() const noexcept {
      return vars_;
    }
    [[nodiscard]] std::string name(size_t i) const { return vars_[i].name(); }
    [[nodiscard]] std::optional<size_t> index_of(VariableId const& v) const;

    // New ring with extra variables ranked above / below the current ones.
    [[nodiscard]] Ring with_front(std::vector<VariableId> const& extra) const;
    [[nodiscard]] Ring with_back(std::vector<VariableId> const& extra) const;

    friend bool operator==(Ring const&, Ring const&) = default;

   private:
    std::vector<VariableId> vars_;
  };

  using RingPtr = std::shared_ptr<Ring const>;

  inline RingPtr make_ring(Ring r) {
    return std::make_shared<Ring const>(std::move(r));
  }

}  // namespace repcount

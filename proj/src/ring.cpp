#include "repcount/ring.hpp"

#include <stdexcept>

#include "repcount/monomial.hpp"

namespace repcount {

  std::string VariableId::name() const {
    if (kind == Kind::entry) {
      return "x[" + std::to_string(row) + "," + std::to_string(col) + ","
             + std::to_string(gen) + "]";
    }
    return index == 0 ? tag : tag + std::to_string(index);
  }

  Ring::Ring(std::vector<VariableId> vars) : vars_(std::move(vars)) {
    if (vars_.size() > kMaxVariables) {
      throw std::length_error("ring has " + std::to_string(vars_.size())
                              + " variables; at most "
                              + std::to_string(kMaxVariables)
                              + " are supported");
    }
    for (size_t a = 0; a < vars_.size(); ++a) {
      for (size_t b = a + 1; b < vars_.size(); ++b) {
        if (vars_[a] == vars_[b]) {
          throw std::invalid_argument("duplicate variable " + vars_[a].name());
        }
      }
    }
  }

  Ring Ring::matrix_entries(int n, int s) {
    std::vector<VariableId> vars;
    for (int l = 1; l <= s; ++l) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          vars.push_back(VariableId::entry(i, j, l));
        }
      }
    }
    return Ring(std::move(vars));
  }

  std::optional<size_t> Ring::index_of(VariableId const& v) const {
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == v) {
        return i;
      }
    }
    return std::nullopt;
  }

  Ring Ring::with_front(std::vector<VariableId> const& extra) const {
    std::vector<VariableId> vars = extra;
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    return Ring(std::move(vars));
  }

  Ring Ring::with_back(std::vector<VariableId> const& extra) const {
    std::vector<VariableId> vars = vars_;
    vars.insert(vars.end(), extra.begin(), extra.end());
    return Ring(std::move(vars));
  }

}  // namespace repcount

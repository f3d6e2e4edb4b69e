#pragma once

#include <string>
#include <vector>

#include "wfid/errors.hpp"
#include "wfid/partitions.hpp"
#include "wfid/scalar.hpp"

namespace wfid {

// Where a factor sits in the kernel. Numerator factors of the kernel are the
// poles of the integrand fg / kernel.
enum class Position { Numerator, Denominator };

// Identifies the role of a kernel factor for diagnostics and designated poles.
struct FactorTag {
  enum class Kind { Point, Ratio } kind = Kind::Point;
  int a = 0;  // first variable (0-based)
  int b = -1;  // second variable for Ratio factors
  int m = 0;  // parameter index for Point factors
  PointKind side = PointKind::X;
  std::string str() const;
};

// Iterated residue weight W(pt) with Res fg/K prod dt/t = W(pt) fg(pt).
// Variables are substituted from the last to the first. A factor becomes fully
// substituted at the step equal to its smallest variable; at that step exactly
// one numerator factor must vanish and no denominator factor may.
//
// Kernel requirements: Value, terms(), one(), pole_weight(term, pt, a),
// term_value(term, pt); each term has min_var, pos, tag and vanishes(pt).
template <class Kernel>
typename Kernel::Value kernel_residue_weight(const Kernel& kernel, const std::vector<Scalar>& pt) {
  const auto& terms = kernel.terms();
  std::vector<bool> used(terms.size(), false);
  auto w = kernel.one();
  for (int a = static_cast<int>(pt.size()) - 1; a >= 0; --a) {
    std::size_t pole = terms.size();
    int poles = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& term = terms[k];
      if (term.min_var != a || !term.vanishes(pt)) continue;
      if (term.pos == Position::Denominator) {
        throw PoleOrderError("step t_" + std::to_string(a + 1) + ": denominator factor " + term.tag.str() +
                             " vanishes");
      }
      ++poles;
      pole = k;
    }
    if (poles != 1) {
      throw PoleOrderError("step t_" + std::to_string(a + 1) + ": " + std::to_string(poles) +
                           " vanishing kernel factors (need exactly one)");
    }
    used[pole] = true;
    w *= kernel.pole_weight(terms[pole], pt, a);
  }
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (used[k]) continue;
    auto v = kernel.term_value(terms[k], pt);
    if (terms[k].pos == Position::Numerator) {
      w /= v;
    } else {
      w *= v;
    }
  }
  return w;
}

}  // namespace wfid

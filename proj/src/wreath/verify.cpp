#include <cstdlib>
#include <map>

#include "wfk/wreath/heisenberg.hpp"

namespace wfk::wreath {

Report heisenberg_relations_report(const GroupHandle& base, int modes, int levels, std::size_t budget) {
  Report r;
  r.suite = "wreath-heisenberg";
  const int k_irr = static_cast<int>(base->characters().size());
  const int top = levels + modes;
  std::map<std::pair<int, int>, LevelOperator> ops;
  for (int k = -modes; k <= modes; ++k) {
    if (k == 0) continue;
    for (int i = 0; i < k_irr; ++i)
      ops[{k, i}] = heisenberg_p(base, k, groups::ClassFunction::irreducible(base, i), top, budget);
  }
  auto id = LevelOperator::identity(base, levels);
  for (int k = -modes; k <= modes; ++k) {
    for (int l = -modes; l <= modes; ++l) {
      if (k == 0 || l == 0) continue;
      for (int i = 0; i < k_irr; ++i) {
        for (int j = 0; j < k_irr; ++j) {
          auto br = commutator(ops.at({k, i}), ops.at({l, j})).restricted(levels);
          CycNum c(0);
          if (k == -l)
            c = CycNum(-k) * groups::inner_product(groups::ClassFunction::irreducible(base, i),
                                                   groups::ClassFunction::irreducible(base, j));
          for (int a = std::max(0, -(k + l)); a <= levels; ++a) {
            std::string probe = "[p_" + std::to_string(k) + "(" + std::to_string(i) + "), p_" + std::to_string(l) +
                                "(" + std::to_string(j) + ")] level=" + std::to_string(a);
            if (!br.has_block(a)) {
              r.add(probe, "undefined", "defined", false);
              continue;
            }
            Mat expected(br.block(a).rows(), br.block(a).cols());
            if (k + l == 0) expected = c * id.block(a);
            r.add(probe, exact::to_string(br.block(a)), exact::to_string(expected), br.block(a) == expected);
          }
        }
      }
    }
  }
  return r;
}

}  // namespace wfk::wreath
